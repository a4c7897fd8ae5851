#include "graded/cochain.hpp"

#include <string>

#include "exact/errors.hpp"

namespace netlts {

Cochain::Cochain(std::size_t in_dim, std::size_t out_dim, std::size_t arity, Space space)
    : in_(in_dim), out_(out_dim), arity_(arity), space_(space), wedges_(in_dim) {
  if (arity == 0) throw InputError("cochain arity must be at least 1");
  if (arity > kMaxArity) throw InputError("cochain arity " + std::to_string(arity) + " exceeds the supported maximum");
  std::size_t count = in_dim;
  for (std::size_t s = 1; s < arity; ++s) count *= wedges_.size();
  values_.assign(count, Vector(out_dim));
}

Cochain Cochain::from_matrix(const Matrix& m, Space space) {
  Cochain c(m.cols(), m.rows(), 1, space);
  for (std::size_t j = 0; j < m.cols(); ++j) c.values_[j] = m.column(j);
  return c;
}

Cochain Cochain::from_bracket(const TriBracket& b, Space space) {
  if (!b.is_skew_in_first_two()) throw InputError("bracket is not skew in its first two slots");
  const std::size_t n = b.dim();
  Cochain c(n, n, 2, space);
  for (std::size_t p = 0; p < c.wedges_.size(); ++p) {
    const auto [i, j] = c.wedges_.pair(p);
    for (std::size_t k = 0; k < n; ++k) c.values_[p * n + k] = b.at(i, j, k);
  }
  return c;
}

std::size_t Cochain::flat(const ArgTuple& t) const {
  if (t.pairs.size() + 1 != arity_) throw InputError("argument tuple has wrong arity");
  std::size_t idx = 0;
  for (std::size_t p : t.pairs) {
    if (p >= wedges_.size()) throw InputError("wedge index out of range");
    idx = idx * wedges_.size() + p;
  }
  if (t.last >= in_) throw InputError("final index out of range");
  return idx * in_ + t.last;
}

ArgTuple Cochain::tuple(std::size_t flat) const {
  ArgTuple t;
  t.pairs.resize(arity_ - 1);
  t.last = flat % in_;
  flat /= in_;
  for (std::size_t s = arity_ - 1; s-- > 0;) {
    t.pairs[s] = flat % wedges_.size();
    flat /= wedges_.size();
  }
  return t;
}

void Cochain::set(std::size_t flat, Vector v) {
  if (v.size() != out_) throw InputError("cochain value has wrong dimension");
  values_.at(flat) = std::move(v);
}

Vector Cochain::eval_wedges(const std::vector<WedgeVector>& pairs, const Vector& last) const {
  if (pairs.size() + 1 != arity_ || last.size() != in_) throw InputError("cochain evaluated with wrong argument shape");
  Vector out(out_);
  const std::size_t slots = pairs.size();
  for (const auto& p : pairs)
    if (p.empty()) return out;
  std::vector<std::size_t> cursor(slots, 0);
  Rational coeff, full;
  while (true) {
    coeff = Rational(1);
    std::size_t base = 0;
    for (std::size_t s = 0; s < slots; ++s) {
      coeff *= pairs[s][cursor[s]].second;
      base = base * wedges_.size() + pairs[s][cursor[s]].first;
    }
    for (std::size_t l = 0; l < in_; ++l) {
      if (last[l].is_zero()) continue;
      full = coeff * last[l];
      const Vector& v = values_[base * in_ + l];
      for (std::size_t r = 0; r < out_; ++r)
        if (!v[r].is_zero()) add_product(out[r], full, v[r]);
    }
    std::size_t s = slots;
    while (s > 0) {
      --s;
      if (++cursor[s] < pairs[s].size()) break;
      cursor[s] = 0;
      if (s == 0) return out;
    }
    if (slots == 0) return out;
  }
}

Vector Cochain::eval(const std::vector<std::pair<Vector, Vector>>& pairs, const Vector& last) const {
  std::vector<WedgeVector> w;
  w.reserve(pairs.size());
  for (const auto& [x, y] : pairs) w.push_back(wedges_.wedge(x, y));
  return eval_wedges(w, last);
}

Matrix Cochain::to_matrix() const {
  if (arity_ != 1) throw InputError("only arity-1 cochains convert to matrices");
  return Matrix::from_columns(values_, out_);
}

TriBracket Cochain::to_bracket() const {
  if (arity_ != 2) throw InputError("only arity-2 cochains convert to brackets");
  if (in_ != out_) throw InputError("bracket conversion needs equal input and output dimension");
  TriBracket b(in_);
  for (std::size_t i = 0; i < in_; ++i)
    for (std::size_t j = 0; j < in_; ++j) {
      const auto s = wedges_.canonical(i, j);
      if (!s) continue;
      for (std::size_t k = 0; k < in_; ++k) b.set(i, j, k, Rational(s->sign) * values_[s->index * in_ + k]);
    }
  return b;
}

bool Cochain::is_zero() const {
  for (const auto& v : values_)
    if (!netlts::is_zero(v)) return false;
  return true;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (!same_shape(o)) throw InputError("cochain shapes differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = values_[i] + o.values_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (!same_shape(o)) throw InputError("cochain shapes differ");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = values_[i] - o.values_[i];
  return *this;
}

Cochain operator*(const Rational& c, Cochain a) {
  for (auto& v : a.values_) v = c * v;
  return a;
}

const char* to_string(Cochain::Space s) {
  switch (s) {
    case Cochain::Space::E:
      return "E";
    case Cochain::Space::F:
      return "F";
    default:
      return "plain";
  }
}

}  // namespace netlts
