#include "exact/combinatorics.hpp"

#include "exact/errors.hpp"

namespace netlts {

WedgeBasis::WedgeBasis(std::size_t dim) : dim_(dim), lookup_(dim * dim, 0) {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      lookup_[i * dim + j] = pairs_.size();
      pairs_.push_back({i, j});
    }
}

std::optional<SignedWedge> WedgeBasis::canonical(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw InputError("wedge index out of range");
  if (i == j) return std::nullopt;
  if (i < j) return SignedWedge{lookup_[i * dim_ + j], 1};
  return SignedWedge{lookup_[j * dim_ + i], -1};
}

WedgeVector WedgeBasis::wedge(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw InputError("wedge argument dimension mismatch");
  WedgeVector out;
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    const auto [i, j] = pairs_[p];
    Rational c;
    add_product(c, x[i], y[j]);
    add_product(c, -x[j], y[i]);
    if (!c.is_zero()) out.emplace_back(p, std::move(c));
  }
  return out;
}

int permutation_sign(std::span<const std::size_t> perm) {
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

std::vector<Shuffle> shuffles(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  std::vector<Shuffle> out;
  std::vector<std::size_t> first(p);
  for (std::size_t t = 0; t < p; ++t) first[t] = t;
  while (true) {
    Shuffle s;
    s.perm = first;
    std::vector<bool> used(n, false);
    for (auto v : first) used[v] = true;
    for (std::size_t v = 0; v < n; ++v)
      if (!used[v]) s.perm.push_back(v);
    s.sign = permutation_sign(s.perm);
    out.push_back(std::move(s));
    // next p-subset in lexicographic order
    std::size_t t = p;
    while (t > 0 && first[t - 1] == n - p + (t - 1)) --t;
    if (t == 0) break;
    ++first[t - 1];
    for (std::size_t u = t; u < p; ++u) first[u] = first[u - 1] + 1;
  }
  return out;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace netlts
