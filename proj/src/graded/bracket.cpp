#include "graded/bracket.hpp"

#include <string>

#include "exact/errors.hpp"

namespace netlts {

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

class LeafNode final : public CochainNode {
 public:
  explicit LeafNode(Cochain c) : CochainNode(c.in_dim(), c.degree()), c_(std::move(c)) {}
  const Vector& entry(std::size_t flat) const override { return c_.at(flat); }

 private:
  Cochain c_;
};

// Shuffle tables for P o Q with deg P = p and deg Q = q.
struct CircPlan {
  std::size_t p = 0;
  std::size_t q = 0;
  std::vector<std::vector<Shuffle>> inner;  // inner[k-1] = S(k-1, q), k = 1..p
  std::vector<Shuffle> outer;               // S(p, q)

  CircPlan(std::size_t p_, std::size_t q_) : p(p_), q(q_), outer(shuffles(p_, q_)) {
    for (std::size_t k = 1; k <= p; ++k) inner.push_back(shuffles(k - 1, q));
  }
};

void circ_value(const CochainNode& P, const CochainNode& Q, const CircPlan& plan, const std::vector<std::size_t>& pairs,
                std::size_t x, Vector& out) {
  const std::size_t p = plan.p, q = plan.q;
  const WedgeBasis& wb = P.wedges();
  const std::size_t dim = P.dim();
  std::vector<std::size_t> qpairs(q), ppairs(p);
  Rational c;

  // insertion of Q into the left or right member of pair slot k
  for (std::size_t k = 1; k <= p; ++k) {
    const int sign_k = ((k - 1) * q) % 2 ? -1 : 1;
    const WedgeIndex target = wb.pair(pairs[k + q - 1]);
    for (std::size_t t = k; t < p; ++t) ppairs[t] = pairs[t + q];
    for (const Shuffle& s : plan.inner[k - 1]) {
      const int sign = sign_k * s.sign;
      for (std::size_t t = 0; t + 1 < k; ++t) ppairs[t] = pairs[s.perm[t]];
      for (std::size_t t = 0; t < q; ++t) qpairs[t] = pairs[s.perm[k - 1 + t]];

      for (int side = 0; side < 2; ++side) {
        const std::size_t replaced = side == 0 ? target.i : target.j;
        const std::size_t kept = side == 0 ? target.j : target.i;
        const Vector& v = Q.entry(Q.flat(qpairs, replaced));
        for (std::size_t l = 0; l < dim; ++l) {
          if (v[l].is_zero()) continue;
          const auto w = side == 0 ? wb.canonical(l, kept) : wb.canonical(kept, l);
          if (!w) continue;
          ppairs[k - 1] = w->index;
          const Vector& pv = P.entry(P.flat(ppairs, x));
          c = (sign * w->sign) * v[l];
          for (std::size_t r = 0; r < dim; ++r)
            if (!pv[r].is_zero()) add_product(out[r], c, pv[r]);
        }
      }
    }
  }

  // insertion of Q into the final slot
  const int sign_pq = (p * q) % 2 ? -1 : 1;
  for (const Shuffle& s : plan.outer) {
    for (std::size_t t = 0; t < p; ++t) ppairs[t] = pairs[s.perm[t]];
    for (std::size_t t = 0; t < q; ++t) qpairs[t] = pairs[s.perm[p + t]];
    const Vector& v = Q.entry(Q.flat(qpairs, x));
    for (std::size_t l = 0; l < dim; ++l) {
      if (v[l].is_zero()) continue;
      const Vector& pv = P.entry(P.flat(ppairs, l));
      c = (sign_pq * s.sign) * v[l];
      for (std::size_t r = 0; r < dim; ++r)
        if (!pv[r].is_zero()) add_product(out[r], c, pv[r]);
    }
  }
}

void check_compatible(const CochainNode& P, const CochainNode& Q) {
  if (P.dim() != Q.dim()) throw InputError("graded bracket operands live on different spaces");
  if (P.degree() + Q.degree() + 1 > kMaxArity)
    throw InputError("graded bracket result exceeds the supported arity " + std::to_string(kMaxArity));
}

class MemoNode : public CochainNode {
 public:
  MemoNode(std::size_t dim, std::size_t degree) : CochainNode(dim, degree), memo_(tuple_count()) {}

  const Vector& entry(std::size_t flat) const final {
    auto& slot = memo_[flat];
    if (!slot) {
      std::vector<std::size_t> pairs(degree_);
      std::size_t rest = flat / dim_;
      for (std::size_t s = degree_; s-- > 0;) {
        pairs[s] = rest % wedges_.size();
        rest /= wedges_.size();
      }
      Vector out(dim_);
      compute(pairs, flat % dim_, out);
      slot = std::move(out);
    }
    return *slot;
  }

 protected:
  virtual void compute(const std::vector<std::size_t>& pairs, std::size_t last, Vector& out) const = 0;

 private:
  mutable std::vector<std::optional<Vector>> memo_;
};

class CircNode final : public MemoNode {
 public:
  CircNode(NodePtr P, NodePtr Q)
      : MemoNode(P->dim(), P->degree() + Q->degree()), P_(std::move(P)), Q_(std::move(Q)), plan_(P_->degree(), Q_->degree()) {}

 private:
  void compute(const std::vector<std::size_t>& pairs, std::size_t last, Vector& out) const override {
    circ_value(*P_, *Q_, plan_, pairs, last, out);
  }

  NodePtr P_, Q_;
  CircPlan plan_;
};

class BracketNode final : public MemoNode {
 public:
  BracketNode(NodePtr P, NodePtr Q)
      : MemoNode(P->dim(), P->degree() + Q->degree()),
        P_(std::move(P)),
        Q_(std::move(Q)),
        pq_(P_->degree(), Q_->degree()),
        qp_(Q_->degree(), P_->degree()) {}

 private:
  void compute(const std::vector<std::size_t>& pairs, std::size_t last, Vector& out) const override {
    circ_value(*P_, *Q_, pq_, pairs, last, out);
    Vector back(dim_);
    circ_value(*Q_, *P_, qp_, pairs, last, back);
    const bool odd = (P_->degree() * Q_->degree()) % 2;
    for (std::size_t r = 0; r < dim_; ++r) {
      if (odd)
        out[r] += back[r];
      else
        out[r] -= back[r];
    }
  }

  NodePtr P_, Q_;
  CircPlan pq_, qp_;
};

}  // namespace

CochainNode::CochainNode(std::size_t dim, std::size_t degree)
    : dim_(dim), degree_(degree), wedges_(dim), count_(power(wedges_.size(), degree) * dim) {}

std::size_t CochainNode::flat(const std::vector<std::size_t>& pairs, std::size_t last) const {
  std::size_t idx = 0;
  for (std::size_t p : pairs) idx = idx * wedges_.size() + p;
  return idx * dim_ + last;
}

NodePtr leaf(Cochain c) {
  if (c.in_dim() != c.out_dim()) throw InputError("graded bracket needs cochains from a space to itself");
  return std::make_shared<LeafNode>(std::move(c));
}

NodePtr circ_node(NodePtr P, NodePtr Q) {
  check_compatible(*P, *Q);
  return std::make_shared<CircNode>(std::move(P), std::move(Q));
}

NodePtr bracket_node(NodePtr P, NodePtr Q) {
  check_compatible(*P, *Q);
  return std::make_shared<BracketNode>(std::move(P), std::move(Q));
}

Cochain materialize(const CochainNode& node, Cochain::Space space) {
  Cochain out(node.dim(), node.dim(), node.degree() + 1, space);
  for (std::size_t f = 0; f < out.tuple_count(); ++f) out.set(f, node.entry(f));
  return out;
}

Cochain circ(const Cochain& P, const Cochain& Q) {
  const NodePtr node = circ_node(leaf(P), leaf(Q));
  return materialize(*node, P.space());
}

Cochain bracket_3la(const Cochain& P, const Cochain& Q) {
  const NodePtr node = bracket_node(leaf(P), leaf(Q));
  return materialize(*node, P.space());
}

}  // namespace netlts
