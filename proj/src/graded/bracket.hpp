#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "graded/cochain.hpp"

namespace netlts {

/// A cochain on a single space V (input and output dimension equal) whose
/// entries may be computed on demand. Nodes are not thread safe; build a
/// separate expression per thread.
class CochainNode {
 public:
  CochainNode(std::size_t dim, std::size_t degree);
  virtual ~CochainNode() = default;

  std::size_t dim() const { return dim_; }
  std::size_t degree() const { return degree_; }
  const WedgeBasis& wedges() const { return wedges_; }
  std::size_t tuple_count() const { return count_; }

  /// Value at the basis tuple with the given flat index (same layout as Cochain).
  virtual const Vector& entry(std::size_t flat) const = 0;

  std::size_t flat(const std::vector<std::size_t>& pairs, std::size_t last) const;

 protected:
  std::size_t dim_;
  std::size_t degree_;
  WedgeBasis wedges_;
  std::size_t count_;
};

using NodePtr = std::shared_ptr<const CochainNode>;

/// Wraps a stored cochain; requires equal input and output dimension.
NodePtr leaf(Cochain c);
/// Lazily evaluated P o Q.
NodePtr circ_node(NodePtr P, NodePtr Q);
/// Lazily evaluated [P, Q] = P o Q - (-1)^{pq} Q o P.
NodePtr bracket_node(NodePtr P, NodePtr Q);

/// Every entry of a node as a stored cochain.
Cochain materialize(const CochainNode& node, Cochain::Space space = Cochain::Space::Plain);

/// Shuffle composition, evaluated on all basis tuples.
Cochain circ(const Cochain& P, const Cochain& Q);
/// Graded commutator.
Cochain bracket_3la(const Cochain& P, const Cochain& Q);

}  // namespace netlts
