#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "exact/rational.hpp"

namespace netlts {

/// Canonical basis element e_i ^ e_j of the exterior square, with i < j.
struct WedgeIndex {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const WedgeIndex&, const WedgeIndex&) = default;
};

/// A wedge-pair index together with the sign picked up when canonicalizing.
struct SignedWedge {
  std::size_t index = 0;
  int sign = 1;
};

/// Sparse element of the exterior square in the canonical wedge basis.
using WedgeVector = std::vector<std::pair<std::size_t, Rational>>;

/// Lexicographic enumeration of {(i, j) : i < j < dim}.
class WedgeBasis {
 public:
  explicit WedgeBasis(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return pairs_.size(); }
  const WedgeIndex& pair(std::size_t index) const { return pairs_.at(index); }

  /// Canonical index of e_i ^ e_j: (j, i) maps to (i, j) with sign -1,
  /// (i, i) is the zero element and yields nullopt.
  std::optional<SignedWedge> canonical(std::size_t i, std::size_t j) const;

  /// Expansion of x ^ y in the canonical basis, zero coefficients dropped.
  WedgeVector wedge(const Vector& x, const Vector& y) const;
  /// The basis element e_index as a sparse wedge vector.
  WedgeVector basis_element(std::size_t index) const { return {{index, Rational(1)}}; }

 private:
  std::size_t dim_;
  std::vector<WedgeIndex> pairs_;
  std::vector<std::size_t> lookup_;  // dim*dim table, only i<j entries used
};

/// A (p,q)-shuffle: perm[t] is the image of position t (0-based). The first
/// p images and the last q images are each strictly increasing.
struct Shuffle {
  std::vector<std::size_t> perm;
  int sign = 1;
};

/// All binomial(p+q, p) shuffles, ordered lexicographically by the first block.
std::vector<Shuffle> shuffles(std::size_t p, std::size_t q);

int permutation_sign(std::span<const std::size_t> perm);

std::uint64_t binomial(std::size_t n, std::size_t k);

}  // namespace netlts
