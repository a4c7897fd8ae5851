#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "exact/rational.hpp"

namespace netlts {

struct CheckOptions {
  /// Maximum number of counterexamples kept per identity.
  std::size_t witness_limit = 1;
};

/// A basis tuple at which an identity failed, with both sides evaluated.
struct Witness {
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
};

/// Outcome of checking one identity over all basis tuples. Witnesses are
/// the first violations in lexicographic tuple order.
struct Verdict {
  std::string identity;
  bool pass = true;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;
};

/// Collection of verdicts for a multi-identity check.
struct Report {
  std::vector<Verdict> verdicts;

  bool pass() const;
  const Verdict* find(std::string_view identity) const;
  /// Throws InternalError when the identity is absent.
  const Verdict& at(std::string_view identity) const;
  const Verdict* first_failure() const;
  void append(const Report& other);
  void append(Verdict v) { verdicts.push_back(std::move(v)); }
};

/// Accumulates comparisons for one identity.
class IdentityTally {
 public:
  IdentityTally(std::string identity, const CheckOptions& options);

  /// Records lhs == rhs at the given basis tuple; returns whether they agree.
  bool compare(std::vector<std::size_t> indices, const Vector& lhs, const Vector& rhs);
  /// Records a vanishing condition (rhs is the zero vector).
  bool expect_zero(std::vector<std::size_t> indices, const Vector& value);

  Verdict finish() &&;

 private:
  Verdict verdict_;
  std::size_t limit_;
};

}  // namespace netlts
