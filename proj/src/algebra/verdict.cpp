#include "algebra/verdict.hpp"

#include "exact/errors.hpp"

namespace netlts {

bool Report::pass() const {
  for (const auto& v : verdicts)
    if (!v.pass) return false;
  return true;
}

const Verdict* Report::find(std::string_view identity) const {
  for (const auto& v : verdicts)
    if (v.identity == identity) return &v;
  return nullptr;
}

const Verdict& Report::at(std::string_view identity) const {
  if (const Verdict* v = find(identity)) return *v;
  throw InternalError("report has no identity '" + std::string(identity) + "'");
}

const Verdict* Report::first_failure() const {
  for (const auto& v : verdicts)
    if (!v.pass) return &v;
  return nullptr;
}

void Report::append(const Report& other) {
  verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
}

IdentityTally::IdentityTally(std::string identity, const CheckOptions& options)
    : limit_(options.witness_limit) {
  verdict_.identity = std::move(identity);
}

bool IdentityTally::compare(std::vector<std::size_t> indices, const Vector& lhs, const Vector& rhs) {
  if (lhs == rhs) return true;
  verdict_.pass = false;
  ++verdict_.violations;
  if (verdict_.witnesses.size() < limit_) verdict_.witnesses.push_back({std::move(indices), lhs, rhs});
  return false;
}

bool IdentityTally::expect_zero(std::vector<std::size_t> indices, const Vector& value) {
  if (is_zero(value)) return true;
  return compare(std::move(indices), value, Vector(value.size()));
}

Verdict IdentityTally::finish() && { return std::move(verdict_); }

}  // namespace netlts
