#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "algebra/actions.hpp"
#include "cohomology/coboundary.hpp"
#include "deformation/deformation.hpp"
#include "graded/cochain.hpp"
#include "liebridge/liebridge.hpp"

namespace netlts::io {

using Json = nlohmann::json;

/// Parses JSON text; syntax errors become InputError with the byte offset.
Json parse_text(std::string_view text);
/// Key-sorted, two-space indented, trailing newline.
std::string dump(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path = "$");

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, const std::string& path = "$");

/// {"rows":n,"cols":m,"matrix":[[...],...]}
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& path = "$");

/// Structure constants as read from disk, before any axiom check.
struct AlgebraData {
  enum class Kind { Lts, ThreeLeibniz, Lie };
  Kind kind = Kind::Lts;
  std::vector<std::string> basis;
  TriBracket tri;  // Lts and ThreeLeibniz
  BiBracket bi;    // Lie

  std::size_t dim() const { return basis.size(); }
  friend bool operator==(const AlgebraData&, const AlgebraData&) = default;
};
const char* to_string(AlgebraData::Kind k);

Json to_json(const AlgebraData& a);
AlgebraData algebra_from_json(const Json& j, const std::string& path = "$");
AlgebraData algebra_data(const LieTripleSystem& a);
AlgebraData algebra_data(const ThreeLeibnizAlgebra& a);
AlgebraData algebra_data(const LieAlgebra& a);

Json to_json(const ActionTensor& a);
ActionTensor action_from_json(const Json& j, const std::string& path = "$");

/// {"acting_dim":n,"acted_dim":m,"rho":[{"x":i,"matrix":...}]}; the two
/// dimensions may be omitted on input when passed explicitly.
Json to_json(const LieActionTensor& a);
LieActionTensor lie_action_from_json(const Json& j, std::size_t acting_dim = 0, std::size_t acted_dim = 0,
                                     const std::string& path = "$");

/// {"space":..,"arity":..,"in_dim":..,"out_dim":..,"entries":[...]}; the
/// dimensions may be omitted on input when passed explicitly.
Json to_json(const Cochain& c);
Cochain cochain_from_json(const Json& j, std::size_t in_dim = 0, std::size_t out_dim = 0,
                          const std::string& path = "$");

Json to_json(const WedgePair& p);
WedgePair pair_from_json(const Json& j, const std::string& path = "$");

Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j, const std::string& path = "$");
/// {"pass":..,"verdicts":{identity: verdict}}
Json to_json(const Report& r);
Report report_from_json(const Json& j, const std::string& path = "$");

Json to_json(const CohomologyReport& r);
CohomologyReport cohomology_report_from_json(const Json& j, const std::string& path = "$");

}  // namespace netlts::io
