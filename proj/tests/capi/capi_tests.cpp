#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <thread>

#include <json.hpp>

#include "netlts/netlts.h"

using Json = nlohmann::json;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(NETLTS_FIXTURES) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

netlts_algebra* algebra(const std::string& name) {
  netlts_algebra* a = nullptr;
  REQUIRE(netlts_algebra_parse(fixture(name).c_str(), &a) == NETLTS_OK);
  return a;
}

netlts_matrix* matrix(const std::string& name) {
  netlts_matrix* m = nullptr;
  REQUIRE(netlts_matrix_parse(fixture(name).c_str(), &m) == NETLTS_OK);
  return m;
}

Json take(char* s) {
  REQUIRE(s != nullptr);
  Json j = Json::parse(s);
  netlts_string_free(s);
  return j;
}

// L3 with its adjoint action
struct L3 {
  netlts_algebra* a = algebra("l3.json");
  netlts_action* theta = nullptr;
  netlts_context* ctx = nullptr;
  L3() {
    REQUIRE(netlts_action_adjoint(a, &theta) == NETLTS_OK);
    REQUIRE(netlts_context_new(a, a, theta, &ctx, nullptr) == NETLTS_OK);
  }
  ~L3() {
    netlts_context_free(ctx);
    netlts_action_free(theta);
    netlts_algebra_free(a);
  }
};

}  // namespace

TEST_CASE("parsing reports input errors with a location") {
  netlts_matrix* m = nullptr;
  CHECK(netlts_matrix_parse(fixture("bad_rational.json").c_str(), &m) == NETLTS_INPUT_ERROR);
  CHECK(m == nullptr);
  CHECK(std::string(netlts_last_error()).find("$.matrix[1][1]") != std::string::npos);
  CHECK(netlts_matrix_parse("{\"rows\":1,", &m) == NETLTS_INPUT_ERROR);
  CHECK(std::string(netlts_last_error()).find("byte") != std::string::npos);
  CHECK(netlts_matrix_parse(nullptr, &m) == NETLTS_INPUT_ERROR);

  netlts_algebra* a = nullptr;
  CHECK(netlts_algebra_parse(fixture("l3_bad_index.json").c_str(), &a) == NETLTS_INPUT_ERROR);
  CHECK(std::string(netlts_last_error()).find("out of range") != std::string::npos);

  char* out = nullptr;
  CHECK(netlts_matrix_json(nullptr, &out) == NETLTS_INPUT_ERROR);
  CHECK(out == nullptr);
}

TEST_CASE("handles round-trip through JSON") {
  for (const char* name : {"l3.json", "affine.json", "heisenberg.json"}) {
    netlts_algebra* a = algebra(name);
    char* text = nullptr;
    REQUIRE(netlts_algebra_json(a, &text) == NETLTS_OK);
    netlts_algebra* b = nullptr;
    REQUIRE(netlts_algebra_parse(text, &b) == NETLTS_OK);
    char* again = nullptr;
    REQUIRE(netlts_algebra_json(b, &again) == NETLTS_OK);
    CHECK(std::string(text) == std::string(again));
    netlts_string_free(text);
    netlts_string_free(again);
    netlts_algebra_free(a);
    netlts_algebra_free(b);
  }
  netlts_matrix* m = matrix("tstar.json");
  char* text = nullptr;
  REQUIRE(netlts_matrix_json(m, &text) == NETLTS_OK);
  CHECK(take(text)["matrix"][1][1] == "1/2");
  netlts_matrix_free(m);

  netlts_cochain* c = nullptr;
  REQUIRE(netlts_cochain_parse(fixture("cochain_arity2.json").c_str(), 3, 3, &c) == NETLTS_OK);
  REQUIRE(netlts_cochain_json(c, &text) == NETLTS_OK);
  const Json cj = take(text);
  CHECK(cj["arity"] == 2);
  CHECK(cj["entries"].size() == 3);
  netlts_cochain_free(c);
}

TEST_CASE("status codes follow the check outcome") {
  L3 l3;
  CHECK(netlts_context_dim(l3.ctx) == 3);
  netlts_options opt;
  netlts_options_init(&opt);
  CHECK(opt.witness_limit == 1);

  netlts_matrix* id = matrix("identity.json");
  netlts_matrix* ts = matrix("tstar.json");
  char* r = nullptr;
  CHECK(netlts_net_check(l3.ctx, id, &opt, &r) == NETLTS_CHECK_FAILED);
  const Json fail = take(r);
  CHECK(fail["pass"] == false);
  CHECK(fail["verdicts"]["net.equation"]["witnesses"].size() == 1);
  CHECK(netlts_net_check(l3.ctx, ts, nullptr, &r) == NETLTS_OK);
  CHECK(take(r)["pass"] == true);

  CHECK(netlts_descend(l3.ctx, id, nullptr, &r) == NETLTS_CHECK_FAILED);
  CHECK(take(r).contains("precondition"));

  CHECK(netlts_cohomology(l3.ctx, ts, 1, nullptr, &r) == NETLTS_OK);
  CHECK(take(r).contains("dimH"));
  CHECK(netlts_cohomology(l3.ctx, ts, 7, nullptr, &r) == NETLTS_INPUT_ERROR);
  CHECK(r == nullptr);

  netlts_matrix* small = matrix("wrong_shape.json");
  CHECK(netlts_net_check(l3.ctx, small, nullptr, &r) == NETLTS_INPUT_ERROR);
  CHECK(netlts_net_check(nullptr, ts, nullptr, &r) == NETLTS_INPUT_ERROR);
  netlts_matrix_free(small);
  netlts_matrix_free(id);
  netlts_matrix_free(ts);
}

TEST_CASE("non-coherent actions are rejected when the context is built") {
  netlts_algebra* a = algebra("l3.json");
  netlts_action* theta = nullptr;
  // theta(e1,e1) = identity is not central-valued on L3
  REQUIRE(netlts_action_parse(
              R"({"acting_dim":3,"acted_dim":3,"theta":[{"x":0,"y":0,"matrix":[["1","0","0"],["0","1","0"],["0","0","1"]]}]})",
              &theta) == NETLTS_OK);
  netlts_context* ctx = nullptr;
  char* report = nullptr;
  CHECK(netlts_context_new(a, a, theta, &ctx, &report) == NETLTS_CHECK_FAILED);
  CHECK(ctx == nullptr);
  CHECK(take(report)["precondition"]["report"]["pass"] == false);
  netlts_action_free(theta);

  netlts_algebra* lie = algebra("affine.json");
  CHECK(netlts_context_new(lie, lie, nullptr, &ctx, nullptr) == NETLTS_INPUT_ERROR);
  netlts_algebra_free(lie);
  netlts_algebra_free(a);
}

TEST_CASE("deformation and Nijenhuis operations") {
  L3 l3;
  netlts_matrix* ts = matrix("tstar.json");
  netlts_matrix* t1 = matrix("trivial_direction.json");
  netlts_pair* pair = nullptr;
  REQUIRE(netlts_pair_parse(fixture("pair_e1e2.json").c_str(), &pair) == NETLTS_OK);
  char* r = nullptr;
  CHECK(netlts_trivial_deform(l3.ctx, ts, pair, nullptr, &r) == NETLTS_OK);
  const Json j = take(r);
  CHECK(j["map"]["matrix"][2][0] == "-1");
  CHECK(j["verdicts"].contains("5.1"));
  CHECK(netlts_deform_check(l3.ctx, ts, t1, nullptr, &r) == NETLTS_OK);
  CHECK(take(r)["verdicts"]["5.2"]["pass"] == true);
  CHECK(netlts_nijenhuis(l3.ctx, ts, pair, nullptr, &r) == NETLTS_OK);
  take(r);
  netlts_pair_free(pair);
  netlts_matrix_free(t1);
  netlts_matrix_free(ts);
}

TEST_CASE("Lie bridge operations") {
  netlts_algebra* L = algebra("affine.json");
  netlts_algebra* Lp = algebra("abelian1.json");
  netlts_lie_action* rho = nullptr;
  REQUIRE(netlts_lie_action_parse(fixture("rho_scalar.json").c_str(), 2, 1, &rho) == NETLTS_OK);
  netlts_matrix* T = matrix("lie_net.json");
  char* r = nullptr;
  CHECK(netlts_lie_action_check(L, Lp, rho, nullptr, &r) == NETLTS_OK);
  CHECK(take(r).contains("theta"));
  CHECK(netlts_transport(L, Lp, rho, T, nullptr, &r) == NETLTS_OK);
  take(r);
  CHECK(netlts_lie2lts(L, nullptr, &r) == NETLTS_OK);
  CHECK(take(r)["algebra"]["kind"] == "lts");
  CHECK(netlts_lie2lts(Lp, nullptr, &r) == NETLTS_OK);
  take(r);
  netlts_matrix_free(T);
  netlts_lie_action_free(rho);
  netlts_algebra_free(Lp);
  netlts_algebra_free(L);
}

TEST_CASE("the last error is per thread") {
  netlts_matrix* m = nullptr;
  CHECK(netlts_matrix_parse("[", &m) == NETLTS_INPUT_ERROR);
  std::string other;
  std::thread t([&] { other = netlts_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(!std::string(netlts_last_error()).empty());
  m = matrix("identity.json");
  CHECK(std::string(netlts_last_error()).empty());
  netlts_matrix_free(m);
}
