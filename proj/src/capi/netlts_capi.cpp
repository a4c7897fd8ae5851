#include "netlts/netlts.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "cohomology/coboundary.hpp"
#include "deformation/deformation.hpp"
#include "graded/derived.hpp"
#include "io/json_io.hpp"
#include "liebridge/liebridge.hpp"

using namespace netlts;
using netlts::io::Json;

struct netlts_algebra {
  io::AlgebraData data;
};
struct netlts_action {
  ActionTensor value;
};
struct netlts_lie_action {
  LieActionTensor value;
};
struct netlts_matrix {
  Matrix value;
};
struct netlts_cochain {
  Cochain value;
};
struct netlts_pair {
  WedgePair value;
};
struct netlts_context {
  ContextPtr ctx;
};

namespace {

thread_local std::string last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw InputError(std::string("null ") + what);
}

template <class F>
netlts_status guard(char** result, F&& body) {
  last_error.clear();
  if (result) *result = nullptr;
  try {
    return body();
  } catch (const AxiomError& e) {
    last_error = e.what();
    if (!result) return NETLTS_CHECK_FAILED;
    Json j{{"pass", false}, {"precondition", {{"message", e.what()}, {"report", io::to_json(e.report())}}}};
    *result = copy_string(io::dump(j));
    return NETLTS_CHECK_FAILED;
  } catch (const InputError& e) {
    last_error = e.what();
    return NETLTS_INPUT_ERROR;
  } catch (const InternalError& e) {
    last_error = std::string("internal consistency failure: ") + e.what();
    return NETLTS_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NETLTS_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown failure";
    return NETLTS_INTERNAL_ERROR;
  }
}

netlts_status emit(char** result, Json j) {
  require(result, "result pointer");
  const bool pass = j.at("pass").get<bool>();
  *result = copy_string(io::dump(j));
  return pass ? NETLTS_OK : NETLTS_CHECK_FAILED;
}

netlts_status emit_report(char** result, const Report& r) { return emit(result, io::to_json(r)); }

template <class Handle, class Make>
netlts_status make_handle(const char* json, Handle** out, Make&& make) {
  return guard(nullptr, [&] {
    require(json, "JSON text");
    require(out, "output handle");
    *out = nullptr;
    *out = new Handle{make(io::parse_text(json))};
    return NETLTS_OK;
  });
}

template <class Handle, class Get>
netlts_status to_text(const Handle* h, const char* role, char** out, Get&& get) {
  return guard(nullptr, [&] {
    require(h, role);
    require(out, "output pointer");
    *out = copy_string(io::dump(io::to_json(get(*h))));
    return NETLTS_OK;
  });
}

CheckOptions check_options(const netlts_options* o) {
  CheckOptions c;
  if (o) c.witness_limit = o->witness_limit;
  return c;
}

LieTripleSystem as_lts(const netlts_algebra* a, const char* role) {
  require(a, role);
  if (a->data.kind != io::AlgebraData::Kind::Lts)
    throw InputError(std::string(role) + " must have kind \"lts\", not \"" + io::to_string(a->data.kind) + "\"");
  return LieTripleSystem::make(a->data.tri, a->data.basis);
}

LieAlgebra as_lie(const netlts_algebra* a, const char* role) {
  require(a, role);
  if (a->data.kind != io::AlgebraData::Kind::Lie)
    throw InputError(std::string(role) + " must have kind \"lie\", not \"" + io::to_string(a->data.kind) + "\"");
  return LieAlgebra::make(a->data.bi, a->data.basis);
}

const NetContext& context(const netlts_context* c) {
  require(c, "context");
  return *c->ctx;
}

const Matrix& map_of(const netlts_matrix* m, const char* role) {
  require(m, role);
  return m->value;
}

Net make_net(const netlts_context* c, const netlts_matrix* T) {
  require(c, "context");
  return Net::make(c->ctx, map_of(T, "map"));
}

const WedgePair& pair_of(const netlts_pair* p, const NetContext& ctx) {
  require(p, "pair");
  if (p->value.a.size() != ctx.dim()) throw InputError("pair vectors must have the dimension of L");
  return p->value;
}

const Cochain& f_cochain(const netlts_cochain* c, const NetContext& ctx) {
  require(c, "cochain");
  if (c->value.in_dim() != ctx.dim_p() || c->value.out_dim() != ctx.dim())
    throw InputError("cochain must take arguments in L' and values in L");
  return c->value;
}

}  // namespace

extern "C" {

void netlts_options_init(netlts_options* options) {
  if (!options) return;
  options->witness_limit = 1;
  options->allow_degree3 = 0;
  options->cocycle_basis = 0;
  options->require_intertwining = 0;
}

const char* netlts_last_error(void) { return last_error.c_str(); }
void netlts_string_free(char* s) { std::free(s); }
const char* netlts_version(void) { return "0.1.0"; }

netlts_status netlts_algebra_parse(const char* json, netlts_algebra** out) {
  return make_handle(json, out, [](const Json& j) { return io::algebra_from_json(j); });
}
netlts_status netlts_algebra_json(const netlts_algebra* a, char** out) {
  return to_text(a, "algebra", out, [](const auto& h) -> const auto& { return h.data; });
}
size_t netlts_algebra_dim(const netlts_algebra* a) { return a ? a->data.dim() : 0; }
void netlts_algebra_free(netlts_algebra* a) { delete a; }

netlts_status netlts_action_parse(const char* json, netlts_action** out) {
  return make_handle(json, out, [](const Json& j) { return io::action_from_json(j); });
}
netlts_status netlts_action_adjoint(const netlts_algebra* a, netlts_action** out) {
  return guard(nullptr, [&] {
    require(out, "output handle");
    *out = new netlts_action{ActionTensor::adjoint(as_lts(a, "algebra").bracket())};
    return NETLTS_OK;
  });
}
netlts_status netlts_action_json(const netlts_action* a, char** out) {
  return to_text(a, "action", out, [](const auto& h) -> const auto& { return h.value; });
}
void netlts_action_free(netlts_action* a) { delete a; }

netlts_status netlts_lie_action_parse(const char* json, size_t acting_dim, size_t acted_dim, netlts_lie_action** out) {
  return make_handle(json, out,
                     [&](const Json& j) { return io::lie_action_from_json(j, acting_dim, acted_dim); });
}
netlts_status netlts_lie_action_json(const netlts_lie_action* a, char** out) {
  return to_text(a, "Lie action", out, [](const auto& h) -> const auto& { return h.value; });
}
void netlts_lie_action_free(netlts_lie_action* a) { delete a; }

netlts_status netlts_matrix_parse(const char* json, netlts_matrix** out) {
  return make_handle(json, out, [](const Json& j) { return io::matrix_from_json(j); });
}
netlts_status netlts_matrix_json(const netlts_matrix* m, char** out) {
  return to_text(m, "matrix", out, [](const auto& h) -> const auto& { return h.value; });
}
void netlts_matrix_free(netlts_matrix* m) { delete m; }

netlts_status netlts_cochain_parse(const char* json, size_t in_dim, size_t out_dim, netlts_cochain** out) {
  return make_handle(json, out, [&](const Json& j) { return io::cochain_from_json(j, in_dim, out_dim); });
}
netlts_status netlts_cochain_json(const netlts_cochain* c, char** out) {
  return to_text(c, "cochain", out, [](const auto& h) -> const auto& { return h.value; });
}
void netlts_cochain_free(netlts_cochain* c) { delete c; }

netlts_status netlts_pair_parse(const char* json, netlts_pair** out) {
  return make_handle(json, out, [](const Json& j) { return io::pair_from_json(j); });
}
void netlts_pair_free(netlts_pair* p) { delete p; }

netlts_status netlts_context_new(const netlts_algebra* L, const netlts_algebra* Lp, const netlts_action* theta,
                                 netlts_context** out, char** report) {
  return guard(report, [&] {
    require(out, "output handle");
    require(theta, "action");
    *out = nullptr;
    *out = new netlts_context{NetContext::make(as_lts(L, "algebra L"), as_lts(Lp, "algebra L'"), theta->value)};
    return NETLTS_OK;
  });
}
size_t netlts_context_dim(const netlts_context* ctx) { return ctx ? ctx->ctx->dim() : 0; }
size_t netlts_context_dim_p(const netlts_context* ctx) { return ctx ? ctx->ctx->dim_p() : 0; }
void netlts_context_free(netlts_context* ctx) { delete ctx; }

netlts_status netlts_verify(const netlts_algebra* a, const netlts_options* options, char** result) {
  return guard(result, [&] {
    require(a, "algebra");
    const CheckOptions opt = check_options(options);
    Report r;
    switch (a->data.kind) {
      case io::AlgebraData::Kind::Lts: r = verify_lts(a->data.tri, opt); break;
      case io::AlgebraData::Kind::ThreeLeibniz: r = verify_3leibniz(a->data.tri, opt); break;
      case io::AlgebraData::Kind::Lie: r = verify_lie(a->data.bi, opt); break;
    }
    Json j = io::to_json(r);
    j["kind"] = io::to_string(a->data.kind);
    return emit(result, j);
  });
}

netlts_status netlts_action_check(const netlts_algebra* L, const netlts_algebra* Lp, const netlts_action* theta,
                                  const netlts_options* options, char** result) {
  return guard(result, [&] {
    require(theta, "action");
    return emit_report(result,
                       verify_coherent_action(as_lts(L, "algebra L"), as_lts(Lp, "algebra L'"), theta->value,
                                              check_options(options)));
  });
}

netlts_status netlts_hemi(const netlts_context* ctx, const netlts_options* options, char** result) {
  return guard(result, [&] {
    const NetContext& c = context(ctx);
    const ThreeLeibnizAlgebra E = hemisemidirect(c.L(), c.Lp(), c.action());
    std::vector<std::string> labels = c.L().labels();
    for (const auto& l : c.Lp().labels()) labels.push_back(l + "'");
    io::AlgebraData data{io::AlgebraData::Kind::ThreeLeibniz, labels, E.bracket(), BiBracket()};
    Json j = io::to_json(verify_3leibniz(E.bracket(), check_options(options)));
    j["algebra"] = io::to_json(data);
    return emit(result, j);
  });
}

netlts_status netlts_net_check(const netlts_context* ctx, const netlts_matrix* T, const netlts_options* options,
                               char** result) {
  return guard(result, [&] {
    const NetContext& c = context(ctx);
    Json j = io::to_json(net_check(c, map_of(T, "map"), check_options(options)));
    if (c.is_l3_adjoint()) j["closed_form_condition"] = l3_closed_form_condition(T->value);
    return emit(result, j);
  });
}

netlts_status netlts_descend(const netlts_context* ctx, const netlts_matrix* T, const netlts_options* options,
                             char** result) {
  return guard(result, [&] {
    const Net net = make_net(ctx, T);
    const ThreeLeibnizAlgebra d = descendent(net);
    Json j = io::to_json(verify_3leibniz(d.bracket(), check_options(options)));
    j["algebra"] = io::to_json(io::algebra_data(d));
    return emit(result, j);
  });
}

netlts_status netlts_graph_check(const netlts_context* ctx, const netlts_matrix* T, const netlts_options* options,
                                 char** result) {
  return guard(result, [&] {
    return emit_report(result, graph_subalgebra_check(context(ctx), map_of(T, "map"), check_options(options)));
  });
}

netlts_status netlts_hom_check(const netlts_context* ctx, const netlts_matrix* Tsrc, const netlts_matrix* Tdst,
                               const netlts_matrix* f, const netlts_matrix* fp, const netlts_options* options,
                               char** result) {
  return guard(result, [&] {
    return emit_report(result, net_hom_check(context(ctx), map_of(Tsrc, "source map"), map_of(Tdst, "target map"),
                                             map_of(f, "f"), map_of(fp, "f'"), check_options(options)));
  });
}

netlts_status netlts_conjugate(const netlts_context* ctx, const netlts_matrix* T, const netlts_matrix* f,
                               const netlts_matrix* fp, const netlts_options* options, char** result) {
  return guard(result, [&] {
    const NetContext& c = context(ctx);
    ConjugationOptions co;
    co.require_intertwining = options && options->require_intertwining;
    const Matrix conj = conjugate_net(c, map_of(T, "map"), map_of(f, "f"), map_of(fp, "f'"), co);
    Json j = io::to_json(net_check(c, conj, check_options(options)));
    j["map"] = io::to_json(conj);
    if (!j["pass"].get<bool>()) throw InternalError("conjugate of a net failed the defining equation");
    return emit(result, j);
  });
}

netlts_status netlts_mc_check(const netlts_context* ctx, const netlts_matrix* T, const netlts_options* options,
                              char** result) {
  return guard(result, [&] {
    require(ctx, "context");
    const DerivedBrackets db(ctx->ctx);
    const Cochain residual = db.mc_residual(map_of(T, "map"));
    const Report net = net_check(*ctx->ctx, T->value, check_options(options));
    if (residual.is_zero() != net.pass()) throw InternalError("Maurer-Cartan residual disagrees with net_check");
    return emit(result, Json{{"pass", residual.is_zero()}, {"residual", io::to_json(residual)},
                             {"net", io::to_json(net)}});
  });
}

netlts_status netlts_twisted_mc(const netlts_context* ctx, const netlts_matrix* T, const netlts_matrix* Ttilde,
                                const netlts_options* options, char** result) {
  return guard(result, [&] {
    require(ctx, "context");
    const DerivedBrackets db(ctx->ctx);
    const TwistedBrackets tw(db, map_of(T, "map"));
    const Matrix& Tt = map_of(Ttilde, "perturbation");
    ctx->ctx->check_map_shape(Tt);
    const Cochain residual = tw.mc_residual(Tt);
    const Report sum = net_check(*ctx->ctx, T->value + Tt, check_options(options));
    if (residual.is_zero() != sum.pass()) throw InternalError("twisted residual disagrees with net_check(T + T~)");
    return emit(result, Json{{"pass", residual.is_zero()}, {"residual", io::to_json(residual)},
                             {"sum_net", io::to_json(sum)}});
  });
}

netlts_status netlts_d_square(const netlts_context* ctx, const netlts_matrix* T, const netlts_cochain* f,
                              const netlts_options* options, char** result) {
  (void)options;
  return guard(result, [&] {
    require(ctx, "context");
    const DerivedBrackets db(ctx->ctx);
    const TwistedBrackets tw(db, map_of(T, "map"));
    const Cochain& c = f_cochain(f, *ctx->ctx);
    const Cochain df = tw.dT(c);
    const Cochain ddf = tw.dT(df);
    return emit(result, Json{{"pass", ddf.is_zero()}, {"dT_f", io::to_json(df)}, {"dT_dT_f", io::to_json(ddf)}});
  });
}

netlts_status netlts_cohomology(const netlts_context* ctx, const netlts_matrix* T, size_t degree,
                                const netlts_options* options, char** result) {
  return guard(result, [&] {
    const Net net = make_net(ctx, T);
    CohomologyOptions co;
    co.allow_degree3 = options && options->allow_degree3;
    co.cocycle_basis = options && options->cocycle_basis;
    Json j = io::to_json(cohomology_dims(net, degree, co));
    j["pass"] = true;
    return emit(result, j);
  });
}

netlts_status netlts_compare_dt(const netlts_context* ctx, const netlts_matrix* T, const netlts_cochain* f,
                                const netlts_options* options, char** result) {
  return guard(result, [&] {
    const Net net = make_net(ctx, T);
    Report r;
    r.append(compare_with_dT(net, f_cochain(f, net.context()), check_options(options)));
    return emit_report(result, r);
  });
}

netlts_status netlts_deform_check(const netlts_context* ctx, const netlts_matrix* T, const netlts_matrix* T1,
                                  const netlts_options* options, char** result) {
  return guard(result, [&] {
    return emit_report(result, deform_check(make_net(ctx, T), map_of(T1, "direction"), check_options(options)));
  });
}

netlts_status netlts_equiv_check(const netlts_context* ctx, const netlts_matrix* T, const netlts_matrix* T1,
                                 const netlts_matrix* T1tilde, const netlts_pair* pair, const netlts_options* options,
                                 char** result) {
  return guard(result, [&] {
    const Net net = make_net(ctx, T);
    return emit_report(result, equivalence_check(net, map_of(T1, "direction"), map_of(T1tilde, "second direction"),
                                                 pair_of(pair, net.context()), check_options(options)));
  });
}

netlts_status netlts_nijenhuis(const netlts_context* ctx, const netlts_matrix* T, const netlts_pair* pair,
                               const netlts_options* options, char** result) {
  return guard(result, [&] {
    const Net net = make_net(ctx, T);
    return emit_report(result, nijenhuis_check(net, pair_of(pair, net.context()), check_options(options)));
  });
}

netlts_status netlts_trivial_deform(const netlts_context* ctx, const netlts_matrix* T, const netlts_pair* pair,
                                    const netlts_options* options, char** result) {
  return guard(result, [&] {
    const Net net = make_net(ctx, T);
    const Matrix T1 = trivial_deform(net, pair_of(pair, net.context()));
    Json j = io::to_json(deform_check(net, T1, check_options(options)));
    j["map"] = io::to_json(T1);
    return emit(result, j);
  });
}

netlts_status netlts_lie2lts(const netlts_algebra* lie, const netlts_options* options, char** result) {
  return guard(result, [&] {
    const LieTripleSystem l = lts_from_lie(as_lie(lie, "Lie algebra"));
    Json j = io::to_json(verify_lts(l.bracket(), check_options(options)));
    j["algebra"] = io::to_json(io::algebra_data(l));
    return emit(result, j);
  });
}

netlts_status netlts_lie_action_check(const netlts_algebra* L, const netlts_algebra* Lp, const netlts_lie_action* rho,
                                      const netlts_options* options, char** result) {
  return guard(result, [&] {
    require(rho, "Lie action");
    const LieAlgebra g = as_lie(L, "Lie algebra L"), h = as_lie(Lp, "Lie algebra L'");
    const Report r = lie_action_check(g, h, rho->value, check_options(options));
    Json j = io::to_json(r);
    if (r.pass()) j["theta"] = io::to_json(theta_from_rho(g, h, rho->value));
    return emit(result, j);
  });
}

netlts_status netlts_lie_net_check(const netlts_algebra* L, const netlts_algebra* Lp, const netlts_lie_action* rho,
                                   const netlts_matrix* T, const netlts_options* options, char** result) {
  return guard(result, [&] {
    require(rho, "Lie action");
    return emit_report(result, lie_net_check(as_lie(L, "Lie algebra L"), as_lie(Lp, "Lie algebra L'"), rho->value,
                                             map_of(T, "map"), check_options(options)));
  });
}

netlts_status netlts_transport(const netlts_algebra* L, const netlts_algebra* Lp, const netlts_lie_action* rho,
                               const netlts_matrix* T, const netlts_options* options, char** result) {
  return guard(result, [&] {
    require(rho, "Lie action");
    return emit_report(result, transport_check(as_lie(L, "Lie algebra L"), as_lie(Lp, "Lie algebra L'"), rho->value,
                                               map_of(T, "map"), check_options(options)));
  });
}

}  // extern "C"
