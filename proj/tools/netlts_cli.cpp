#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>
#include <openssl/evp.h>

#include "netlts/netlts.h"

using Json = nlohmann::json;

namespace {

// Thrown for anything the user got wrong before the library was reached.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failure inside a C call; carries the status to exit with.
struct ApiError : std::runtime_error {
  ApiError(netlts_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  netlts_status status;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw ApiError(NETLTS_INTERNAL_ERROR, "SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
template <class T, void (*Free)(T*)>
using Owned = std::unique_ptr<T, Deleter<T, Free>>;

using Algebra = Owned<netlts_algebra, netlts_algebra_free>;
using Action = Owned<netlts_action, netlts_action_free>;
using LieAction = Owned<netlts_lie_action, netlts_lie_action_free>;
using MatrixH = Owned<netlts_matrix, netlts_matrix_free>;
using CochainH = Owned<netlts_cochain, netlts_cochain_free>;
using Pair = Owned<netlts_pair, netlts_pair_free>;
using Context = Owned<netlts_context, netlts_context_free>;

void check(netlts_status s, const std::string& where) {
  if (s != NETLTS_OK) throw ApiError(s, where + ": " + netlts_last_error());
}

class Run {
 public:
  explicit Run(std::string command) : command_(std::move(command)) {}

  // Reads and hashes an input file; the text stays alive for the parse.
  std::string load(const std::string& role, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + role + " file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    inputs_[role] = Json{{"path", path}, {"sha256", sha256_hex(ss.str())}};
    return ss.str();
  }

  template <class Handle, class Parse>
  Handle parse(const std::string& role, const std::string& path, Parse&& p) {
    const std::string text = load(role, path);
    typename Handle::pointer raw = nullptr;
    check(p(text.c_str(), &raw), role + " (" + path + ")");
    return Handle(raw);
  }

  Algebra algebra(const std::string& role, const std::string& path) {
    return parse<Algebra>(role, path, netlts_algebra_parse);
  }
  MatrixH matrix(const std::string& role, const std::string& path) {
    return parse<MatrixH>(role, path, netlts_matrix_parse);
  }
  Pair pair(const std::string& path) { return parse<Pair>("pair", path, netlts_pair_parse); }

  const std::string& command() const { return command_; }
  const Json& inputs() const { return inputs_; }

 private:
  std::string command_;
  Json inputs_ = Json::object();
};

struct Settings {
  std::string out;
  std::size_t witness_limit = 1;
  bool no_timings = false;
  bool allow_degree3 = false;
  bool cocycle_basis = false;
  bool require_intertwining = false;

  std::string algebra, algebra_p, action, rho;
  std::string map, target_map, f, fp, perturbation, cochain, direction, direction2, pair;
  std::size_t degree = 1;

  netlts_options options() const {
    netlts_options o;
    netlts_options_init(&o);
    o.witness_limit = witness_limit;
    o.allow_degree3 = allow_degree3;
    o.cocycle_basis = cocycle_basis;
    o.require_intertwining = require_intertwining;
    return o;
  }
};

// Result of one library operation, as returned through the C API.
struct Outcome {
  netlts_status status = NETLTS_OK;
  Json result;
};

Outcome take(netlts_status s, char* text, const std::string& what) {
  if (s != NETLTS_OK && s != NETLTS_CHECK_FAILED) throw ApiError(s, what + ": " + netlts_last_error());
  Outcome o{s, Json::parse(text)};
  netlts_string_free(text);
  return o;
}

// Builds L, L' and theta. Without --action the adjoint action of L on itself is used.
struct ContextInputs {
  Algebra L, Lp;
  Action theta;
  Context ctx;
  std::optional<Outcome> failure;
};

ContextInputs make_context(Run& run, const Settings& s) {
  ContextInputs c;
  c.L = run.algebra("algebra", s.algebra);
  if (s.action.empty()) {
    if (!s.algebra_p.empty()) throw UsageError("--action is required when --algebra-p is given");
    c.Lp = run.algebra("algebra", s.algebra);
    netlts_action* a = nullptr;
    check(netlts_action_adjoint(c.L.get(), &a), "adjoint action");
    c.theta.reset(a);
  } else {
    c.Lp = s.algebra_p.empty() ? run.algebra("algebra", s.algebra) : run.algebra("algebra_p", s.algebra_p);
    c.theta = run.parse<Action>("action", s.action, netlts_action_parse);
  }
  netlts_context* ctx = nullptr;
  char* report = nullptr;
  const netlts_status st = netlts_context_new(c.L.get(), c.Lp.get(), c.theta.get(), &ctx, &report);
  if (st == NETLTS_CHECK_FAILED) {
    c.failure = take(st, report, "context");
    return c;
  }
  check(st, "context");
  c.ctx.reset(ctx);
  return c;
}

CochainH load_cochain(Run& run, const Settings& s, const netlts_context* ctx) {
  return run.parse<CochainH>("cochain", s.cochain, [&](const char* text, netlts_cochain** out) {
    return netlts_cochain_parse(text, netlts_context_dim_p(ctx), netlts_context_dim(ctx), out);
  });
}

using Runner = std::function<Outcome(Run&, const Settings&, const netlts_options&)>;

// Wraps a runner that needs the context; a non-coherent action ends the run as a failed check.
template <class F>
Runner with_context(F body) {
  return [body](Run& run, const Settings& s, const netlts_options& o) {
    ContextInputs c = make_context(run, s);
    if (c.failure) return *c.failure;
    return body(run, s, o, c.ctx.get());
  };
}

Outcome call(const std::string& what, const std::function<netlts_status(char**)>& f) {
  char* text = nullptr;
  const netlts_status s = f(&text);
  return take(s, text, what);
}

struct LieInputs {
  Algebra L, Lp;
  LieAction rho;
};

LieInputs lie_inputs(Run& run, const Settings& s) {
  LieInputs in;
  in.L = run.algebra("algebra", s.algebra);
  in.Lp = s.algebra_p.empty() ? run.algebra("algebra", s.algebra) : run.algebra("algebra_p", s.algebra_p);
  const std::size_t n = netlts_algebra_dim(in.L.get()), m = netlts_algebra_dim(in.Lp.get());
  in.rho = run.parse<LieAction>("rho", s.rho, [&](const char* text, netlts_lie_action** out) {
    return netlts_lie_action_parse(text, n, m, out);
  });
  return in;
}

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> options;
  Runner run;
};

std::vector<Command> commands() {
  std::vector<Command> c;
  c.push_back({"verify", "check the axioms of an lts, 3leibniz or lie algebra", {"algebra"},
               [](Run& run, const Settings& s, const netlts_options& o) {
                 Algebra a = run.algebra("algebra", s.algebra);
                 return call("verify", [&](char** r) { return netlts_verify(a.get(), &o, r); });
               }});
  c.push_back({"action-check", "check that theta is a coherent action of L on L'", {"algebra", "algebra-p", "action"},
               [](Run& run, const Settings& s, const netlts_options& o) {
                 Algebra L = run.algebra("algebra", s.algebra);
                 Algebra Lp = s.algebra_p.empty() ? run.algebra("algebra", s.algebra)
                                                  : run.algebra("algebra_p", s.algebra_p);
                 Action a;
                 if (s.action.empty()) {
                   netlts_action* raw = nullptr;
                   check(netlts_action_adjoint(L.get(), &raw), "adjoint action");
                   a.reset(raw);
                 } else {
                   a = run.parse<Action>("action", s.action, netlts_action_parse);
                 }
                 return call("action-check",
                             [&](char** r) { return netlts_action_check(L.get(), Lp.get(), a.get(), &o, r); });
               }});
  c.push_back({"hemi", "build the hemisemidirect product on L + L'", {"algebra", "algebra-p", "action"},
               with_context([](Run&, const Settings&, const netlts_options& o, const netlts_context* ctx) {
                 return call("hemi", [&](char** r) { return netlts_hemi(ctx, &o, r); });
               })});
  c.push_back({"net-check", "check the defining equation of a map L' -> L", {"algebra", "algebra-p", "action", "map"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map);
                 return call("net-check", [&](char** r) { return netlts_net_check(ctx, T.get(), &o, r); });
               })});
  c.push_back({"descend", "descendent 3-Leibniz algebra of a net", {"algebra", "algebra-p", "action", "map"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map);
                 return call("descend", [&](char** r) { return netlts_descend(ctx, T.get(), &o, r); });
               })});
  c.push_back({"graph-check", "check that the graph of a map is a subalgebra of the hemisemidirect product",
               {"algebra", "algebra-p", "action", "map"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map);
                 return call("graph-check", [&](char** r) { return netlts_graph_check(ctx, T.get(), &o, r); });
               })});
  c.push_back({"hom-check", "check a pair (f, f') as a homomorphism of nets",
               {"algebra", "algebra-p", "action", "map", "target-map", "f", "fp"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map), T2 = run.matrix("target_map", s.target_map);
                 MatrixH f = run.matrix("f", s.f), fp = run.matrix("fp", s.fp);
                 return call("hom-check", [&](char** r) {
                   return netlts_hom_check(ctx, T.get(), T2.get(), f.get(), fp.get(), &o, r);
                 });
               })});
  c.push_back({"conjugate", "conjugate a net by automorphisms (f, f')", {"algebra", "algebra-p", "action", "map", "f", "fp"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map), f = run.matrix("f", s.f), fp = run.matrix("fp", s.fp);
                 return call("conjugate",
                             [&](char** r) { return netlts_conjugate(ctx, T.get(), f.get(), fp.get(), &o, r); });
               })});
  c.push_back({"mc-check", "Maurer-Cartan residual of a map", {"algebra", "algebra-p", "action", "map"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map);
                 return call("mc-check", [&](char** r) { return netlts_mc_check(ctx, T.get(), &o, r); });
               })});
  c.push_back({"twisted-mc", "twisted Maurer-Cartan residual of a perturbation of a net",
               {"algebra", "algebra-p", "action", "map", "perturbation"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map), Tt = run.matrix("perturbation", s.perturbation);
                 return call("twisted-mc", [&](char** r) { return netlts_twisted_mc(ctx, T.get(), Tt.get(), &o, r); });
               })});
  c.push_back({"d-square", "check that the twisted differential squares to zero on a cochain",
               {"algebra", "algebra-p", "action", "map", "cochain"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map);
                 CochainH f = load_cochain(run, s, ctx);
                 return call("d-square", [&](char** r) { return netlts_d_square(ctx, T.get(), f.get(), &o, r); });
               })});
  c.push_back({"cohomology", "cohomology dimensions of a net", {"algebra", "algebra-p", "action", "map", "degree"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map);
                 return call("cohomology",
                             [&](char** r) { return netlts_cohomology(ctx, T.get(), s.degree, &o, r); });
               })});
  c.push_back({"compare-dt", "compare the coboundary with the twisted differential on a cochain",
               {"algebra", "algebra-p", "action", "map", "cochain"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map);
                 CochainH f = load_cochain(run, s, ctx);
                 return call("compare-dt", [&](char** r) { return netlts_compare_dt(ctx, T.get(), f.get(), &o, r); });
               })});
  c.push_back({"deform-check", "check that T + t T1 is a deformation", {"algebra", "algebra-p", "action", "map", "direction"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map), T1 = run.matrix("direction", s.direction);
                 return call("deform-check",
                             [&](char** r) { return netlts_deform_check(ctx, T.get(), T1.get(), &o, r); });
               })});
  c.push_back({"equiv-check", "check that two deformations are equivalent through a pair",
               {"algebra", "algebra-p", "action", "map", "direction", "direction2", "pair"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map), T1 = run.matrix("direction", s.direction);
                 MatrixH T2 = run.matrix("direction2", s.direction2);
                 Pair p = run.pair(s.pair);
                 return call("equiv-check", [&](char** r) {
                   return netlts_equiv_check(ctx, T.get(), T1.get(), T2.get(), p.get(), &o, r);
                 });
               })});
  c.push_back({"nijenhuis", "check that a pair is Nijenhuis for a net", {"algebra", "algebra-p", "action", "map", "pair"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map);
                 Pair p = run.pair(s.pair);
                 return call("nijenhuis", [&](char** r) { return netlts_nijenhuis(ctx, T.get(), p.get(), &o, r); });
               })});
  c.push_back({"trivial-deform", "trivial deformation generated by a Nijenhuis pair",
               {"algebra", "algebra-p", "action", "map", "pair"},
               with_context([](Run& run, const Settings& s, const netlts_options& o, const netlts_context* ctx) {
                 MatrixH T = run.matrix("map", s.map);
                 Pair p = run.pair(s.pair);
                 return call("trivial-deform",
                             [&](char** r) { return netlts_trivial_deform(ctx, T.get(), p.get(), &o, r); });
               })});
  c.push_back({"lie2lts", "Lie triple system [x,y,z] = [[x,y],z] of a Lie algebra", {"algebra"},
               [](Run& run, const Settings& s, const netlts_options& o) {
                 Algebra a = run.algebra("algebra", s.algebra);
                 return call("lie2lts", [&](char** r) { return netlts_lie2lts(a.get(), &o, r); });
               }});
  c.push_back({"lie-action-check", "check a coherent action of one Lie algebra on another",
               {"algebra", "algebra-p", "rho"},
               [](Run& run, const Settings& s, const netlts_options& o) {
                 LieInputs in = lie_inputs(run, s);
                 return call("lie-action-check", [&](char** r) {
                   return netlts_lie_action_check(in.L.get(), in.Lp.get(), in.rho.get(), &o, r);
                 });
               }});
  c.push_back({"lie-net-check", "check the defining equation of a map between Lie algebras",
               {"algebra", "algebra-p", "rho", "map"},
               [](Run& run, const Settings& s, const netlts_options& o) {
                 LieInputs in = lie_inputs(run, s);
                 MatrixH T = run.matrix("map", s.map);
                 return call("lie-net-check", [&](char** r) {
                   return netlts_lie_net_check(in.L.get(), in.Lp.get(), in.rho.get(), T.get(), &o, r);
                 });
               }});
  c.push_back({"transport", "carry a Lie-algebra net over to the induced triple systems",
               {"algebra", "algebra-p", "rho", "map"},
               [](Run& run, const Settings& s, const netlts_options& o) {
                 LieInputs in = lie_inputs(run, s);
                 MatrixH T = run.matrix("map", s.map);
                 return call("transport", [&](char** r) {
                   return netlts_transport(in.L.get(), in.Lp.get(), in.rho.get(), T.get(), &o, r);
                 });
               }});
  return c;
}

void add_option(CLI::App* sub, const std::string& name, Settings& s) {
  static const std::set<std::string> optional = {"algebra-p", "action"};
  const std::map<std::string, std::pair<std::string*, const char*>> files = {
      {"algebra", {&s.algebra, "algebra JSON (L)"}},
      {"algebra-p", {&s.algebra_p, "second algebra JSON (L'); defaults to L"}},
      {"action", {&s.action, "action JSON; defaults to the adjoint action of L"}},
      {"rho", {&s.rho, "Lie action JSON"}},
      {"map", {&s.map, "map JSON, L' -> L"}},
      {"target-map", {&s.target_map, "second net"}},
      {"f", {&s.f, "map L -> L"}},
      {"fp", {&s.fp, "map L' -> L'"}},
      {"perturbation", {&s.perturbation, "perturbation map JSON"}},
      {"cochain", {&s.cochain, "cochain JSON"}},
      {"direction", {&s.direction, "deformation direction map JSON"}},
      {"direction2", {&s.direction2, "second deformation direction"}},
      {"pair", {&s.pair, "pair JSON"}},
  };
  if (name == "degree") {
    sub->add_option("--degree,-n", s.degree, "cohomology degree")->required();
    sub->add_flag("--allow-degree3", s.allow_degree3, "permit degree 3");
    sub->add_flag("--cocycle-basis", s.cocycle_basis, "include a cocycle basis");
    return;
  }
  const auto& [target, help] = files.at(name);
  CLI::Option* opt = sub->add_option("--" + name, *target, help);
  if (!optional.count(name)) opt->required();
  if (name == "fp") sub->add_flag("--require-intertwining", s.require_intertwining, "also require f T = T f'");
}

void write_report(const Settings& s, const Run& run, const Json& result, double elapsed_ms) {
  Json report{{"command", run.command()}, {"inputs", run.inputs()}, {"result", result}};
  if (!s.no_timings) report["timings"] = Json{{"elapsed_us", static_cast<long long>(elapsed_ms * 1000)}};
  const std::string text = report.dump(2) + "\n";
  if (s.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(s.out, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write report to " + s.out);
}

int fail(const std::string& command, int code, const std::string& message) {
  Json err{{"command", command}, {"error", message}, {"exit", code}};
  std::cerr << err.dump(2) << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for embedding tensors between Lie triple systems"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--out,-o", settings.out, "write the report to a file instead of standard output");
  app.add_option("--witness-limit", settings.witness_limit, "counterexamples kept per identity")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-timings", settings.no_timings, "omit the timings block");

  const std::vector<Command> table = commands();
  std::map<CLI::App*, const Command*> by_app;
  for (const auto& c : table) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    for (const auto& o : c.options) add_option(sub, o, settings);
    by_app[sub] = &c;
  }

  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--out" || a == "-o" || a == "--witness-limit") {
      ++i;
      continue;
    }
    if (a.empty() || a[0] == '-') continue;
    bool known = false;
    for (const auto& c : table) known = known || c.name == a;
    if (!known) return fail("", NETLTS_INPUT_ERROR, "unknown subcommand '" + a + "'");
    break;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("", NETLTS_INPUT_ERROR, e.what());
  }

  const Command* cmd = nullptr;
  for (auto* sub : app.get_subcommands()) cmd = by_app.at(sub);
  Run run(cmd->name);
  try {
    const netlts_options opts = settings.options();
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome outcome = cmd->run(run, settings, opts);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    write_report(settings, run, outcome.result, ms);
    return outcome.status;
  } catch (const UsageError& e) {
    return fail(cmd->name, NETLTS_INPUT_ERROR, e.what());
  } catch (const ApiError& e) {
    return fail(cmd->name, e.status, e.what());
  } catch (const std::exception& e) {
    return fail(cmd->name, NETLTS_INTERNAL_ERROR, e.what());
  }
}
