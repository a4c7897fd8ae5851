#include "io/json_io.hpp"

#include <algorithm>
#include <set>

#include "exact/errors.hpp"

namespace netlts::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw InputError(path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) fail(path, "expected a nonnegative integer");
  if (j.is_number_integer() && j.get<long long>() < 0) fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::size_t bounded_index(const Json& j, std::size_t bound, const std::string& path) {
  const std::size_t i = index_from_json(j, path);
  if (i >= bound) fail(path, "index " + std::to_string(i) + " out of range (dimension " + std::to_string(bound) + ")");
  return i;
}

const Json& array_field(const Json& j, const char* key, const std::string& path) {
  const Json& a = field(j, key, path);
  if (!a.is_array()) fail(path + "." + key, "expected an array");
  return a;
}

// sparse {"label": "p/q"} map used for bracket and cochain values
Json sparse_to_json(const Vector& v, const std::vector<std::string>& labels) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[labels[i]] = v[i].str();
  return out;
}

Vector sparse_from_json(const Json& j, const std::vector<std::string>& labels, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object of label: rational");
  Vector v(labels.size());
  for (const auto& [key, value] : j.items()) {
    const auto it = std::find(labels.begin(), labels.end(), key);
    if (it == labels.end()) fail(path, "unknown basis label \"" + key + "\"");
    v[static_cast<std::size_t>(it - labels.begin())] = rational_from_json(value, path + "." + key);
  }
  return v;
}

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
  return rows;
}

Matrix square_from_rows(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array() || j.size() != dim) fail(path, "expected " + std::to_string(dim) + " rows");
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < dim; ++r) {
    rows.push_back(vector_from_json(j[r], path + "[" + std::to_string(r) + "]"));
    if (rows.back().size() != dim) fail(path + "[" + std::to_string(r) + "]", "expected " + std::to_string(dim) + " entries");
  }
  return Matrix::from_rows(rows);
}

std::vector<std::string> basis_from_json(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.contains("basis")) return default_labels(dim);
  const Json& b = array_field(j, "basis", path);
  if (b.size() != dim) fail(path + ".basis", "expected " + std::to_string(dim) + " names");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!b[i].is_string()) fail(path + ".basis[" + std::to_string(i) + "]", "expected a string");
    out.push_back(b[i].get<std::string>());
  }
  if (std::set<std::string>(out.begin(), out.end()).size() != out.size()) fail(path + ".basis", "duplicate basis label");
  return out;
}

}  // namespace

Json parse_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational::parse(j.dump());
  if (!j.is_string()) fail(path, "expected a rational string such as \"-3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const InputError& e) {
    fail(path, e.what());
  }
}

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

Vector vector_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of rationals");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

Json to_json(const Matrix& m) { return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"matrix", matrix_rows(m)}}; }

Matrix matrix_from_json(const Json& j, const std::string& path) {
  const std::size_t rows = index_from_json(field(j, "rows", path), path + ".rows");
  const std::size_t cols = index_from_json(field(j, "cols", path), path + ".cols");
  const Json& data = array_field(j, "matrix", path);
  if (data.size() != rows) fail(path + ".matrix", "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + ".matrix[" + std::to_string(r) + "]";
    const Vector row = vector_from_json(data[r], rp);
    if (row.size() != cols) fail(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

const char* to_string(AlgebraData::Kind k) {
  switch (k) {
    case AlgebraData::Kind::Lts: return "lts";
    case AlgebraData::Kind::ThreeLeibniz: return "3leibniz";
    case AlgebraData::Kind::Lie: return "lie";
  }
  return "lts";
}

Json to_json(const AlgebraData& a) {
  const std::size_t n = a.dim();
  Json brackets = Json::array();
  if (a.kind == AlgebraData::Kind::Lie) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(a.bi.at(i, j))) brackets.push_back({{"args", {i, j}}, {"out", sparse_to_json(a.bi.at(i, j), a.basis)}});
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(a.tri.at(i, j, k)))
            brackets.push_back({{"args", {i, j, k}}, {"out", sparse_to_json(a.tri.at(i, j, k), a.basis)}});
  }
  return Json{{"kind", to_string(a.kind)}, {"dim", n}, {"basis", a.basis}, {"brackets", brackets}};
}

AlgebraData algebra_from_json(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  AlgebraData a;
  const std::string k = kind.get<std::string>();
  if (k == "lts")
    a.kind = AlgebraData::Kind::Lts;
  else if (k == "3leibniz")
    a.kind = AlgebraData::Kind::ThreeLeibniz;
  else if (k == "lie")
    a.kind = AlgebraData::Kind::Lie;
  else
    fail(path + ".kind", "unknown algebra kind \"" + k + "\"");
  const std::size_t n = index_from_json(field(j, "dim", path), path + ".dim");
  a.basis = basis_from_json(j, n, path);
  const bool lie = a.kind == AlgebraData::Kind::Lie;
  if (lie)
    a.bi = BiBracket(n);
  else
    a.tri = TriBracket(n);
  const Json& brackets = j.contains("brackets") ? array_field(j, "brackets", path) : Json::array();
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string ep = path + ".brackets[" + std::to_string(e) + "]";
    const Json& args = array_field(brackets[e], "args", ep);
    if (args.size() != (lie ? 2u : 3u)) fail(ep + ".args", lie ? "expected 2 indices" : "expected 3 indices");
    std::vector<std::size_t> idx;
    for (std::size_t s = 0; s < args.size(); ++s)
      idx.push_back(bounded_index(args[s], n, ep + ".args[" + std::to_string(s) + "]"));
    if (!seen.insert(idx).second) fail(ep, "duplicate bracket entry");
    const Vector out = sparse_from_json(field(brackets[e], "out", ep), a.basis, ep + ".out");
    if (lie)
      a.bi.set(idx[0], idx[1], out);
    else
      a.tri.set(idx[0], idx[1], idx[2], out);
  }
  return a;
}

AlgebraData algebra_data(const LieTripleSystem& a) {
  return AlgebraData{AlgebraData::Kind::Lts, a.labels(), a.bracket(), BiBracket()};
}

AlgebraData algebra_data(const ThreeLeibnizAlgebra& a) {
  return AlgebraData{AlgebraData::Kind::ThreeLeibniz, a.labels(), a.bracket(), BiBracket()};
}

AlgebraData algebra_data(const LieAlgebra& a) {
  return AlgebraData{AlgebraData::Kind::Lie, a.labels(), TriBracket(), a.bracket()};
}

Json to_json(const ActionTensor& a) {
  Json theta = Json::array();
  for (std::size_t i = 0; i < a.acting_dim(); ++i)
    for (std::size_t j = 0; j < a.acting_dim(); ++j)
      if (!a.theta(i, j).is_zero()) theta.push_back({{"x", i}, {"y", j}, {"matrix", matrix_rows(a.theta(i, j))}});
  return Json{{"acting_dim", a.acting_dim()}, {"acted_dim", a.acted_dim()}, {"theta", theta}};
}

ActionTensor action_from_json(const Json& j, const std::string& path) {
  const std::size_t n = index_from_json(field(j, "acting_dim", path), path + ".acting_dim");
  const std::size_t m = index_from_json(field(j, "acted_dim", path), path + ".acted_dim");
  ActionTensor a(n, m);
  const Json& theta = j.contains("theta") ? array_field(j, "theta", path) : Json::array();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < theta.size(); ++e) {
    const std::string ep = path + ".theta[" + std::to_string(e) + "]";
    const std::size_t x = bounded_index(field(theta[e], "x", ep), n, ep + ".x");
    const std::size_t y = bounded_index(field(theta[e], "y", ep), n, ep + ".y");
    if (!seen.insert({x, y}).second) fail(ep, "duplicate theta entry");
    a.set(x, y, square_from_rows(field(theta[e], "matrix", ep), m, ep + ".matrix"));
  }
  return a;
}

Json to_json(const LieActionTensor& a) {
  Json rho = Json::array();
  for (std::size_t i = 0; i < a.acting_dim(); ++i)
    if (!a.rho(i).is_zero()) rho.push_back({{"x", i}, {"matrix", matrix_rows(a.rho(i))}});
  return Json{{"acting_dim", a.acting_dim()}, {"acted_dim", a.acted_dim()}, {"rho", rho}};
}

LieActionTensor lie_action_from_json(const Json& j, std::size_t acting_dim, std::size_t acted_dim,
                                     const std::string& path) {
  const auto dim = [&](const char* key, std::size_t given) {
    if (j.is_object() && j.contains(key)) {
      const std::size_t d = index_from_json(j[key], path + "." + key);
      if (given != 0 && d != given) fail(path + "." + key, "does not match the algebra dimension");
      return d;
    }
    if (given == 0) fail(path, std::string("missing key \"") + key + "\"");
    return given;
  };
  const std::size_t n = dim("acting_dim", acting_dim), m = dim("acted_dim", acted_dim);
  LieActionTensor a(n, m);
  const Json& rho = array_field(j, "rho", path);
  std::set<std::size_t> seen;
  for (std::size_t e = 0; e < rho.size(); ++e) {
    const std::string ep = path + ".rho[" + std::to_string(e) + "]";
    const std::size_t x = bounded_index(field(rho[e], "x", ep), n, ep + ".x");
    if (!seen.insert(x).second) fail(ep, "duplicate rho entry");
    a.set(x, square_from_rows(field(rho[e], "matrix", ep), m, ep + ".matrix"));
  }
  return a;
}

Json to_json(const Cochain& c) {
  Json entries = Json::array();
  const WedgeBasis& wb = c.wedges();
  const auto labels = default_labels(c.out_dim());
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    if (is_zero(c.at(t))) continue;
    const ArgTuple a = c.tuple(t);
    Json pairs = Json::array();
    for (std::size_t p : a.pairs) pairs.push_back({wb.pair(p).i, wb.pair(p).j});
    entries.push_back({{"pairs", pairs}, {"last", a.last}, {"value", sparse_to_json(c.at(t), labels)}});
  }
  return Json{{"space", to_string(c.space())},
              {"arity", c.arity()},
              {"in_dim", c.in_dim()},
              {"out_dim", c.out_dim()},
              {"entries", entries}};
}

Cochain cochain_from_json(const Json& j, std::size_t in_dim, std::size_t out_dim, const std::string& path) {
  const Json& space = field(j, "space", path);
  if (!space.is_string()) fail(path + ".space", "expected a string");
  const std::string s = space.get<std::string>();
  Cochain::Space sp = Cochain::Space::Plain;
  if (s == "F")
    sp = Cochain::Space::F;
  else if (s == "E")
    sp = Cochain::Space::E;
  else if (s != "plain")
    fail(path + ".space", "unknown space \"" + s + "\"");
  const auto dim = [&](const char* key, std::size_t given) {
    if (j.contains(key)) {
      const std::size_t d = index_from_json(j[key], path + "." + key);
      if (given != 0 && d != given) fail(path + "." + key, "does not match the context dimension");
      return d;
    }
    if (given == 0) fail(path, std::string("missing key \"") + key + "\"");
    return given;
  };
  const std::size_t in = dim("in_dim", in_dim), out = dim("out_dim", out_dim);
  const std::size_t arity = index_from_json(field(j, "arity", path), path + ".arity");
  if (arity == 0 || arity > kMaxArity) fail(path + ".arity", "arity must be between 1 and " + std::to_string(kMaxArity));
  Cochain c(in, out, arity, sp);
  const WedgeBasis& wb = c.wedges();
  const auto labels = default_labels(out);
  const Json& entries = array_field(j, "entries", path);
  std::set<std::size_t> seen;
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const std::string ep = path + ".entries[" + std::to_string(e) + "]";
    const Json& pairs = array_field(entries[e], "pairs", ep);
    if (pairs.size() + 1 != arity) fail(ep + ".pairs", "expected " + std::to_string(arity - 1) + " pairs");
    ArgTuple a;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const std::string pp = ep + ".pairs[" + std::to_string(p) + "]";
      if (!pairs[p].is_array() || pairs[p].size() != 2) fail(pp, "expected [i, j]");
      const std::size_t i = bounded_index(pairs[p][0], in, pp + "[0]");
      const std::size_t k = bounded_index(pairs[p][1], in, pp + "[1]");
      if (i >= k) fail(pp, "pair indices must satisfy i < j");
      a.pairs.push_back(wb.canonical(i, k)->index);
    }
    a.last = bounded_index(field(entries[e], "last", ep), in, ep + ".last");
    const std::size_t flat = c.flat(a);
    if (!seen.insert(flat).second) fail(ep, "duplicate cochain entry");
    c.set(flat, sparse_from_json(field(entries[e], "value", ep), labels, ep + ".value"));
  }
  return c;
}

Json to_json(const WedgePair& p) { return Json{{"a", to_json(p.a)}, {"b", to_json(p.b)}}; }

WedgePair pair_from_json(const Json& j, const std::string& path) {
  WedgePair p{vector_from_json(field(j, "a", path), path + ".a"), vector_from_json(field(j, "b", path), path + ".b")};
  if (p.a.size() != p.b.size()) fail(path, "a and b have different lengths");
  return p;
}

Json to_json(const Verdict& v) {
  Json w = Json::array();
  for (const auto& x : v.witnesses) w.push_back({{"indices", x.indices}, {"lhs", to_json(x.lhs)}, {"rhs", to_json(x.rhs)}});
  return Json{{"identity", v.identity}, {"pass", v.pass}, {"violations", v.violations}, {"witnesses", w}};
}

Verdict verdict_from_json(const Json& j, const std::string& path) {
  Verdict v;
  const Json& id = field(j, "identity", path);
  if (!id.is_string()) fail(path + ".identity", "expected a string");
  v.identity = id.get<std::string>();
  const Json& pass = field(j, "pass", path);
  if (!pass.is_boolean()) fail(path + ".pass", "expected a boolean");
  v.pass = pass.get<bool>();
  v.violations = index_from_json(field(j, "violations", path), path + ".violations");
  const Json& w = array_field(j, "witnesses", path);
  for (std::size_t e = 0; e < w.size(); ++e) {
    const std::string ep = path + ".witnesses[" + std::to_string(e) + "]";
    Witness x;
    const Json& idx = array_field(w[e], "indices", ep);
    for (std::size_t s = 0; s < idx.size(); ++s) x.indices.push_back(index_from_json(idx[s], ep + ".indices"));
    x.lhs = vector_from_json(field(w[e], "lhs", ep), ep + ".lhs");
    x.rhs = vector_from_json(field(w[e], "rhs", ep), ep + ".rhs");
    v.witnesses.push_back(std::move(x));
  }
  return v;
}

Json to_json(const Report& r) {
  Json verdicts = Json::object();
  for (const auto& v : r.verdicts) {
    Json entry = to_json(v);
    entry.erase("identity");
    verdicts[v.identity] = std::move(entry);
  }
  return Json{{"pass", r.pass()}, {"verdicts", verdicts}};
}

Report report_from_json(const Json& j, const std::string& path) {
  const Json& verdicts = field(j, "verdicts", path);
  if (!verdicts.is_object()) fail(path + ".verdicts", "expected an object");
  Report r;
  for (const auto& [key, value] : verdicts.items()) {
    Json entry = value;
    if (!entry.is_object()) fail(path + ".verdicts." + key, "expected an object");
    entry["identity"] = key;
    r.append(verdict_from_json(entry, path + ".verdicts." + key));
  }
  return r;
}

Json to_json(const CohomologyReport& r) {
  Json j{{"n", r.n}, {"dimC", r.dim_c}, {"dimZ", r.dim_z}, {"dimB", r.dim_b}, {"dimH", r.dim_h},
         {"degree0Kernel", r.degree0_kernel}};
  if (r.cocycle_basis) {
    Json basis = Json::array();
    for (const auto& v : *r.cocycle_basis) basis.push_back(to_json(v));
    j["cocycleBasis"] = basis;
  }
  return j;
}

CohomologyReport cohomology_report_from_json(const Json& j, const std::string& path) {
  CohomologyReport r;
  r.n = index_from_json(field(j, "n", path), path + ".n");
  r.dim_c = index_from_json(field(j, "dimC", path), path + ".dimC");
  r.dim_z = index_from_json(field(j, "dimZ", path), path + ".dimZ");
  r.dim_b = index_from_json(field(j, "dimB", path), path + ".dimB");
  r.dim_h = index_from_json(field(j, "dimH", path), path + ".dimH");
  r.degree0_kernel = index_from_json(field(j, "degree0Kernel", path), path + ".degree0Kernel");
  if (j.contains("cocycleBasis")) {
    const Json& b = array_field(j, "cocycleBasis", path);
    std::vector<Vector> basis;
    for (std::size_t e = 0; e < b.size(); ++e) basis.push_back(vector_from_json(b[e], path + ".cocycleBasis"));
    r.cocycle_basis = std::move(basis);
  }
  return r;
}

}  // namespace netlts::io
