/*
   Copyright 2026 The polarcore Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


#include "polarcore/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "polarcore/error.hpp"
#include "polarcore/json_io.hpp"

namespace polarcore {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string field;
  std::uint64_t q = 0;
  std::string form;
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 20260101;
  unsigned threads = 1;
  std::string out;
  bool pretty = false;

  std::uint64_t budget_vertices = kDefaultVertexBudget;
  std::uint64_t budget_pairs = 10'000'000;
  std::uint64_t budget_nodes = 50'000'000;
  std::uint64_t budget_work = 2'000'000'000;
  std::uint64_t budget_oracle = 3000;

  std::string method = "closed";
  bool elements = false;
  bool on_quadric = false;
  bool core = false;
  std::string verify_file;
  std::string in;
  std::string example;
  std::string quadric;
  std::uint64_t target = 0;
  bool audit = false;
  std::string mode = "auto";
  std::uint64_t samples = 0;
  std::string a = "1";
  std::string matrix = "anti-lorentz";
  unsigned tau = 0;
  std::string x0;
  std::string construction;
  bool no_witness = false;
};

struct Outcome {
  Json result;
  bool ok = true;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return Json::parse(in);
}

Field resolve_field(const Options& o) {
  if (!o.field.empty()) {
    Field F = Field::parse(o.field);
    if (o.q != 0 && o.q != F.q()) throw UsageError("--field and -q disagree");
    return F;
  }
  if (o.q != 0) return Field::of_order(o.q);
  throw UsageError("one of --field or -q is required");
}

std::size_t require_n(const Options& o) {
  if (o.n == 0) throw UsageError("-n is required");
  return o.n;
}

SymForm resolve_form(const Field& F, const Options& o) {
  if (!o.form.empty()) {
    if (o.form.ends_with(".json")) {
      const Json j = read_json_file(o.form);
      if (j.is_array()) return SymForm(F, matrix_from_json(F, j));
      if (j.contains("field") && field_from_json(j) != F) throw UsageError("form file is over a different field");
      return form_from_json(F, j);
    }
    return named_form(F, o.form, o.n);
  }
  if (!o.kind.empty()) return canonical_form(F, parse_kind(o.kind), require_n(o));
  throw UsageError("one of --form or --kind is required");
}

/// Quadric model used by the ovoid commands: the antidiagonal models admit transfer.
SymForm ovoid_form(const Field& F, const Options& o) {
  if (!o.form.empty()) return resolve_form(F, o);
  const std::string kind_text = o.quadric.empty() ? o.kind : o.quadric;
  if (kind_text.empty()) throw UsageError("one of --quadric or --form is required");
  const QuadricKind kind = parse_kind(kind_text);
  const std::size_t n = require_n(o);
  switch (kind) {
    case QuadricKind::parabolic:
      if (n % 2 == 0) throw Error(ErrorCode::BadParity, "parabolic quadrics need odd n");
      return antidiag_form(F, n);
    case QuadricKind::hyperbolic:
      if (n % 2 == 1) throw Error(ErrorCode::BadParity, "hyperbolic quadrics need even n");
      return antidiag_bordered_form(F, n);
    case QuadricKind::elliptic:
      return canonical_form(F, kind, n);
  }
  return canonical_form(F, kind, n);
}

SearchOptions search_options(const Options& o) {
  SearchOptions s;
  s.node_limit = o.budget_nodes;
  return s;
}

std::uint64_t lightlike_pairs(const MinkowskiSpace& M) {
  const std::uint64_t N = ipow(M.field.q(), static_cast<unsigned>(M.n));
  return N * static_cast<std::uint64_t>(isotropic_count(M.form, M.field.zero()) - 1) / 2;
}

VerifyMode verify_mode(const MinkowskiSpace& M, const Options& o, std::uint64_t default_samples, Json& cfg) {
  VerifyMode vm;
  vm.seed = o.seed;
  vm.samples = o.samples != 0 ? o.samples : default_samples;
  if (o.mode == "exhaustive") {
    vm.exhaustive = true;
  } else if (o.mode == "sampled") {
    vm.exhaustive = false;
  } else if (o.mode == "auto") {
    vm.exhaustive = lightlike_pairs(M) <= o.budget_pairs;
  } else {
    throw UsageError("--mode must be exhaustive, sampled or auto");
  }
  cfg["mode"] = vm.exhaustive ? "exhaustive" : "sampled";
  if (!vm.exhaustive) cfg["samples"] = vm.samples;
  return vm;
}

// ---- certificate re-validation -------------------------------------------

struct Checker {
  const Options& o;
  Json results = Json::array();
  bool all_valid = true;

  void check(const Json& j, const std::string& path) {
    const std::string kind = j["certificate"].get<std::string>();
    Json r{{"path", path.empty() ? "/" : path}, {"certificate", kind}};
    try {
      const Field F = field_from_json(j);
      if (kind == "clique" || kind == "independent") {
        const SymForm S = form_from_json(F, j);
        const auto vs = vecs_from_json(F, j.at("vertices"));
        const auto cert = certify(make_affine_graph(S), kind == "clique" ? SetKind::clique : SetKind::independent, vs);
        r["size"] = vs.size();
        r["valid"] = cert.verified && (!j.contains("size") || j["size"].get<std::size_t>() == vs.size());
      } else if (kind == "partial_ovoid") {
        const SymForm S = form_from_json(F, j);
        const auto pts = vecs_from_json(F, j.at("points"));
        const PartialOvoid po = verify_partial_ovoid(make_quadric_graph(S), pts);
        r["size"] = pts.size();
        r["is_ovoid"] = po.is_ovoid;
        r["valid"] = !j.value("is_ovoid", false) || po.is_ovoid;
      } else if (kind == "light_map") {
        const MinkowskiSpace M = MinkowskiSpace::create(F, j.at("n").get<std::size_t>());
        const LightMap m = light_map_from_json(M, j);
        Json cfg;
        const RuleReport rep = verify_rule(M, m, verify_mode(M, o, 1'000'000, cfg), o.budget_pairs, o.threads);
        r["report"] = rule_report_json(F, rep);
        r["valid"] = rep.passed();
      } else {
        throw Error(ErrorCode::UnknownName, "unknown certificate kind '" + kind + "'");
      }
    } catch (const Error& e) {
      r["valid"] = false;
      r["reason"] = e.what();
    }
    all_valid = all_valid && r["valid"].get<bool>();
    results.push_back(std::move(r));
  }

  void walk(const Json& j, const std::string& path) {
    if (j.is_object()) {
      if (j.contains("certificate") && j["certificate"].is_string()) {
        check(j, path);
        return;
      }
      for (const auto& [k, v] : j.items()) walk(v, path + "/" + k);
    } else if (j.is_array()) {
      for (std::size_t i = 0; i < j.size(); ++i) walk(j[i], path + "/" + std::to_string(i));
    }
  }
};

Outcome verify_document(const std::string& path, const Options& o, Json& cfg) {
  cfg["in"] = path;
  Checker c{o};
  c.walk(read_json_file(path), "");
  if (c.results.empty()) throw UsageError("'" + path + "' contains no certificate");
  return {Json{{"certificates_checked", c.results.size()}, {"valid", c.all_valid}, {"results", c.results}},
          c.all_valid};
}

// ---- commands ------------------------------------------------------------

Outcome cmd_field(const Options& o, Json&) {
  const Field F = resolve_field(o);
  Json r{{"spec", F.spec()},
         {"p", F.p()},
         {"k", F.k()},
         {"q", F.q()},
         {"modulus", F.modulus()},
         {"nonsquare", F.format(F.find_nonsquare())},
         {"primitive", F.format(F.primitive())}};
  if (o.elements) {
    if (F.q() > o.budget_vertices) throw Error(ErrorCode::BudgetExceeded, "element table exceeds --budget-vertices");
    Json rows = Json::array();
    for (std::uint32_t c = 0; c < F.q(); ++c) {
      const Elt x = F.element(c);
      const auto root = F.sqrt(x);
      rows.push_back(Json{{"x", F.format(x)},
                          {"eta", F.eta(x)},
                          {"trace", F.format(F.trace(x))},
                          {"sqrt", root ? Json(F.format(*root)) : Json(nullptr)},
                          {"inverse", x == F.zero() ? Json(nullptr) : Json(F.format(F.inv(x)))}});
    }
    r["elements"] = rows;
  }
  return {r};
}

Outcome cmd_classify(const Options& o, Json&) {
  const Field F = resolve_field(o);
  const SymForm S = resolve_form(F, o);
  const FormClass c = classify_form(S);
  return {Json{{"n", S.n()},
               {"det", F.format(S.det())},
               {"det_is_square", F.is_square(S.det())},
               {"class", form_class_json(c)},
               {"isotropic_vectors", isotropic_count(S, F.zero())},
               {"quadric_size", quadric_size(c.kind, static_cast<unsigned>(S.n()), F.q())},
               {"matrix", to_json(F, S.matrix())}}};
}

Outcome cmd_graph(const Options& o, Json&) {
  const Field F = resolve_field(o);
  const SymForm S = resolve_form(F, o);
  const AffineGraph G = make_affine_graph(S);
  const auto n = static_cast<unsigned>(S.n());
  Json r;
  r["affine"] = Json{{"id", G.id},
                     {"vertex_count", G.vertex_count()},
                     {"valency", G.connection_set_size},
                     {"omega", ipow(F.q(), G.cls.witt_index)},
                     {"class", form_class_json(G.cls)}};
  Json quad{{"points", quadric_size(G.cls.kind, n, F.q())}, {"generator_size", G.cls.generator_size}};
  if (G.cls.witt_index >= 2) quad["ovoid_size"] = target_ovoid_size(G.cls.kind, n, F.q());
  r["quadric"] = quad;
  return {r};
}

Outcome cmd_spectrum(const Options& o, Json& cfg) {
  const Field F = resolve_field(o);
  cfg["method"] = o.method;
  QuadricKind kind;
  std::size_t n;
  std::optional<SymForm> S;
  if (o.form.empty() && !o.kind.empty()) {
    kind = parse_kind(o.kind);
    n = require_n(o);
  } else {
    S = resolve_form(F, o);
    kind = classify_form(*S).kind;
    n = S->n();
  }
  auto form = [&]() -> const SymForm& {
    if (!S) S = canonical_form(F, kind, n);
    return *S;
  };
  const auto un = static_cast<unsigned>(n);
  std::vector<SpectrumReport> reports;
  if (o.method == "closed") {
    reports.push_back(spectrum_closed_form(kind, un, F.q()));
  } else if (o.method == "character") {
    reports.push_back(spectrum_character(form(), o.budget_work));
  } else if (o.method == "analytic") {
    reports.push_back(spectrum_character_analytic(form(), o.budget_work));
  } else if (o.method == "oracle") {
    reports.push_back(spectrum_numeric_oracle(form(), o.budget_oracle));
  } else if (o.method == "all") {
    reports.push_back(spectrum_closed_form(kind, un, F.q()));
    reports.push_back(spectrum_character(form(), o.budget_work));
    if (ipow(F.q(), un) <= o.budget_oracle) reports.push_back(spectrum_numeric_oracle(form(), o.budget_oracle));
  } else {
    throw UsageError("--method must be closed, character, analytic, oracle or all");
  }
  const SpectrumReport& R = reports.front();
  const char* sign = kind == QuadricKind::parabolic ? "" : (kind == QuadricKind::hyperbolic ? "+" : "-");
  Json r{{"graph", "VO" + std::to_string(n) + sign + "(" + F.spec() + ")"},
         {"kind", to_string(kind)},
         {"n", n},
         {"q", F.q()}};
  r.update(spectrum_json(R));
  r["hoffman"] = R.valency > 0 ? Json(hoffman_alpha_bound(R).str()) : Json(nullptr);
  r["ramanujan"] = is_ramanujan(R);
  bool ok = report_consistent(R);
  if (reports.size() > 1) {
    Json agree = Json::array();
    for (const auto& other : reports) {
      const bool same = other.pairs == R.pairs;
      ok = ok && same;
      agree.push_back(Json{{"source", to_string(other.source)}, {"agrees", same}});
    }
    r["cross_check"] = agree;
  }
  return {r, ok};
}

Outcome cmd_clique(const Options& o, Json& cfg) {
  if (!o.verify_file.empty()) return verify_document(o.verify_file, o, cfg);
  const Field F = resolve_field(o);
  const SymForm S = resolve_form(F, o);
  const VertexSetCertificate cert = max_clique(make_affine_graph(S));
  return {vertex_set_json(S, cert), cert.verified};
}

Outcome cmd_mis(const Options& o, Json& cfg) {
  if (!o.verify_file.empty()) return verify_document(o.verify_file, o, cfg);
  const Field F = resolve_field(o);
  const SymForm S = resolve_form(F, o);
  if (o.core) {
    CoreEffort e;
    e.search = search_options(o);
    e.vertex_budget = o.budget_vertices;
    e.pair_budget = o.budget_pairs;
    const CoreReport R = core_verdict(S, e);
    Json r = core_report_json(F, R);
    const AffineGraph G = make_affine_graph(S);
    Json certs = Json::array();
    bool ok = true;
    for (auto [kind, vs] : {std::pair{SetKind::clique, &R.clique}, std::pair{SetKind::independent, &R.independent}}) {
      if (vs->empty()) continue;
      const auto cert = certify(G, kind, *vs);
      ok = ok && cert.verified;
      certs.push_back(vertex_set_json(S, cert));
    }
    r["certificates"] = certs;
    return {r, ok};
  }
  if (o.on_quadric) {
    const QuadricGraph Q = make_quadric_graph(S);
    const VertexSetCertificate cert = exact_mis(Q, search_options(o), o.budget_vertices);
    Json r = partial_ovoid_json(S, verify_partial_ovoid(Q, cert.vertices));
    r["optimal"] = cert.optimal;
    r["upper_bound"] = cert.upper_bound;
    r["nodes"] = cert.nodes;
    return {r, cert.verified};
  }
  const VertexSetCertificate cert = exact_mis(make_affine_graph(S), search_options(o), o.budget_vertices);
  return {vertex_set_json(S, cert), cert.verified};
}

Outcome cmd_ovoid_search(const Options& o, Json& cfg) {
  const Field F = resolve_field(o);
  const SymForm S = ovoid_form(F, o);
  cfg["form_matrix"] = to_json(F, S.matrix());
  const QuadricGraph Q = make_quadric_graph(S);
  std::optional<std::uint64_t> target;
  if (o.target != 0) target = o.target;
  const OvoidSearch res = search_partial_ovoid(Q, target, search_options(o));
  Json r = partial_ovoid_json(S, res.ovoid);
  r["optimal"] = res.optimal;
  r["upper_bound"] = res.upper_bound;
  r["nodes"] = res.nodes;
  if (o.audit) {
    const GeneratorAudit a = audit_generators(Q, res.ovoid.points);
    r["audit"] = Json{{"generators", a.generators}, {"min_meet", a.min_meet}, {"max_meet", a.max_meet}};
  }
  return {r};
}

Outcome cmd_ovoid_construct(const Options& o, Json&) {
  if (o.example.empty()) throw UsageError("--example is required");
  const Field F = resolve_field(o);
  const Construction c = construction(o.example, F);
  Json r = vertex_set_json(c.form, c.cert);
  r["construction"] = c.name;
  return {r, c.cert.verified};
}

Outcome cmd_ovoid_transfer(const Options& o, Json& cfg) {
  std::optional<Field> F;
  std::optional<SymForm> S;
  std::vector<Vec> pts;
  if (!o.in.empty()) {
    cfg["in"] = o.in;
    const Json doc = read_json_file(o.in);
    const Json& c = doc.contains("result") ? doc["result"] : doc;
    if (c.value("certificate", "") != "partial_ovoid") throw UsageError("--in must hold a partial_ovoid certificate");
    F = field_from_json(c);
    S = form_from_json(*F, c);
    pts = vecs_from_json(*F, c.at("points"));
  } else {
    F = resolve_field(o);
    S = ovoid_form(*F, o);
    const OvoidSearch res = search_partial_ovoid(make_quadric_graph(*S), std::nullopt, search_options(o));
    if (!res.ovoid.is_ovoid) throw Error(ErrorCode::NoWitness, "search found no ovoid");
    pts = res.ovoid.points;
  }
  const TransferResult tr = ovoid_to_affine_indep(*S, pts);
  Json r{{"pivot_point", tr.pivot_point}, {"pivot_coord", tr.pivot_coord}};
  const auto lower = certify(make_affine_graph(tr.lower_form), SetKind::independent, tr.lower);
  r["lower"] = vertex_set_json(tr.lower_form, lower);
  bool ok = lower.verified;
  if (tr.bordered_form) {
    const auto bordered = certify(make_affine_graph(*tr.bordered_form), SetKind::independent, tr.bordered);
    r["bordered"] = vertex_set_json(*tr.bordered_form, bordered);
    ok = ok && bordered.verified;
  }
  return {r, ok};
}

Vec parse_vec(const Field& F, const std::string& text, std::size_t n) {
  if (text.empty()) return zero_vec(n);
  Vec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(F.parse_element(item));
  if (v.size() != n) throw UsageError("--x0 needs " + std::to_string(n) + " comma-separated entries");
  return v;
}

Outcome report_map(const MinkowskiSpace& M, const LightMap& m, const Options& o, Json& cfg) {
  const RuleReport rep = verify_rule(M, m, verify_mode(M, o, 1'000'000, cfg), o.budget_pairs, o.threads);
  Json r{{"map", light_map_json(M, m)}, {"report", rule_report_json(M.field, rep)}};
  return {r, rep.passed()};
}

Outcome cmd_map_semilinear(const Options& o, Json& cfg) {
  const Field F = resolve_field(o);
  const MinkowskiSpace M = MinkowskiSpace::create(F, require_n(o));
  Matrix P;
  if (o.matrix == "identity") {
    P = Matrix::identity(M.n);
  } else if (o.matrix == "anti-lorentz") {
    P = make_anti_lorentz(M);
  } else if (o.matrix.ends_with(".json")) {
    const Json j = read_json_file(o.matrix);
    P = matrix_from_json(F, j.is_array() ? j : j.at("matrix"));
  } else {
    throw UsageError("--matrix must be identity, anti-lorentz or a .json file");
  }
  cfg["matrix"] = o.matrix;
  cfg["a"] = o.a;
  cfg["tau"] = o.tau;
  const LightMap m = semilinear_map(M, F.parse_element(o.a), P, o.tau, parse_vec(F, o.x0, M.n));
  Outcome res = report_map(M, m, o, cfg);
  Json inv_cfg;
  const RuleReport inv = verify_rule(M, semilinear_inverse(M, m), verify_mode(M, o, 1'000'000, inv_cfg),
                                     o.budget_pairs, o.threads);
  res.result["inverse_report"] = rule_report_json(F, inv);
  res.ok = res.ok && inv.passed();
  return res;
}

Outcome cmd_map_factor(const Options& o, Json& cfg) {
  const Field F = resolve_field(o);
  const MinkowskiSpace M = MinkowskiSpace::create(F, require_n(o));
  const AffineGraph G = make_affine_graph(M.form);
  std::optional<std::string> name;
  if (!o.construction.empty()) {
    name = o.construction;
  } else {
    name = applicable_construction(M.graph_kind, M.n, F);
  }
  cfg["construction"] = name ? Json(*name) : Json("exact_mis");
  std::vector<Vec> indep =
      name ? transported_construction(M.form, *name) : exact_mis(G, search_options(o), o.budget_vertices).vertices;
  const LightMap m = clique_factorization_map(M, max_clique(G).vertices, std::move(indep));
  return report_map(M, m, o, cfg);
}

Outcome cmd_map_example(const Options& o, Json& cfg) {
  if (o.example.empty()) throw UsageError("--example is required");
  const Field F = resolve_field(o);
  const std::size_t n = o.n != 0 ? o.n : explicit_map_dimension(o.example);
  cfg["n"] = n;
  const MinkowskiSpace M = MinkowskiSpace::create(F, n);
  return report_map(M, explicit_map(M, o.example), o, cfg);
}

Outcome cmd_map_verify(const Options& o, Json& cfg) {
  if (!o.in.empty()) return verify_document(o.in, o, cfg);
  return cmd_map_example(o, cfg);
}

Outcome cmd_map_verdict(const Options& o, Json& cfg) {
  const Field F = resolve_field(o);
  const MinkowskiSpace M = MinkowskiSpace::create(F, require_n(o));
  VerdictOptions go;
  go.build_witness = !o.no_witness;
  go.verify.seed = o.seed;
  if (o.samples != 0) go.verify.samples = o.samples;
  go.pair_budget = o.budget_pairs;
  cfg["samples"] = go.verify.samples;
  const BijectivityVerdict v = bijectivity_verdict(M, go);
  Json r{{"graph_kind", to_string(M.graph_kind)},
         {"branch", v.branch},
         {"automatic_bijectivity", v.automatic_bijectivity},
         {"nonbijective", to_string(v.nonbijective)},
         {"reason", v.reason}};
  r["example"] = v.example ? Json(*v.example) : Json(nullptr);
  bool ok = true;
  if (v.witness) {
    r["witness"] = Json{{"kind", to_string(v.witness->kind)},
                        {"clique_size", v.witness->clique->size()},
                        {"indep_size", v.witness->indep->size()}};
    r["witness_report"] = rule_report_json(F, *v.witness_report);
    ok = v.witness_report->passed();
  }
  return {r, ok};
}

// ---- output --------------------------------------------------------------

void flatten(const Json& j, const std::string& key, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, key.empty() ? k : key + "." + k, rows);
    return;
  }
  if (j.is_array()) {
    const bool scalars = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalars && j.size() <= 16) {
      rows.emplace_back(key, j.dump());
    } else if (j.size() <= 16) {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], key + "[" + std::to_string(i) + "]", rows);
    } else {
      rows.emplace_back(key, "[" + std::to_string(j.size()) + " entries]");
    }
    return;
  }
  rows.emplace_back(key, j.is_string() ? j.get<std::string>() : j.dump());
}

std::string render_pretty(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string s;
  for (const auto& [k, v] : rows) s += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  return s;
}

Json base_config(const Options& o) {
  Json c;
  if (!o.field.empty()) c["field"] = o.field;
  if (o.q != 0) c["q"] = o.q;
  if (!o.form.empty()) c["form"] = o.form;
  if (!o.kind.empty()) c["kind"] = o.kind;
  if (!o.quadric.empty()) c["quadric"] = o.quadric;
  if (o.n != 0) c["n"] = o.n;
  if (!o.example.empty()) c["example"] = o.example;
  c["seed"] = o.seed;
  c["threads"] = o.threads;
  c["budgets"] = Json{{"vertices", o.budget_vertices},
                      {"pairs", o.budget_pairs},
                      {"nodes", o.budget_nodes},
                      {"work", o.budget_work},
                      {"oracle", o.budget_oracle}};
  return c;
}

bool is_verification_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::VerificationFailed:
    case ErrorCode::NotOnQuadric:
    case ErrorCode::PerpendicularPair:
    case ErrorCode::FactorizationFailed:
    case ErrorCode::NotAnArc:
      return true;
    default:
      return false;
  }
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Affine polar graphs, ovoids and light-like maps over finite fields", "polarcore"};
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--field", o.field, "Field as p, p^k or p^k/c0,...,ck");
  app.add_option("-q", o.q, "Field order (default modulus)");
  app.add_option("--form", o.form, "Form id or a .json file with a matrix");
  app.add_option("--kind", o.kind, "parabolic | hyperbolic | elliptic (canonical form)");
  app.add_option("-n", o.n, "Vector space dimension");
  app.add_option("--seed", o.seed, "Seed for sampled checks");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--out", o.out, "Write output to this file");
  app.add_flag("--pretty", o.pretty, "Aligned text instead of JSON");
  app.add_option("--budget-vertices", o.budget_vertices, "Largest dense graph");
  app.add_option("--budget-pairs", o.budget_pairs, "Largest exhaustive pair check");
  app.add_option("--budget-nodes", o.budget_nodes, "Branch-and-bound node limit");
  app.add_option("--budget-work", o.budget_work, "Character sum work limit");
  app.add_option("--budget-oracle", o.budget_oracle, "Largest numeric eigensolve");
  app.add_option("--method", o.method, "spectrum: closed | character | analytic | oracle | all");
  app.add_flag("--elements", o.elements, "field: list every element");
  app.add_flag("--quadric-graph", o.on_quadric, "mis: search the quadric point graph");
  app.add_flag("--core", o.core, "mis: full core verdict");
  app.add_option("--verify", o.verify_file, "clique/mis: re-check a certificate file");
  app.add_option("--in", o.in, "Input certificate file");
  app.add_option("--example", o.example, "Construction or explicit map name");
  app.add_option("--quadric", o.quadric, "ovoid: quadric kind");
  app.add_option("--target", o.target, "ovoid search: stop at this size");
  app.add_flag("--audit", o.audit, "ovoid search: count ovoid points on every generator");
  app.add_option("--mode", o.mode, "map: exhaustive | sampled | auto");
  app.add_option("--samples", o.samples, "map: sampled pair count");
  app.add_option("--a", o.a, "semilinear: scale");
  app.add_option("--matrix", o.matrix, "semilinear: identity | anti-lorentz | file.json");
  app.add_option("--tau", o.tau, "semilinear: Frobenius exponent");
  app.add_option("--x0", o.x0, "semilinear: translation, comma separated");
  app.add_option("--construction", o.construction, "map factor: independent set construction");
  app.add_flag("--no-witness", o.no_witness, "map verdict: skip building a witness map");

  auto* field_cmd = app.add_subcommand("field", "Field parameters and element table");
  auto* classify_cmd = app.add_subcommand("classify", "Classify a symmetric form");
  auto* graph_cmd = app.add_subcommand("graph", "Affine polar graph and quadric parameters");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of the affine polar graph");
  auto* clique_cmd = app.add_subcommand("clique", "Maximum clique certificate");
  auto* mis_cmd = app.add_subcommand("mis", "Exact maximum independent set or core verdict");
  auto* ovoid_cmd = app.add_subcommand("ovoid", "Partial ovoids and constructions");
  ovoid_cmd->require_subcommand(1);
  auto* ov_search = ovoid_cmd->add_subcommand("search", "Exact partial ovoid search");
  auto* ov_verify = ovoid_cmd->add_subcommand("verify", "Re-check every certificate in --in");
  auto* ov_construct = ovoid_cmd->add_subcommand("construct", "Named independent-set construction");
  auto* ov_transfer = ovoid_cmd->add_subcommand("transfer", "Ovoid to affine independent sets");
  auto* map_cmd = app.add_subcommand("map", "Maps preserving light-like pairs");
  map_cmd->require_subcommand(1);
  auto* map_build = map_cmd->add_subcommand("build", "Build and verify a map");
  map_build->require_subcommand(1);
  auto* mb_semi = map_build->add_subcommand("semilinear", "x -> a P x^tau + x0");
  auto* mb_factor = map_build->add_subcommand("factor", "Clique factorization map");
  auto* mb_example = map_build->add_subcommand("example", "Explicit map by name");
  auto* map_verify = map_cmd->add_subcommand("verify", "Verify a map from --in or --example");
  auto* map_verdict = map_cmd->add_subcommand("verdict", "Bijectivity verdict for M_n(q)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  struct Route {
    CLI::App* cmd;
    std::string name;
    Outcome (*run)(const Options&, Json&);
  };
  const std::vector<Route> routes{
      {field_cmd, "field", cmd_field},
      {classify_cmd, "classify", cmd_classify},
      {graph_cmd, "graph", cmd_graph},
      {spectrum_cmd, "spectrum", cmd_spectrum},
      {clique_cmd, "clique", cmd_clique},
      {mis_cmd, "mis", cmd_mis},
      {ov_search, "ovoid search", cmd_ovoid_search},
      {ov_verify, "ovoid verify",
       [](const Options& opt, Json& cfg) {
         if (opt.in.empty()) throw UsageError("--in is required");
         return verify_document(opt.in, opt, cfg);
       }},
      {ov_construct, "ovoid construct", cmd_ovoid_construct},
      {ov_transfer, "ovoid transfer", cmd_ovoid_transfer},
      {mb_semi, "map build semilinear", cmd_map_semilinear},
      {mb_factor, "map build factor", cmd_map_factor},
      {mb_example, "map build example", cmd_map_example},
      {map_verify, "map verify", cmd_map_verify},
      {map_verdict, "map verdict", cmd_map_verdict},
  };

  try {
    for (const auto& route : routes) {
      if (!route.cmd->parsed()) continue;
      Json cfg = base_config(o);
      Outcome res = route.run(o, cfg);
      Json doc{{"schema", kSchemaVersion}, {"command", route.name}, {"config", cfg}, {"result", res.result}};
      const std::string text = o.pretty ? render_pretty(doc) : doc.dump(2) + "\n";
      if (o.out.empty()) {
        out << text;
      } else {
        std::ofstream f(o.out);
        if (!f) throw UsageError("cannot write '" + o.out + "'");
        f << text;
      }
      return res.ok ? 0 : 2;
    }
    throw UsageError("no command given");
  } catch (const Error& e) {
    err << Json{{"error", to_string(e.code())}, {"message", e.what()}}.dump() << "\n";
    return is_verification_error(e.code()) ? 2 : 1;
  } catch (const UsageError& e) {
    err << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    err << Json{{"error", "json"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}

}  // namespace polarcore
