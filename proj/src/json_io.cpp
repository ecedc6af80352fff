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


#include "polarcore/json_io.hpp"

#include "polarcore/error.hpp"

namespace polarcore {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

}  // namespace

Json to_json(const Field& F, Elt x) { return F.format(x); }

Json to_json(const Field& F, const Vec& v) {
  Json a = Json::array();
  for (Elt x : v) a.push_back(F.format(x));
  return a;
}

Json to_json(const Field& F, const Matrix& M) {
  Json a = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) a.push_back(to_json(F, M.row(i)));
  return a;
}

Json to_json(const Field& F, const std::vector<Vec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(F, v));
  return a;
}

Elt elt_from_json(const Field& F, const Json& j) {
  if (j.is_string()) return F.parse_element(j.get<std::string>());
  if (j.is_number_integer()) return F.from_int(j.get<std::int64_t>());
  bad("field element must be a string or integer");
}

Vec vec_from_json(const Field& F, const Json& j) {
  if (!j.is_array()) bad("vector must be an array");
  Vec v;
  for (const auto& x : j) v.push_back(elt_from_json(F, x));
  return v;
}

Matrix matrix_from_json(const Field& F, const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(F, r));
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) bad("matrix rows differ in length");
  }
  return Matrix::from_rows(rows);
}

std::vector<Vec> vecs_from_json(const Field& F, const Json& j) {
  if (!j.is_array()) bad("vector list must be an array");
  std::vector<Vec> out;
  for (const auto& v : j) out.push_back(vec_from_json(F, v));
  return out;
}

Json form_class_json(const FormClass& c) {
  return Json{{"kind", to_string(c.kind)}, {"witt_index", c.witt_index}, {"generator_size", c.generator_size}};
}

Json spectrum_json(const SpectrumReport& R) {
  Json pairs = Json::array();
  for (auto [l, m] : R.pairs) pairs.push_back(Json::array({l, m}));
  return Json{{"source", to_string(R.source)},
              {"vertex_count", R.vertex_count},
              {"valency", R.valency},
              {"pairs", pairs},
              {"consistent", report_consistent(R)}};
}

Json vertex_set_json(const SymForm& S, const VertexSetCertificate& c) {
  const Field& F = S.field();
  return Json{{"certificate", c.kind == SetKind::clique ? "clique" : "independent"},
              {"graph", "affine"},
              {"graph_id", c.graph_id},
              {"field", F.spec()},
              {"form", to_json(F, S.matrix())},
              {"size", c.vertices.size()},
              {"verified", c.verified},
              {"optimal", c.optimal},
              {"upper_bound", c.upper_bound},
              {"nodes", c.nodes},
              {"vertices", to_json(F, c.vertices)}};
}

Json partial_ovoid_json(const SymForm& S, const PartialOvoid& o) {
  const Field& F = S.field();
  Json j{{"certificate", "partial_ovoid"},
         {"quadric_id", o.quadric_id},
         {"field", F.spec()},
         {"form", to_json(F, S.matrix())},
         {"size", o.points.size()}};
  j["target"] = o.target ? Json(*o.target) : Json(nullptr);
  j["is_ovoid"] = o.is_ovoid;
  j["points"] = to_json(F, o.points);
  return j;
}

Json core_report_json(const Field& F, const CoreReport& R) {
  Json j{{"vertex_count", R.vertex_count},
         {"omega", R.omega},
         {"alpha_lower", R.alpha_lower},
         {"alpha_upper", R.alpha_upper},
         {"alpha_exact", R.alpha_exact},
         {"hoffman_bound", R.hoffman.str()},
         {"product_equality", R.product_equality},
         {"verdict", to_string(R.verdict)},
         {"ovoid_implication", R.ovoid_implication},
         {"strict_hoffman", R.strict_hoffman},
         {"evidence", R.evidence}};
  j["clique"] = to_json(F, R.clique);
  j["independent"] = to_json(F, R.independent);
  return j;
}

Json rule_report_json(const Field& F, const RuleReport& R) {
  Json j{{"mode", R.exhaustive ? "exhaustive" : "sampled"}};
  if (!R.exhaustive) j["seed"] = R.seed;
  j["pairs_checked"] = R.pairs_checked;
  j["violations"] = R.violations;
  Json w = Json::array();
  for (const auto& [x, y] : R.witnesses) w.push_back(Json::array({to_json(F, x), to_json(F, y)}));
  j["witnesses"] = w;
  if (R.image_size) j["image_size"] = *R.image_size;
  if (R.image_pairwise_lightlike) j["image_pairwise_lightlike"] = *R.image_pairwise_lightlike;
  j["passed"] = R.passed();
  return j;
}

Json light_map_json(const MinkowskiSpace& S, const LightMap& m) {
  const Field& F = S.field;
  Json j{{"certificate", "light_map"}, {"kind", to_string(m.kind)}, {"name", m.name}, {"field", F.spec()}, {"n", S.n}};
  switch (m.kind) {
    case MapKind::semilinear:
      j["a"] = to_json(F, m.a);
      j["P"] = to_json(F, m.P);
      j["tau"] = m.tau;
      j["x0"] = to_json(F, m.x0);
      j["lorentz"] = to_string(m.lorentz);
      break;
    case MapKind::clique_factorization:
      j["clique"] = to_json(F, *m.clique);
      j["indep"] = to_json(F, *m.indep);
      break;
    case MapKind::explicit_example:
    case MapKind::composite:
      break;
  }
  return j;
}

LightMap light_map_from_json(const MinkowskiSpace& S, const Json& j) {
  const Field& F = S.field;
  const std::string kind = j.value("kind", "");
  if (kind == "semilinear") {
    LightMap m = semilinear_map(S, elt_from_json(F, j.at("a")), matrix_from_json(F, j.at("P")),
                                j.at("tau").get<unsigned>(), vec_from_json(F, j.at("x0")));
    m.name = j.value("name", m.name);
    return m;
  }
  if (kind == "clique_factorization") {
    return clique_factorization_map(S, vecs_from_json(F, j.at("clique")), vecs_from_json(F, j.at("indep")));
  }
  if (kind == "explicit_example") return explicit_map(S, j.at("name").get<std::string>());
  bad("cannot rebuild a light map of kind '" + kind + "'");
}

Field field_from_json(const Json& j) {
  if (!j.contains("field") || !j["field"].is_string()) bad("document has no field spec");
  return Field::parse(j["field"].get<std::string>());
}

SymForm form_from_json(const Field& F, const Json& j) {
  if (!j.contains("form")) bad("document has no form");
  return SymForm(F, matrix_from_json(F, j["form"]));
}

}  // namespace polarcore
