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


#pragma once

// JSON encoding of fields, forms, certificates and reports.
//
// Field elements are strings in the field's own notation ("2", "t+1"), so the
// encoding never depends on integer width. Spectrum data and counts are plain
// integers; rationals are strings such as "81/4".

#include <string>

#include <json.hpp>

#include "polarcore/core.hpp"
#include "polarcore/minkowski.hpp"

namespace polarcore {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Field& F, Elt x);
Json to_json(const Field& F, const Vec& v);
Json to_json(const Field& F, const Matrix& M);
Json to_json(const Field& F, const std::vector<Vec>& vs);

/// Throws ParseError on malformed input.
Elt elt_from_json(const Field& F, const Json& j);
Vec vec_from_json(const Field& F, const Json& j);
Matrix matrix_from_json(const Field& F, const Json& j);
std::vector<Vec> vecs_from_json(const Field& F, const Json& j);

Json form_class_json(const FormClass& c);
Json spectrum_json(const SpectrumReport& R);
Json vertex_set_json(const SymForm& S, const VertexSetCertificate& c);
Json partial_ovoid_json(const SymForm& S, const PartialOvoid& o);
Json core_report_json(const Field& F, const CoreReport& R);
Json rule_report_json(const Field& F, const RuleReport& R);
/// Kind, parameters and field spec. Composite maps carry only their name.
Json light_map_json(const MinkowskiSpace& S, const LightMap& m);
/// Rebuilds a serialized map. Throws ParseError for composite or unknown kinds.
LightMap light_map_from_json(const MinkowskiSpace& S, const Json& j);

/// Field and form embedded in a certificate.
Field field_from_json(const Json& j);
SymForm form_from_json(const Field& F, const Json& j);

}  // namespace polarcore
