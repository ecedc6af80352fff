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

// Finite Minkowski space M_n(q) and maps preserving light-like pairs.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polarcore/ovoids.hpp"

namespace polarcore {

struct MinkowskiSpace {
  Field field;
  std::size_t n;
  SymForm form;  // diag(1, -1, ..., -1)
  QuadricKind graph_kind;

  /// Throws PreconditionViolated unless q ≡ 3 (mod 4), and DimensionMismatch for n < 2.
  static MinkowskiSpace create(const Field& F, std::size_t n);
};

Elt inner(const MinkowskiSpace& S, const Vec& x, const Vec& y);
/// (x - y, x - y) = 0; true for x = y.
bool is_lightlike(const MinkowskiSpace& S, const Vec& x, const Vec& y);

enum class LorentzKind { lorentz, anti_lorentz, neither };
std::string_view to_string(LorentzKind k);

LorentzKind lorentz_check(const MinkowskiSpace& S, const Matrix& P);
/// [[0,1],[1,0]] ⊕ [[a0,b0],[-b0,a0]]^{(n-2)/2} with a0² + b0² = -1. Throws OddDimension.
Matrix make_anti_lorentz(const MinkowskiSpace& S);

enum class MapKind { semilinear, clique_factorization, explicit_example, composite };
std::string_view to_string(MapKind k);

struct LightMap {
  MapKind kind = MapKind::semilinear;
  std::string name;
  std::function<Vec(const Vec&)> eval;

  // semilinear: x -> a P x^{p^tau} + x0
  Elt a{};
  Matrix P;
  unsigned tau = 0;
  Vec x0;
  LorentzKind lorentz = LorentzKind::neither;

  // clique_factorization: the clique K (a subspace) and independent set I.
  std::shared_ptr<const std::vector<Vec>> clique;
  std::shared_ptr<const std::vector<Vec>> indep;

  Vec operator()(const Vec& x) const { return eval(x); }
};

/// Throws ZeroScale or NotIsometry.
LightMap semilinear_map(const MinkowskiSpace& S, Elt a, const Matrix& P, unsigned tau, const Vec& x0);
LightMap semilinear_inverse(const MinkowskiSpace& S, const LightMap& m);

/// g -> k_g from the unique decomposition g = k_g + i_g. Inputs are translated
/// so they contain 0. The full table is checked when q^n <= table_budget.
/// Throws FactorizationFailed.
LightMap clique_factorization_map(const MinkowskiSpace& S, std::vector<Vec> clique, std::vector<Vec> indep,
                                  std::uint64_t table_budget = 100'000);

std::vector<std::string> explicit_map_names();
std::size_t explicit_map_dimension(std::string_view name);
/// dim2, dim3, exa5, dim6_thas, dim6_kantor. Throws BadFieldForConstruction.
LightMap explicit_map(const MinkowskiSpace& S, std::string_view name);

LightMap compose(const LightMap& outer, const LightMap& inner);

struct VerifyMode {
  bool exhaustive = true;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 20260101;
};

struct RuleReport {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::pair<Vec, Vec>> witnesses;  // first violations, sorted
  std::optional<std::uint64_t> image_size;     // exhaustive only
  std::optional<bool> image_pairwise_lightlike;

  bool passed() const { return violations == 0; }
};

/// Checks that light-like x != y have light-like, distinct images.
/// Exhaustive mode visits every unordered pair once (q^n |S| / 2 pairs).
RuleReport verify_rule(const MinkowskiSpace& S, const LightMap& m, const VerifyMode& mode,
                       std::uint64_t pair_budget = 10'000'000, unsigned threads = 1);

struct BijectivityVerdict {
  std::string branch;
  bool automatic_bijectivity = false;    // every rule map is semilinear
  Existence nonbijective = Existence::open;
  std::string reason;
  std::optional<std::string> example;    // explicit map with the same image structure
  std::optional<LightMap> witness;
  std::optional<RuleReport> witness_report;
};

struct VerdictOptions {
  bool build_witness = true;
  VerifyMode verify{false, 10'000, 20260101};
  std::uint64_t pair_budget = 10'000'000;
};

/// Throws OutOfScopeParameters unless n >= 4 and q ≡ 3 (mod 4).
BijectivityVerdict bijectivity_verdict(const MinkowskiSpace& S, const VerdictOptions& options = {});

}  // namespace polarcore
