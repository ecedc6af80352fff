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

// Core verdicts for affine polar graphs: is the graph a core, or is its core
// complete (equivalently ω·α = |V|)?

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polarcore/ovoids.hpp"
#include "polarcore/spectrum.hpp"

namespace polarcore {

enum class CoreVerdict { complete_core, graph_is_core, undecided };

std::string_view to_string(CoreVerdict v);

struct CoreReport {
  std::uint64_t vertex_count = 0;
  std::uint64_t omega = 0;
  std::uint64_t alpha_lower = 0;
  std::uint64_t alpha_upper = 0;  // equals alpha_lower when α is exact
  bool alpha_exact = false;
  Rational hoffman;
  bool product_equality = false;   // ω·α = |V| certified
  CoreVerdict verdict = CoreVerdict::undecided;
  bool ovoid_implication = false;  // complete core would force an ovoid (r >= 2, not elliptic)
  bool strict_hoffman = false;     // elliptic: ω·(Hoffman bound) < |V|
  std::string evidence;            // how the verdict was reached
  std::vector<Vec> clique;         // verified witnesses (empty when too large)
  std::vector<Vec> independent;
};

struct CoreEffort {
  SearchOptions search;
  std::uint64_t vertex_budget = kDefaultVertexBudget;
  std::uint64_t pair_budget = 10'000'000;
  bool use_constructions = true;
};

CoreReport core_verdict(const SymForm& S, const CoreEffort& effort = {});

/// The worked construction that applies to this graph kind, dimension and field, if any.
std::optional<std::string> applicable_construction(QuadricKind kind, std::size_t n, const Field& F);

/// A construction's independent set moved into the coordinates of S.
std::vector<Vec> transported_construction(const SymForm& S, std::string_view name);

}  // namespace polarcore
