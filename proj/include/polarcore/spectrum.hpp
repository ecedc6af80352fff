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

// Spectra of affine polar graphs: closed form, character sums, and a dense
// floating-point oracle used only as an independent cross-check.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polarcore/quadspace.hpp"

namespace polarcore {

enum class SpectrumSource { closed_form, character_sum, numeric_oracle };

std::string_view to_string(SpectrumSource source);

struct SpectrumReport {
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;  // (eigenvalue, multiplicity), descending
  SpectrumSource source = SpectrumSource::closed_form;
  std::uint64_t vertex_count = 0;
  std::int64_t valency = 0;

  std::int64_t max_eigenvalue() const { return pairs.front().first; }
  std::int64_t min_eigenvalue() const { return pairs.back().first; }
};

/// Σm = |V|, Σλm = 0 and λ_max = valency.
bool report_consistent(const SpectrumReport& R);

SpectrumReport spectrum_closed_form(QuadricKind kind, unsigned n, std::uint32_t q);

/// Enumerates every functional a and counts s in S with Tr(aᵀs) = 0.
/// Work is q^n · |S|; throws BudgetExceeded above `budget`.
SpectrumReport spectrum_character(const SymForm& S, std::uint64_t budget = 2'000'000'000);

/// Parabolic forms only: counts |Ω_0^a| in closed form case by case after
/// reducing the form to a multiple of the identity.
SpectrumReport spectrum_character_analytic(const SymForm& S, std::uint64_t budget = 100'000'000);

/// Dense symmetric eigensolve of the adjacency matrix; throws BudgetExceeded
/// when q^n > budget and NonIntegerEigenvalue when rounding residual >= 1e-6.
SpectrumReport spectrum_numeric_oracle(const SymForm& S, std::uint64_t budget = 3000);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::int64_t floor() const;
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

/// |V| (-λ_min) / (λ_max - λ_min). Throws ZeroValency.
Rational hoffman_alpha_bound(const SpectrumReport& R);

/// λ² <= 4(λ_1 - 1) for every eigenvalue λ with |λ| != λ_1.
bool is_ramanujan(const SpectrumReport& R);

}  // namespace polarcore
