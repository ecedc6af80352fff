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

// Partial ovoids of quadrics, the worked independent-set constructions, and
// the transfer of an ovoid to an independent set two dimensions lower.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polarcore/polar_graphs.hpp"

namespace polarcore {

/// Ovoid size for a quadric with Witt index >= 2. Throws WittIndexTooSmall.
std::uint64_t target_ovoid_size(QuadricKind kind, unsigned n, std::uint32_t q);

struct PartialOvoid {
  std::string quadric_id;
  std::vector<Vec> points;
  std::optional<std::uint64_t> target;  // unset when the Witt index is below 2
  bool is_ovoid = false;                // size reached the target
};

/// Throws NotOnQuadric or PerpendicularPair naming the offending points.
PartialOvoid verify_partial_ovoid(const QuadricGraph& Q, const std::vector<Vec>& points);

struct GeneratorAudit {
  std::uint64_t generators = 0;
  std::uint64_t min_meet = 0;
  std::uint64_t max_meet = 0;
};

/// Enumerates all generators (cliques of size (q^r-1)/(q-1) in the point graph)
/// and counts how many points of the set each one contains. Throws BudgetExceeded
/// when more than `limit` generators turn up.
GeneratorAudit audit_generators(const QuadricGraph& Q, const std::vector<Vec>& points, std::uint64_t limit = 10'000);

struct OvoidSearch {
  PartialOvoid ovoid;
  bool optimal = false;
  std::uint64_t upper_bound = 0;
  std::uint64_t nodes = 0;
};

/// Exact independent-set search on the point graph, stopping early at `target`
/// (or the ovoid size when the Witt index allows one).
OvoidSearch search_partial_ovoid(const QuadricGraph& Q, std::optional<std::uint64_t> target = std::nullopt,
                                 const SearchOptions& options = {});

struct Construction {
  std::string name;
  SymForm form;
  std::vector<Vec> points;
  VertexSetCertificate cert;  // pairwise-verified independent set in VO(form)
};

std::vector<std::string> construction_names();
/// primer0 (any odd q), primer1 and primer2 (q = 3^k), primer3 (p, k odd,
/// p ≡ 2 mod 3, -1 non-square, 3 square). Throws BadFieldForConstruction.
Construction construction(std::string_view name, const Field& F);

struct TransferResult {
  SymForm lower_form;          // A' of dimension n - 2
  std::vector<Vec> lower;      // independent set in VO(A')
  std::optional<SymForm> bordered_form;  // parabolic only: A' ⊕ (-1)
  std::vector<Vec> bordered;   // parabolic only: zero-extended set
  std::size_t pivot_point = 0; // index of the pivot in the input order
  std::size_t pivot_coord = 0; // 0-based coordinate used as pivot
};

/// Turns an ovoid of the antidiagonal model (parabolic, odd n) or of the
/// bordered model antidiag(n-1) ⊕ (-1) (hyperbolic, even n) into independent
/// sets of size |O| - 1. Throws NoPivot or VerificationFailed.
TransferResult ovoid_to_affine_indep(const SymForm& S, const std::vector<Vec>& ovoid);

/// Maps points of `source` into coordinates of `target` via a congruence, so
/// orthogonality relations (and hence ovoids) are preserved.
std::vector<Vec> transport_points(const SymForm& target, const SymForm& source, const std::vector<Vec>& points);

/// Recovers an ovoid from a clique K and an independent set I with |K||I| = q^n:
/// the vertices of k + (I - i) adjacent to 0, for a nonzero k in K - K.
std::vector<Vec> ovoid_from_factorization(const AffineGraph& G, const std::vector<Vec>& clique,
                                          const std::vector<Vec>& indep);

enum class Existence { exists, none, open };

std::string_view to_string(Existence e);

struct OvoidExistence {
  Existence status;
  std::string reason;
};

/// Literature lookup for ovoids of Q_{n-1}^ε(q) (n is the vector-space dimension).
OvoidExistence ovoid_existence(QuadricKind kind, unsigned n, std::uint32_t q);

}  // namespace polarcore
