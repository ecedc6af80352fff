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

// Affine polar graphs VO_n^ε(q) on F_q^n and quadric point graphs Q_{n-1}^ε(q).
//
// Affine vertices are implicit: adjacency is computed from the form, and only
// graphs below a vertex budget are ever materialised as dense adjacency.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "polarcore/mis.hpp"
#include "polarcore/quadspace.hpp"

namespace polarcore {

inline constexpr std::uint64_t kDefaultVertexBudget = 10'000;

struct AffineGraph {
  SymForm form;
  FormClass cls;
  std::uint64_t connection_set_size;  // |S| = valency
  std::string id;

  std::uint64_t vertex_count() const;
};

struct QuadricGraph {
  SymForm form;
  FormClass cls;
  std::vector<Vec> points;  // canonical projective representatives, ascending
  std::string id;
};

AffineGraph make_affine_graph(const SymForm& S, std::string id = {});
/// Throws BudgetExceeded when the projective space has more than `budget` points.
QuadricGraph make_quadric_graph(const SymForm& S, std::string id = {}, std::uint64_t budget = 2'000'000);
std::pair<AffineGraph, QuadricGraph> build_graphs(const SymForm& S, std::string id = {});

/// Quadric size from the closed-form isotropic count: (|{x : Q(x)=0}| - 1)/(q - 1).
std::uint64_t quadric_size(QuadricKind kind, unsigned n, std::uint32_t q);

/// Scales x so its first nonzero coordinate is 1.
Vec projective_rep(const Field& F, const Vec& x);

bool adjacent(const AffineGraph& G, const Vec& u, const Vec& v);
bool adjacent(const QuadricGraph& G, const Vec& u, const Vec& v);

enum class SetKind { clique, independent };

struct VertexSetCertificate {
  SetKind kind;
  std::string graph_id;
  std::vector<Vec> vertices;
  bool verified = false;
  bool optimal = false;             // maximum, not merely valid
  std::uint64_t upper_bound = 0;    // proven bound on the optimum (0 when unknown)
  std::uint64_t nodes = 0;          // branch-and-bound nodes, when searched
};

/// Full pairwise re-check; verified is false on any violation or duplicate.
VertexSetCertificate certify(const AffineGraph& G, SetKind kind, std::vector<Vec> vertices);
VertexSetCertificate certify(const QuadricGraph& G, SetKind kind, std::vector<Vec> vertices);

/// All F_q-linear combinations of the basis, in lexicographic coefficient order.
std::vector<Vec> span(const Field& F, const std::vector<Vec>& basis);

/// Maximum clique through 0: the span of a maximal totally isotropic subspace.
VertexSetCertificate max_clique(const AffineGraph& G);

struct NeighborhoodIso {
  std::vector<std::pair<std::size_t, Elt>> domain;  // (quadric point index, scalar a)
  std::vector<Vec> image;                           // a * x_i
  bool verified = false;
};

/// The map (<x_i>, a) -> a x_i from Q[K_{q-1}] onto the neighbourhood of 0,
/// checked to be a bijection preserving adjacency both ways.
NeighborhoodIso neighborhood_iso(const AffineGraph& G, const QuadricGraph& Q);

/// A common neighbour of non-adjacent distinct x, y.
Vec common_neighbor(const AffineGraph& G, const Vec& x, const Vec& y, std::uint64_t seed = 1);

/// z -> P z - shift.
struct AffineMap {
  Matrix P;
  Vec shift;

  Vec operator()(const Field& F, const Vec& z) const { return sub(F, mul(F, P, z), shift); }
};

/// Automorphism taking the arc (x1, y1) to (x2, y2).
AffineMap arc_mapping(const AffineGraph& G, const Vec& x1, const Vec& y1, const Vec& x2, const Vec& y2);

/// Dense adjacency with vertex i = vec_from_index(i). Throws BudgetExceeded.
DenseGraph dense_graph(const AffineGraph& G, std::uint64_t budget = kDefaultVertexBudget);
DenseGraph dense_graph(const QuadricGraph& G, std::uint64_t budget = kDefaultVertexBudget);

/// Exact maximum independent set. Affine graphs are Cayley graphs, so the search
/// is anchored at vertex 0. When the node limit is hit the best set found is
/// returned with optimal = false and the root colouring bound as upper_bound.
VertexSetCertificate exact_mis(const AffineGraph& G, const SearchOptions& options = {},
                               std::uint64_t budget = kDefaultVertexBudget);
VertexSetCertificate exact_mis(const QuadricGraph& G, const SearchOptions& options = {},
                               std::uint64_t budget = kDefaultVertexBudget);

}  // namespace polarcore
