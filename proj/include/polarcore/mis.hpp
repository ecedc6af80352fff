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

// Exact maximum clique / independent set on small dense graphs.
//
// Bitset branch and bound with a greedy colouring bound (the BBMC scheme).
// Vertices are relabelled once in degree-descending order, so results are
// deterministic for a given input graph.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace polarcore {

class DenseGraph {
 public:
  explicit DenseGraph(std::size_t n = 0);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::size_t degree(std::size_t v) const;
  DenseGraph complement() const;

 private:
  friend class CliqueSolver;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

struct SearchOptions {
  std::uint64_t node_limit = 50'000'000;
  /// Stop as soon as a set of this size is found.
  std::optional<std::size_t> stop_at;
  /// Only search sets containing vertex 0; exact for vertex-transitive graphs.
  bool anchor_first_vertex = false;
};

struct SearchResult {
  std::vector<std::size_t> vertices;  // sorted ascending
  bool optimal = false;               // search space exhausted within the node limit
  std::uint64_t nodes = 0;
  std::size_t upper_bound = 0;        // proven bound; equals vertices.size() when optimal
};

SearchResult max_clique(const DenseGraph& g, const SearchOptions& options = {});
SearchResult max_independent_set(const DenseGraph& g, const SearchOptions& options = {});

}  // namespace polarcore
