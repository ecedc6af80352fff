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


#include "polarcore/mis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace polarcore {

DenseGraph::DenseGraph(std::size_t n) : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

void DenseGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  rows_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  rows_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

std::size_t DenseGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(rows_[v * words_ + w]));
  return d;
}

DenseGraph DenseGraph::complement() const {
  DenseGraph c(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

class CliqueSolver {
 public:
  CliqueSolver(const DenseGraph& g, const SearchOptions& opt) : opt_(opt), n_(g.size()), words_((n_ + 63) / 64) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    if (n_ > 0 && opt.anchor_first_vertex) {
      std::stable_sort(order_.begin() + 1, order_.end(),
                       [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    } else {
      std::stable_sort(order_.begin(), order_.end(),
                       [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    }
    adj_.assign(n_ * words_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && g.adjacent(order_[i], order_[j])) adj_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
      }
    }
  }

  SearchResult run() {
    SearchResult res;
    if (n_ == 0) {
      res.optimal = true;
      return res;
    }
    Bits P(words_, 0);
    std::vector<std::size_t> current;
    if (opt_.anchor_first_vertex) {
      current.push_back(0);
      for (std::size_t w = 0; w < words_; ++w) P[w] = adj_[w];
      best_ = current;
    } else {
      for (std::size_t v = 0; v < n_; ++v) P[v / 64] |= std::uint64_t{1} << (v % 64);
    }
    root_bound_ = current.size() + colour_bound(P);
    expand(current, P);
    res.nodes = nodes_;
    // An early stop at the requested size proves nothing unless it meets the root bound.
    res.optimal = !aborted_ && (!done() || best_.size() >= root_bound_);
    for (auto v : best_) res.vertices.push_back(order_[v]);
    std::sort(res.vertices.begin(), res.vertices.end());
    res.upper_bound = res.optimal ? best_.size() : std::max(best_.size(), root_bound_);
    return res;
  }

 private:
  using Bits = std::vector<std::uint64_t>;

  static bool empty(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::size_t colour_bound(const Bits& P) const {
    std::vector<std::size_t> verts, colours;
    colour(P, verts, colours);
    return colours.empty() ? 0 : colours.back();
  }

  // Greedy sequential colouring; vertices returned in non-decreasing colour order.
  void colour(const Bits& P, std::vector<std::size_t>& verts, std::vector<std::size_t>& colours) const {
    Bits U = P;
    std::size_t k = 0;
    while (!empty(U)) {
      ++k;
      Bits Q = U;
      for (std::size_t w = 0; w < words_; ++w) {
        while (Q[w] != 0) {
          const auto bit = static_cast<std::size_t>(std::countr_zero(Q[w]));
          const std::size_t v = w * 64 + bit;
          Q[w] &= Q[w] - 1;
          U[w] &= ~(std::uint64_t{1} << bit);
          for (std::size_t x = w; x < words_; ++x) Q[x] &= ~adj_[v * words_ + x];
          verts.push_back(v);
          colours.push_back(k);
        }
      }
    }
  }

  void expand(std::vector<std::size_t>& C, Bits P) {
    if (aborted_) return;
    if (++nodes_ > opt_.node_limit) {
      aborted_ = true;
      return;
    }
    std::vector<std::size_t> verts, colours;
    colour(P, verts, colours);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (C.size() + colours[i] <= best_.size()) return;
      const std::size_t v = verts[i];
      C.push_back(v);
      Bits next(words_);
      bool any = false;
      for (std::size_t w = 0; w < words_; ++w) {
        next[w] = P[w] & adj_[v * words_ + w];
        any = any || next[w] != 0;
      }
      if (!any) {
        if (C.size() > best_.size()) best_ = C;
      } else {
        expand(C, std::move(next));
      }
      C.pop_back();
      if (aborted_ || done()) return;
      P[v / 64] &= ~(std::uint64_t{1} << (v % 64));
    }
  }

  bool done() const { return opt_.stop_at && best_.size() >= *opt_.stop_at; }

  SearchOptions opt_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::size_t> order_;
  Bits adj_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
  std::size_t root_bound_ = 0;
  bool aborted_ = false;
};

SearchResult max_clique(const DenseGraph& g, const SearchOptions& options) {
  return CliqueSolver(g, options).run();
}

SearchResult max_independent_set(const DenseGraph& g, const SearchOptions& options) {
  return max_clique(g.complement(), options);
}

}  // namespace polarcore
