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


#include "polarcore/polar_graphs.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "polarcore/error.hpp"

namespace polarcore {

namespace {

std::string default_id(const SymForm& S, std::string id, const char* prefix) {
  if (!id.empty()) return id;
  const FormClass c = classify_form(S);
  const char* sign = c.kind == QuadricKind::parabolic ? "" : (c.kind == QuadricKind::hyperbolic ? "+" : "-");
  return std::string(prefix) + std::to_string(S.n() - (prefix[0] == 'Q' ? 1 : 0)) + sign + "(" +
         S.field().spec() + ")";
}

template <class Graph>
VertexSetCertificate certify_impl(const Graph& G, SetKind kind, std::vector<Vec> vertices) {
  VertexSetCertificate cert{kind, G.id, std::move(vertices)};
  cert.verified = true;
  const auto& vs = cert.vertices;
  for (std::size_t i = 0; i < vs.size() && cert.verified; ++i) {
    if (vs[i].size() != G.form.n()) {
      cert.verified = false;
      break;
    }
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || adjacent(G, vs[i], vs[j]) != (kind == SetKind::clique)) {
        cert.verified = false;
        break;
      }
    }
  }
  return cert;
}

}  // namespace

std::uint64_t AffineGraph::vertex_count() const { return ipow(form.field().q(), static_cast<unsigned>(form.n())); }

AffineGraph make_affine_graph(const SymForm& S, std::string id) {
  const auto count = isotropic_count(S, S.field().zero());
  return AffineGraph{S, classify_form(S), static_cast<std::uint64_t>(count - 1), default_id(S, std::move(id), "VO")};
}

std::uint64_t quadric_size(QuadricKind kind, unsigned n, std::uint32_t q) {
  form_class(kind, n, q);
  switch (kind) {
    case QuadricKind::parabolic: return (ipow(q, n - 1) - 1) / (q - 1);
    case QuadricKind::hyperbolic: return (ipow(q, n / 2) - 1) * (ipow(q, n / 2 - 1) + 1) / (q - 1);
    case QuadricKind::elliptic: return (ipow(q, n / 2) + 1) * (ipow(q, n / 2 - 1) - 1) / (q - 1);
  }
  return 0;
}

Vec projective_rep(const Field& F, const Vec& x) {
  for (auto c : x) {
    if (c != F.zero()) return scale(F, F.inv(c), x);
  }
  return x;
}

QuadricGraph make_quadric_graph(const SymForm& S, std::string id, std::uint64_t budget) {
  const Field& F = S.field();
  const std::size_t n = S.n();
  const std::uint64_t q = F.q();
  if ((ipow(q, static_cast<unsigned>(n)) - 1) / (q - 1) > budget) {
    throw Error(ErrorCode::BudgetExceeded, "projective space exceeds the enumeration budget");
  }
  QuadricGraph G{S, classify_form(S), {}, default_id(S, std::move(id), "Q")};
  // Representatives with more leading zeros have smaller lexicographic index.
  for (std::size_t lead = n; lead-- > 0;) {
    const std::size_t tail = n - lead - 1;
    const std::uint64_t count = ipow(q, static_cast<unsigned>(tail));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Vec x = zero_vec(n);
      x[lead] = F.one();
      const Vec rest = vec_from_index(F, idx, tail);
      std::copy(rest.begin(), rest.end(), x.begin() + static_cast<std::ptrdiff_t>(lead + 1));
      if (S.evaluate(x) == F.zero()) G.points.push_back(std::move(x));
    }
  }
  return G;
}

std::pair<AffineGraph, QuadricGraph> build_graphs(const SymForm& S, std::string id) {
  return {make_affine_graph(S, id), make_quadric_graph(S, id)};
}

bool adjacent(const AffineGraph& G, const Vec& u, const Vec& v) {
  if (u == v) return false;
  return G.form.evaluate(sub(G.form.field(), u, v)) == G.form.field().zero();
}

bool adjacent(const QuadricGraph& G, const Vec& u, const Vec& v) {
  const Field& F = G.form.field();
  if (projective_rep(F, u) == projective_rep(F, v)) return false;
  return G.form.bilinear(u, v) == F.zero();
}

VertexSetCertificate certify(const AffineGraph& G, SetKind kind, std::vector<Vec> vertices) {
  return certify_impl(G, kind, std::move(vertices));
}

VertexSetCertificate certify(const QuadricGraph& G, SetKind kind, std::vector<Vec> vertices) {
  auto cert = certify_impl(G, kind, std::move(vertices));
  for (const auto& v : cert.vertices) {
    if (v.size() != G.form.n() || is_zero(v) || G.form.evaluate(v) != G.form.field().zero()) cert.verified = false;
  }
  return cert;
}

std::vector<Vec> span(const Field& F, const std::vector<Vec>& basis) {
  if (basis.empty()) return {};
  const std::size_t n = basis.front().size();
  const std::size_t r = basis.size();
  const std::uint64_t total = ipow(F.q(), static_cast<unsigned>(r));
  std::vector<Vec> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Vec c = vec_from_index(F, idx, r);
    Vec v = zero_vec(n);
    for (std::size_t i = 0; i < r; ++i) {
      if (c[i] != F.zero()) v = add(F, v, scale(F, c[i], basis[i]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

VertexSetCertificate max_clique(const AffineGraph& G) {
  std::vector<Vec> vertices;
  if (G.cls.witt_index == 0) {
    vertices.push_back(zero_vec(G.form.n()));
  } else {
    vertices = span(G.form.field(), totally_isotropic_subspace(G.form));
  }
  auto cert = certify(G, SetKind::clique, std::move(vertices));
  // Clique number q^r: a clique through 0 spans a totally isotropic subspace.
  cert.optimal = cert.verified;
  cert.upper_bound = ipow(G.form.field().q(), G.cls.witt_index);
  return cert;
}

NeighborhoodIso neighborhood_iso(const AffineGraph& G, const QuadricGraph& Q) {
  const Field& F = G.form.field();
  NeighborhoodIso iso;
  for (std::size_t i = 0; i < Q.points.size(); ++i) {
    for (std::uint32_t a = 1; a < F.q(); ++a) {
      iso.domain.emplace_back(i, F.element(a));
      iso.image.push_back(scale(F, F.element(a), Q.points[i]));
    }
  }
  const std::size_t m = iso.image.size();
  bool ok = m == G.connection_set_size;
  std::unordered_set<std::uint64_t> seen;
  const Vec zero = zero_vec(G.form.n());
  for (std::size_t i = 0; i < m && ok; ++i) {
    ok = seen.insert(vec_index(F, iso.image[i])).second && adjacent(G, zero, iso.image[i]);
  }
  // Lexicographic product Q[K_{q-1}]: same point with different scalars, or adjacent points.
  for (std::size_t i = 0; i < m && ok; ++i) {
    for (std::size_t j = i + 1; j < m && ok; ++j) {
      const auto [pi, ai] = iso.domain[i];
      const auto [pj, aj] = iso.domain[j];
      const bool dom = pi == pj ? ai != aj : adjacent(Q, Q.points[pi], Q.points[pj]);
      ok = dom == adjacent(G, iso.image[i], iso.image[j]);
    }
  }
  iso.verified = ok;
  return iso;
}

Vec common_neighbor(const AffineGraph& G, const Vec& x, const Vec& y, std::uint64_t seed) {
  const SymForm& S = G.form;
  const Field& F = S.field();
  const std::size_t n = S.n();
  if (x.size() != n || y.size() != n) throw Error(ErrorCode::DimensionMismatch, "vertex length differs from n");
  if (x == y || adjacent(G, x, y)) throw Error(ErrorCode::PreconditionViolated, "x and y must be distinct and non-adjacent");
  if (G.connection_set_size == 0) throw Error(ErrorCode::NoWitness, "graph has no edges");
  auto is_witness = [&](const Vec& z) { return adjacent(G, z, x) && adjacent(G, z, y); };

  if (G.cls.kind == QuadricKind::parabolic) {
    // In diag(1-d, d, -1, ..., -1) the vector u = (e1+e2+e3)/2 is a common
    // neighbour of 0 and of w = e1+e2 (value 1) or w = e2 (value d).
    const Elt d = F.find_nonsquare();
    Matrix A0 = Matrix::identity(n);
    A0(0, 0) = F.sub(F.one(), d);
    A0(1, 1) = d;
    for (std::size_t i = 2; i < n; ++i) A0(i, i) = F.neg(F.one());
    const Congruence tr = congruence_transport(S, SymForm(F, A0));
    const Elt half = F.inv(F.from_int(2));
    Vec u = zero_vec(n);
    u[0] = u[1] = u[2] = half;
    const Vec w0 = sub(F, y, x);
    const Elt value = S.evaluate(w0);
    Vec w = unit_vec(n, 1);
    Vec tw = mul(F, tr.T, w);
    if (F.eta(S.evaluate(tw)) != F.eta(value)) {
      w[0] = F.one();
      tw = mul(F, tr.T, w);
    }
    const Elt a1 = *F.sqrt(F.div(value, S.evaluate(tw)));
    const Matrix P = scale_isometry(S, w0, tw, a1, F.one());
    const Vec z = add(F, x, scale(F, a1, mul(F, inverse(F, P), mul(F, tr.T, u))));
    if (!is_witness(z)) throw Error(ErrorCode::VerificationFailed, "constructed common neighbour is invalid");
    return z;
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    Vec z(n);
    for (auto& c : z) c = F.element(static_cast<std::uint32_t>(rng() % F.q()));
    if (is_witness(z)) return z;
  }
  const std::uint64_t total = ipow(F.q(), static_cast<unsigned>(n));
  if (total <= 100'000'000) {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      Vec z = vec_from_index(F, idx, n);
      if (is_witness(z)) return z;
    }
  }
  throw Error(ErrorCode::NoWitness, "no common neighbour found");
}

AffineMap arc_mapping(const AffineGraph& G, const Vec& x1, const Vec& y1, const Vec& x2, const Vec& y2) {
  const Field& F = G.form.field();
  if (!adjacent(G, x1, y1) || !adjacent(G, x2, y2)) throw Error(ErrorCode::NotAnArc, "pairs must be adjacent");
  const Matrix Q1 = Matrix::from_columns(std::vector<Vec>{sub(F, y1, x1)});
  const Matrix Q2 = Matrix::from_columns(std::vector<Vec>{sub(F, y2, x2)});
  const Matrix P = witt_extension(G.form, Q1, Q2);
  AffineMap phi{P, sub(F, mul(F, P, x1), x2)};
  if (phi(F, x1) != x2 || phi(F, y1) != y2) throw Error(ErrorCode::VerificationFailed, "arc map misses an endpoint");
  return phi;
}

DenseGraph dense_graph(const AffineGraph& G, std::uint64_t budget) {
  const Field& F = G.form.field();
  const std::uint64_t N = G.vertex_count();
  if (N > budget) throw Error(ErrorCode::BudgetExceeded, "affine graph exceeds the vertex budget");
  const std::size_t n = G.form.n();
  // Cayley graph: connect every vertex to v + s for s in the connection set.
  std::vector<Vec> conn;
  for (std::uint64_t idx = 1; idx < N; ++idx) {
    Vec s = vec_from_index(F, idx, n);
    if (G.form.evaluate(s) == F.zero()) conn.push_back(std::move(s));
  }
  DenseGraph D(N);
  for (std::uint64_t v = 0; v < N; ++v) {
    const Vec x = vec_from_index(F, v, n);
    for (const auto& s : conn) {
      const std::uint64_t w = vec_index(F, add(F, x, s));
      if (w > v) D.add_edge(v, w);
    }
  }
  return D;
}

DenseGraph dense_graph(const QuadricGraph& G, std::uint64_t budget) {
  const std::size_t N = G.points.size();
  if (N > budget) throw Error(ErrorCode::BudgetExceeded, "quadric graph exceeds the vertex budget");
  DenseGraph D(N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      if (G.form.bilinear(G.points[i], G.points[j]) == G.form.field().zero()) D.add_edge(i, j);
    }
  }
  return D;
}

VertexSetCertificate exact_mis(const AffineGraph& G, const SearchOptions& options, std::uint64_t budget) {
  const Field& F = G.form.field();
  SearchOptions opt = options;
  opt.anchor_first_vertex = true;
  const auto res = max_independent_set(dense_graph(G, budget), opt);
  std::vector<Vec> verts;
  for (auto v : res.vertices) verts.push_back(vec_from_index(F, v, G.form.n()));
  auto cert = certify(G, SetKind::independent, std::move(verts));
  cert.optimal = res.optimal;
  cert.upper_bound = res.upper_bound;
  cert.nodes = res.nodes;
  return cert;
}

VertexSetCertificate exact_mis(const QuadricGraph& G, const SearchOptions& options, std::uint64_t budget) {
  const auto res = max_independent_set(dense_graph(G, budget), options);
  std::vector<Vec> verts;
  for (auto v : res.vertices) verts.push_back(G.points[v]);
  auto cert = certify(G, SetKind::independent, std::move(verts));
  cert.optimal = res.optimal;
  cert.upper_bound = res.upper_bound;
  cert.nodes = res.nodes;
  return cert;
}

}  // namespace polarcore
