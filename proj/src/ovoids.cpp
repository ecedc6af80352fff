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


#include "polarcore/ovoids.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "polarcore/error.hpp"

namespace polarcore {

namespace {

std::string format_vec(const Field& F, const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + F.format(v[i]);
  return out + ")";
}

Construction finish(std::string name, SymForm form, std::vector<Vec> points) {
  const AffineGraph G = make_affine_graph(form);
  auto cert = certify(G, SetKind::independent, points);
  if (!cert.verified) throw Error(ErrorCode::VerificationFailed, name + " set failed pairwise verification");
  const std::uint64_t expected = G.vertex_count() / ipow(form.field().q(), G.cls.witt_index);
  if (points.size() != expected) throw Error(ErrorCode::VerificationFailed, name + " set has the wrong size");
  cert.optimal = true;  // |V|/ω is an upper bound for α
  cert.upper_bound = expected;
  return Construction{std::move(name), std::move(form), std::move(points), std::move(cert)};
}

Vec drop_two(const Vec& v, std::size_t i, std::size_t j) {
  Vec out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k != i && k != j) out.push_back(v[k]);
  }
  return out;
}

long double binom(long double n, unsigned k) {
  long double r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::uint64_t target_ovoid_size(QuadricKind kind, unsigned n, std::uint32_t q) {
  const FormClass c = form_class(kind, n, q);
  if (c.witt_index < 2) throw Error(ErrorCode::WittIndexTooSmall, "ovoids need Witt index at least 2");
  switch (kind) {
    case QuadricKind::parabolic: return ipow(q, (n - 1) / 2) + 1;
    case QuadricKind::hyperbolic: return ipow(q, n / 2 - 1) + 1;
    case QuadricKind::elliptic: return ipow(q, n / 2) + 1;
  }
  return 0;
}

PartialOvoid verify_partial_ovoid(const QuadricGraph& Q, const std::vector<Vec>& points) {
  const Field& F = Q.form.field();
  std::vector<Vec> reps;
  for (const auto& p : points) {
    if (p.size() != Q.form.n() || is_zero(p) || Q.form.evaluate(p) != F.zero()) {
      throw Error(ErrorCode::NotOnQuadric, "point " + format_vec(F, p) + " is not on the quadric");
    }
    reps.push_back(projective_rep(F, p));
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      if (reps[i] == reps[j] || Q.form.bilinear(reps[i], reps[j]) == F.zero()) {
        throw Error(ErrorCode::PerpendicularPair,
                    "points " + format_vec(F, points[i]) + " and " + format_vec(F, points[j]) + " are perpendicular");
      }
    }
  }
  PartialOvoid po{Q.id, std::move(reps), std::nullopt, false};
  if (Q.cls.witt_index >= 2) {
    po.target = target_ovoid_size(Q.cls.kind, static_cast<unsigned>(Q.form.n()), F.q());
    po.is_ovoid = po.points.size() == *po.target;
  }
  return po;
}

GeneratorAudit audit_generators(const QuadricGraph& Q, const std::vector<Vec>& points, std::uint64_t limit) {
  const Field& F = Q.form.field();
  const DenseGraph D = dense_graph(Q, Q.points.size());
  const std::size_t s = Q.cls.generator_size;
  std::vector<bool> marked(Q.points.size(), false);
  for (const auto& p : points) {
    const Vec rep = projective_rep(F, p);
    const auto it = std::lower_bound(Q.points.begin(), Q.points.end(), rep,
                                     [&](const Vec& a, const Vec& b) { return vec_index(F, a) < vec_index(F, b); });
    if (it == Q.points.end() || *it != rep) throw Error(ErrorCode::NotOnQuadric, "audit point is not on the quadric");
    marked[static_cast<std::size_t>(it - Q.points.begin())] = true;
  }
  GeneratorAudit audit;
  audit.min_meet = s;
  std::vector<std::size_t> clique;
  std::function<void(const std::vector<std::size_t>&)> grow = [&](const std::vector<std::size_t>& cand) {
    if (clique.size() == s) {
      if (++audit.generators > limit) throw Error(ErrorCode::BudgetExceeded, "too many generators to audit");
      const auto meet = static_cast<std::uint64_t>(std::count_if(clique.begin(), clique.end(), [&](auto v) { return marked[v]; }));
      audit.min_meet = std::min(audit.min_meet, meet);
      audit.max_meet = std::max(audit.max_meet, meet);
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (clique.size() + (cand.size() - i) < s) return;
      const std::size_t v = cand[i];
      std::vector<std::size_t> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j) {
        if (D.adjacent(v, cand[j])) next.push_back(cand[j]);
      }
      clique.push_back(v);
      grow(next);
      clique.pop_back();
    }
  };
  std::vector<std::size_t> all(Q.points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  grow(all);
  if (audit.generators == 0) audit.min_meet = 0;
  return audit;
}

OvoidSearch search_partial_ovoid(const QuadricGraph& Q, std::optional<std::uint64_t> target,
                                 const SearchOptions& options) {
  std::optional<std::uint64_t> ovoid_size;
  if (Q.cls.witt_index >= 2) {
    ovoid_size = target_ovoid_size(Q.cls.kind, static_cast<unsigned>(Q.form.n()), Q.form.field().q());
  }
  if (!target) target = ovoid_size;
  SearchOptions opt = options;
  if (target) opt.stop_at = static_cast<std::size_t>(*target);
  const auto cert = exact_mis(Q, opt, std::max<std::uint64_t>(Q.points.size(), 1));
  OvoidSearch out;
  out.ovoid = verify_partial_ovoid(Q, cert.vertices);
  out.nodes = cert.nodes;
  out.upper_bound = cert.upper_bound;
  out.optimal = cert.optimal;
  // A partial ovoid never exceeds the ovoid size, so reaching it is optimal.
  if (out.ovoid.is_ovoid) {
    out.optimal = true;
    out.upper_bound = *ovoid_size;
  }
  return out;
}

std::vector<std::string> construction_names() { return {"primer0", "primer1", "primer2", "primer3"}; }

Construction construction(std::string_view name, const Field& F) {
  const Elt d = F.find_nonsquare();
  const std::uint32_t q = F.q();
  if (name == "primer0") {
    std::vector<Vec> pts;
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::uint32_t y = 0; y < q; ++y) pts.push_back({F.element(x), F.element(y), F.zero(), F.zero()});
    }
    return finish("primer0", split4_form(F), std::move(pts));
  }
  if (name == "primer1" || name == "primer2") {
    if (F.p() != 3) throw Error(ErrorCode::BadFieldForConstruction, std::string(name) + " needs q = 3^k");
    const Elt dinv = F.inv(d);
    std::vector<Vec> pts;
    for (std::uint64_t idx = 0; idx < ipow(q, 3); ++idx) {
      const Vec c = vec_from_index(F, idx, 3);
      const Elt x = c[0], y = c[1], z = c[2];
      const Elt x2 = F.mul(x, x), y2 = F.mul(y, y);
      const Elt u = F.sub(F.sub(F.mul(x2, y), F.mul(d, F.mul(y2, y))), F.mul(x, z));
      const Elt w = F.add(F.add(F.neg(F.mul(dinv, F.mul(x2, x))), F.mul(x, y2)), F.mul(y, z));
      Vec v{x, y, z, u, w};
      if (name == "primer2") v.push_back(F.zero());
      pts.push_back(std::move(v));
    }
    if (name == "primer1") return finish("primer1", thas5_form(F), std::move(pts));
    return finish("primer2", thas5_bordered_form(F), std::move(pts));
  }
  if (name == "primer3") {
    const bool ok = F.p() % 3 == 2 && F.k() % 2 == 1 && F.eta(F.neg(F.one())) < 0 && F.eta(F.from_int(3)) > 0;
    if (!ok) {
      throw Error(ErrorCode::BadFieldForConstruction,
                  "primer3 needs p ≡ 2 (mod 3), k odd, -1 a non-square and 3 a square");
    }
    const Elt neg_half = F.neg(F.inv(F.from_int(2)));
    std::vector<Vec> pts;
    for (std::uint64_t idx = 0; idx < ipow(q, 3); ++idx) {
      const Vec c = vec_from_index(F, idx, 3);
      const Elt y = c[0], z = c[1], w = c[2];
      const Elt x = F.mul(neg_half, F.add(F.mul(z, z), F.mul(w, w)));
      pts.push_back({x, y, F.add(F.mul(x, z), F.mul(y, w)), z, F.sub(F.mul(y, z), F.mul(x, w)), w});
    }
    return finish("primer3", kantor6_form(F), std::move(pts));
  }
  throw Error(ErrorCode::UnknownName, "unknown construction '" + std::string(name) + "'");
}

TransferResult ovoid_to_affine_indep(const SymForm& S, const std::vector<Vec>& ovoid) {
  const Field& F = S.field();
  const std::size_t n = S.n();
  const bool parabolic = n % 2 == 1;
  if (S.matrix() != (parabolic ? antidiag_form(F, n) : antidiag_bordered_form(F, n)).matrix()) {
    throw Error(ErrorCode::PreconditionViolated, "ovoid must be given in the antidiagonal model");
  }
  const FormClass cls = classify_form(S);
  if (cls.kind == QuadricKind::elliptic) throw Error(ErrorCode::PreconditionViolated, "transfer needs a hyperbolic model");
  const auto size = target_ovoid_size(cls.kind, static_cast<unsigned>(n), F.q());
  if (ovoid.size() != size) throw Error(ErrorCode::PreconditionViolated, "point set is not an ovoid (wrong size)");
  const QuadricGraph shell{S, cls, {}, ""};
  verify_partial_ovoid(shell, ovoid);

  // Hyperbolic pairs of coordinates; the middle coordinate (and the bordered one) are excluded.
  auto partner = [&](std::size_t j) -> std::optional<std::size_t> {
    if (parabolic) {
      if (j == (n - 1) / 2) return std::nullopt;
      return n - 1 - j;
    }
    if (j == n - 1 || j == (n - 2) / 2) return std::nullopt;
    return n - 2 - j;
  };

  TransferResult res{S, {}, std::nullopt, {}, 0, 0};
  bool found = false;
  for (std::size_t i = 0; i < ovoid.size() && !found; ++i) {
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (ovoid[i][j] != F.zero() && partner(j)) {
        res.pivot_point = i;
        res.pivot_coord = j;
        found = true;
      }
    }
  }
  if (!found) throw Error(ErrorCode::NoPivot, "no point has a usable nonzero coordinate");

  // Coordinate permutation (an isometry of the model) moving the pivot coordinate to 0.
  std::vector<std::size_t> sigma(n);
  for (std::size_t k = 0; k < n; ++k) sigma[k] = k;
  const std::size_t j0 = res.pivot_coord;
  const std::size_t p0 = *partner(0);
  if (j0 == p0) {
    std::swap(sigma[0], sigma[p0]);
  } else if (j0 != 0) {
    std::swap(sigma[0], sigma[j0]);
    std::swap(sigma[p0], sigma[*partner(j0)]);
  }
  auto permute = [&](const Vec& x) {
    Vec y(n);
    for (std::size_t k = 0; k < n; ++k) y[k] = x[sigma[k]];
    return y;
  };

  std::vector<Vec> xs;
  for (std::size_t i = 0; i < ovoid.size(); ++i) {
    if (i != res.pivot_point) xs.push_back(permute(ovoid[i]));
  }
  const Vec pivot = permute(ovoid[res.pivot_point]);
  const Elt a_pivot = pivot[0];
  const std::size_t drop = parabolic ? n - 1 : n - 2;
  for (const auto& x : xs) {
    const Elt b = F.inv(S.bilinear(x, pivot));
    const Vec y = sub(F, scale(F, b, x), scale(F, F.div(F.mul(x[0], b), a_pivot), pivot));
    if (y[0] != F.zero()) throw Error(ErrorCode::VerificationFailed, "transferred vector has nonzero first coordinate");
    res.lower.push_back(drop_two(y, 0, drop));
  }
  res.lower_form = parabolic ? antidiag_form(F, n - 2) : antidiag_bordered_form(F, n - 2);
  if (!certify(make_affine_graph(res.lower_form), SetKind::independent, res.lower).verified) {
    throw Error(ErrorCode::VerificationFailed, "transferred set is not independent");
  }
  if (parabolic) {
    res.bordered_form = antidiag_bordered_form(F, n - 1);
    for (const auto& z : res.lower) {
      Vec e = z;
      e.push_back(F.zero());
      res.bordered.push_back(std::move(e));
    }
    if (!certify(make_affine_graph(*res.bordered_form), SetKind::independent, res.bordered).verified) {
      throw Error(ErrorCode::VerificationFailed, "zero-extended set is not independent");
    }
  }
  return res;
}

std::vector<Vec> transport_points(const SymForm& target, const SymForm& source, const std::vector<Vec>& points) {
  const Field& F = target.field();
  const Congruence tr = congruence_transport(target, source);
  std::vector<Vec> out;
  for (const auto& p : points) out.push_back(projective_rep(F, mul(F, tr.T, p)));
  return out;
}

std::vector<Vec> ovoid_from_factorization(const AffineGraph& G, const std::vector<Vec>& clique,
                                          const std::vector<Vec>& indep) {
  const Field& F = G.form.field();
  if (clique.size() < 2 || indep.empty()) throw Error(ErrorCode::PreconditionViolated, "need a clique of size >= 2");
  if (static_cast<std::uint64_t>(clique.size()) * indep.size() != G.vertex_count()) {
    throw Error(ErrorCode::PreconditionViolated, "|K|·|I| must equal the vertex count");
  }
  const Vec k = sub(F, clique[1], clique[0]);
  std::vector<Vec> out;
  const Vec zero = zero_vec(G.form.n());
  for (const auto& i : indep) {
    const Vec v = add(F, k, sub(F, i, indep[0]));
    if (adjacent(G, zero, v)) out.push_back(projective_rep(F, v));
  }
  return out;
}

std::string_view to_string(Existence e) {
  switch (e) {
    case Existence::exists: return "exists";
    case Existence::none: return "none";
    case Existence::open: return "open";
  }
  return "?";
}

OvoidExistence ovoid_existence(QuadricKind kind, unsigned n, std::uint32_t q) {
  const FormClass c = form_class(kind, n, q);
  if (c.witt_index < 2) throw Error(ErrorCode::WittIndexTooSmall, "ovoids need Witt index at least 2");
  const auto pk = prime_power(q);
  if (!pk) throw Error(ErrorCode::NonPrime, "q is not a prime power");
  const auto [p, k] = *pk;
  switch (kind) {
    case QuadricKind::elliptic:
      return {Existence::none, "elliptic quadrics of dimension >= 5 have no ovoids"};
    case QuadricKind::parabolic:
      if (n == 5) return {Existence::exists, "Q4(q) has ovoids for every q"};
      if (n >= 9) return {Existence::none, "no ovoids in Q_{n-1}(q) for n >= 9"};
      if (p == 3) return {Existence::exists, "Q6(3^k) has ovoids"};
      if (k == 1) return {Existence::none, "no ovoids in Q6(p) for primes p > 3"};
      return {Existence::open, "ovoids of Q6(q) are undecided for this q"};
    case QuadricKind::hyperbolic: {
      if (n == 4 || n == 6) return {Existence::exists, "Q3+(q) and Q5+(q) have ovoids"};
      if (n == 8) {
        if (k == 1) return {Existence::exists, "Q7+(p) has ovoids for primes p"};
        if (k % 2 == 1 && p % 3 == 2) return {Existence::exists, "Q7+(p^k) has ovoids for k odd, p ≡ 2 (mod 3)"};
        return {Existence::open, "ovoids of Q7+(q) are undecided for this q"};
      }
      // Nonexistence in Q_{m-1}^+ propagates to every larger even dimension.
      for (unsigned m = 8; m <= n; m += 2) {
        const long double lhs = std::pow(static_cast<long double>(p), m / 2.0L - 1);
        const long double rhs = binom(m + p - 2.0L, m - 1) - binom(m + p - 4.0L, m - 1);
        if (lhs > rhs) {
          return {Existence::none, "prime-power bound rules out ovoids from dimension " + std::to_string(m) + " on"};
        }
      }
      return {Existence::open, "ovoids of Q_{n-1}^+(q) are undecided for this q"};
    }
  }
  return {Existence::open, ""};
}

}  // namespace polarcore
