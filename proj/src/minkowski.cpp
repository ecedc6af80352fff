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


#include "polarcore/minkowski.hpp"

#include <algorithm>
#include <random>
#include <thread>
#include <unordered_set>

#include "polarcore/core.hpp"
#include "polarcore/error.hpp"

namespace polarcore {

namespace {

bool kantor_field(const Field& F) { return F.p() % 12 == 11 && F.k() % 2 == 1; }

void require_dim(const MinkowskiSpace& S, std::size_t n, std::string_view name) {
  if (S.n != n) {
    throw Error(ErrorCode::DimensionMismatch, std::string(name) + " lives in dimension " + std::to_string(n));
  }
}

Matrix exa5_matrix(const Field& F) {
  return Matrix::from_ints(F, 5, 5,
                           {1, 0, 0, 0, 1,    //
                            0, 1, 1, 1, 0,    //
                            0, 1, 0, -1, 0,   //
                            0, 1, -1, 1, 0,   //
                            1, 0, 0, 0, -1});
}

struct PairSink {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::pair<Vec, Vec>> witnesses;

  void record(const Vec& x, const Vec& y) {
    ++violations;
    if (witnesses.size() < 10) witnesses.emplace_back(x, y);
  }
};

bool rule_holds(const MinkowskiSpace& S, const Vec& fx, const Vec& fy) {
  return fx != fy && is_lightlike(S, fx, fy);
}

}  // namespace

MinkowskiSpace MinkowskiSpace::create(const Field& F, std::size_t n) {
  if (F.q() % 4 != 3) throw Error(ErrorCode::PreconditionViolated, "Minkowski space needs q ≡ 3 (mod 4)");
  SymForm form = minkowski_form(F, n);
  const QuadricKind kind = classify_form(form).kind;
  return MinkowskiSpace{F, n, std::move(form), kind};
}

Elt inner(const MinkowskiSpace& S, const Vec& x, const Vec& y) { return S.form.bilinear(x, y); }

bool is_lightlike(const MinkowskiSpace& S, const Vec& x, const Vec& y) {
  return S.form.evaluate(sub(S.field, x, y)) == S.field.zero();
}

std::string_view to_string(LorentzKind k) {
  switch (k) {
    case LorentzKind::lorentz: return "lorentz";
    case LorentzKind::anti_lorentz: return "anti_lorentz";
    case LorentzKind::neither: return "neither";
  }
  return "?";
}

std::string_view to_string(MapKind k) {
  switch (k) {
    case MapKind::semilinear: return "semilinear";
    case MapKind::clique_factorization: return "clique_factorization";
    case MapKind::explicit_example: return "explicit_example";
    case MapKind::composite: return "composite";
  }
  return "?";
}

LorentzKind lorentz_check(const MinkowskiSpace& S, const Matrix& P) {
  if (P.rows() != S.n || P.cols() != S.n) throw Error(ErrorCode::DimensionMismatch, "matrix must be n x n");
  const Matrix& M = S.form.matrix();
  const Matrix G = congruence(S.field, P, M);
  if (G == M) return LorentzKind::lorentz;
  if (G == scale(S.field, S.field.neg(S.field.one()), M)) return LorentzKind::anti_lorentz;
  return LorentzKind::neither;
}

Matrix make_anti_lorentz(const MinkowskiSpace& S) {
  const Field& F = S.field;
  if (S.n % 2 == 1) throw Error(ErrorCode::OddDimension, "anti-Lorentz matrices need even n");
  const auto [a0, b0] = F.two_square_decompose(F.neg(F.one()));
  Matrix K(S.n, S.n);
  K(0, 1) = K(1, 0) = F.one();
  for (std::size_t i = 2; i < S.n; i += 2) {
    K(i, i) = a0;
    K(i, i + 1) = b0;
    K(i + 1, i) = F.neg(b0);
    K(i + 1, i + 1) = a0;
  }
  if (lorentz_check(S, K) != LorentzKind::anti_lorentz) {
    throw Error(ErrorCode::VerificationFailed, "block matrix is not anti-Lorentz");
  }
  return K;
}

LightMap semilinear_map(const MinkowskiSpace& S, Elt a, const Matrix& P, unsigned tau, const Vec& x0) {
  const Field& F = S.field;
  if (a == F.zero()) throw Error(ErrorCode::ZeroScale, "scale a must be nonzero");
  if (tau >= F.k()) throw Error(ErrorCode::PreconditionViolated, "Frobenius exponent must be below k");
  if (x0.size() != S.n) throw Error(ErrorCode::DimensionMismatch, "translation has the wrong length");
  const LorentzKind kind = lorentz_check(S, P);
  if (kind == LorentzKind::neither) throw Error(ErrorCode::NotIsometry, "P is neither Lorentz nor anti-Lorentz");
  LightMap m;
  m.kind = MapKind::semilinear;
  m.name = "semilinear";
  m.a = a;
  m.P = P;
  m.tau = tau;
  m.x0 = x0;
  m.lorentz = kind;
  const Matrix aP = scale(F, a, P);
  m.eval = [F, aP, tau, x0](const Vec& x) { return add(F, mul(F, aP, frobenius(F, x, tau)), x0); };
  return m;
}

LightMap semilinear_inverse(const MinkowskiSpace& S, const LightMap& m) {
  const Field& F = S.field;
  if (m.kind != MapKind::semilinear) throw Error(ErrorCode::PreconditionViolated, "only semilinear maps are inverted here");
  const unsigned back = (F.k() - m.tau) % F.k();
  const Elt a = F.frobenius(F.inv(m.a), back);
  const Matrix P = frobenius(F, inverse(F, m.P), back);
  const Vec x0 = scale(F, F.neg(a), mul(F, P, frobenius(F, m.x0, back)));
  LightMap inv = semilinear_map(S, a, P, back, x0);
  inv.name = "semilinear_inverse";
  return inv;
}

LightMap clique_factorization_map(const MinkowskiSpace& S, std::vector<Vec> clique, std::vector<Vec> indep,
                                  std::uint64_t table_budget) {
  const Field& F = S.field;
  const std::uint64_t N = ipow(F.q(), static_cast<unsigned>(S.n));
  if (clique.empty() || indep.empty() || static_cast<std::uint64_t>(clique.size()) * indep.size() != N) {
    throw Error(ErrorCode::FactorizationFailed, "|K|·|I| must equal q^n");
  }
  for (const auto& v : clique) {
    if (v.size() != S.n) throw Error(ErrorCode::DimensionMismatch, "clique vector has the wrong length");
  }
  for (const auto& v : indep) {
    if (v.size() != S.n) throw Error(ErrorCode::DimensionMismatch, "independent vector has the wrong length");
  }
  const Vec k0 = clique.front();
  const Vec i0 = indep.front();
  std::unordered_set<std::uint64_t> kset, iset;
  for (auto& v : clique) {
    v = sub(F, v, k0);
    kset.insert(vec_index(F, v));
  }
  for (auto& v : indep) {
    v = sub(F, v, i0);
    iset.insert(vec_index(F, v));
  }
  if (kset.size() != clique.size() || iset.size() != indep.size()) {
    throw Error(ErrorCode::FactorizationFailed, "input sets contain repeated vectors");
  }
  // K must be a totally isotropic subspace: closed under addition, pairwise light-like.
  for (const auto& u : clique) {
    if (S.form.evaluate(u) != F.zero()) throw Error(ErrorCode::FactorizationFailed, "clique is not totally isotropic");
  }
  if (clique.size() <= 5000) {
    for (const auto& u : clique) {
      for (const auto& v : clique) {
        if (!kset.contains(vec_index(F, add(F, u, v)))) {
          throw Error(ErrorCode::FactorizationFailed, "clique is not a subspace");
        }
      }
    }
  }
  auto K = std::make_shared<const std::vector<Vec>>(std::move(clique));
  auto I = std::make_shared<const std::vector<Vec>>(std::move(indep));
  auto Iidx = std::make_shared<const std::unordered_set<std::uint64_t>>(std::move(iset));
  auto decompose = [F, K, Iidx](const Vec& g) {
    std::optional<Vec> found;
    for (const auto& k : *K) {
      if (Iidx->contains(vec_index(F, sub(F, g, k)))) {
        if (found) throw Error(ErrorCode::FactorizationFailed, "vector has two decompositions");
        found = k;
      }
    }
    if (!found) throw Error(ErrorCode::FactorizationFailed, "vector has no decomposition");
    return *found;
  };
  if (N <= table_budget) {
    for (std::uint64_t idx = 0; idx < N; ++idx) decompose(vec_from_index(F, idx, S.n));
  }
  LightMap m;
  m.kind = MapKind::clique_factorization;
  m.name = "clique_factorization";
  m.clique = K;
  m.indep = I;
  m.eval = decompose;
  return m;
}

std::vector<std::string> explicit_map_names() { return {"dim2", "dim3", "exa5", "dim6_thas", "dim6_kantor"}; }

std::size_t explicit_map_dimension(std::string_view name) {
  if (name == "dim2") return 2;
  if (name == "dim3") return 3;
  if (name == "exa5") return 5;
  if (name == "dim6_thas" || name == "dim6_kantor") return 6;
  throw Error(ErrorCode::UnknownName, "unknown explicit map '" + std::string(name) + "'");
}

LightMap explicit_map(const MinkowskiSpace& S, std::string_view name) {
  const Field& F = S.field;
  require_dim(S, explicit_map_dimension(name), name);
  LightMap m;
  m.kind = MapKind::explicit_example;
  m.name = std::string(name);
  if (name == "dim2") {
    m.eval = [](const Vec& x) { return Vec{x[0], x[0]}; };
    return m;
  }
  if (name == "dim3") {
    m.eval = [F](const Vec& x) { return Vec{x[0], x[0], F.zero()}; };
    return m;
  }
  // f(x1,x2,x3) = x1²x2 + x2³ - x1x3, g(x1,x2,x3) = x1³ + x1x2² + x2x3.
  auto f = [F](Elt x1, Elt x2, Elt x3) {
    return F.sub(F.add(F.mul(F.mul(x1, x1), x2), F.pow(x2, 3)), F.mul(x1, x3));
  };
  auto g = [F](Elt x1, Elt x2, Elt x3) {
    return F.add(F.add(F.pow(x1, 3), F.mul(x1, F.mul(x2, x2))), F.mul(x2, x3));
  };
  if (name == "exa5" || name == "dim6_thas") {
    if (F.p() != 3 || F.k() % 2 == 0) throw Error(ErrorCode::BadFieldForConstruction, m.name + " needs q = 3^k, k odd");
    const Matrix P = exa5_matrix(F);
    if (name == "exa5") {
      m.eval = [F, P, f, g](const Vec& y) {
        const Elt u1 = F.neg(F.add(y[0], y[4]));
        const Elt u2 = F.add(F.sub(y[1], y[2]), y[3]);
        const Elt u3 = F.sub(y[3], y[1]);
        const Elt v4 = F.sub(F.add(F.add(y[1], y[2]), y[3]), f(u1, u2, u3));
        const Elt v5 = F.sub(F.sub(y[4], y[0]), g(u1, u2, u3));
        return mul(F, P, Vec{F.zero(), F.zero(), F.zero(), v4, v5});
      };
      return m;
    }
    Matrix Q(6, 6);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) Q(i, j) = P(i, j);
    }
    Q(5, 5) = F.one();
    m.eval = [F, Q, f, g](const Vec& y) {
      const Elt u1 = F.neg(F.add(y[0], y[4]));
      const Elt u2 = F.add(F.sub(y[1], y[2]), y[3]);
      const Elt u3 = F.sub(F.sub(y[3], y[1]), y[5]);
      const Elt v4 = F.sub(F.add(F.add(y[1], y[2]), y[3]), f(u1, u2, u3));
      const Elt v5 = F.sub(F.sub(y[4], y[0]), g(u1, u2, u3));
      return mul(F, Q, Vec{F.zero(), F.zero(), y[5], v4, v5, y[5]});
    };
    return m;
  }
  if (name == "dim6_kantor") {
    if (!kantor_field(F)) throw Error(ErrorCode::BadFieldForConstruction, "dim6_kantor needs p ≡ 11 (mod 12), k odd");
    const auto [a0, b0] = F.two_square_decompose(F.neg(F.one()));
    const Elt c0 = *F.sqrt(F.from_int(3));
    const Elt half = F.inv(F.from_int(2));
    const Elt z = F.zero(), one = F.one();
    auto h2 = [&](Elt x) { return F.mul(half, x); };
    const std::vector<Vec> rows{
        {z, one, z, z, z, z},
        {z, z, z, z, half, F.neg(one)},
        {z, z, half, one, z, z},
        {z, z, h2(a0), F.neg(a0), h2(b0), b0},
        {z, z, h2(b0), F.neg(b0), F.neg(h2(a0)), F.neg(a0)},
        {c0, z, z, z, z, z}};
    const Matrix P = Matrix::from_rows(rows);
    const Elt c0inv = F.inv(c0);
    m.eval = [F, P, a0, b0, c0, c0inv, half](const Vec& y) {
      auto ff = [&](Elt x4, Elt x6) { return F.neg(F.mul(half, F.add(F.mul(x4, x4), F.mul(x6, x6)))); };
      auto gg = [&](Elt x2, Elt x4, Elt x6) { return F.add(F.mul(ff(x4, x6), x4), F.mul(x2, x6)); };
      auto hh = [&](Elt x2, Elt x4, Elt x6) { return F.sub(F.mul(x2, x4), F.mul(ff(x4, x6), x6)); };
      const Elt s = F.mul(half, F.add(F.add(y[2], F.mul(a0, y[3])), F.mul(b0, y[4])));
      const Elt t = F.mul(half, F.add(F.sub(F.neg(y[1]), F.mul(b0, y[3])), F.mul(a0, y[4])));
      const Elt fst = ff(s, t);
      const Elt w = F.add(F.sub(y[0], y[5]), F.mul(c0, fst));
      Vec v(6, F.zero());
      v[0] = F.sub(F.mul(y[5], c0inv), fst);
      v[1] = F.sub(y[5], F.mul(c0, fst));
      v[2] = F.sub(F.sub(F.sub(y[2], F.mul(a0, y[3])), F.mul(b0, y[4])), gg(w, s, t));
      v[4] = F.sub(F.add(F.sub(y[1], F.mul(b0, y[3])), F.mul(a0, y[4])), hh(w, s, t));
      return mul(F, P, v);
    };
    m.P = P;
    return m;
  }
  throw Error(ErrorCode::UnknownName, "unknown explicit map '" + std::string(name) + "'");
}

LightMap compose(const LightMap& outer, const LightMap& inner) {
  LightMap m;
  m.kind = MapKind::composite;
  m.name = outer.name + "∘" + inner.name;
  auto o = outer.eval;
  auto i = inner.eval;
  m.eval = [o, i](const Vec& x) { return o(i(x)); };
  return m;
}

RuleReport verify_rule(const MinkowskiSpace& S, const LightMap& m, const VerifyMode& mode, std::uint64_t pair_budget,
                       unsigned threads) {
  const Field& F = S.field;
  const std::size_t n = S.n;
  RuleReport rep;
  rep.exhaustive = mode.exhaustive;
  if (mode.exhaustive) {
    const std::uint64_t N = ipow(F.q(), static_cast<unsigned>(n));
    const auto conn_size = static_cast<std::uint64_t>(isotropic_count(S.form, F.zero()) - 1);
    const std::uint64_t pairs = N * conn_size / 2;
    if (pairs > pair_budget) throw Error(ErrorCode::BudgetExceeded, "exhaustive rule check exceeds the pair budget");
    std::vector<Vec> conn;
    for (std::uint64_t idx = 1; idx < N; ++idx) {
      Vec s = vec_from_index(F, idx, n);
      if (S.form.evaluate(s) == F.zero()) conn.push_back(std::move(s));
    }
    std::vector<Vec> image(N);
    for (std::uint64_t idx = 0; idx < N; ++idx) image[idx] = m(vec_from_index(F, idx, n));

    threads = std::max(1U, threads);
    std::vector<PairSink> sinks(threads);
    auto work = [&](unsigned t) {
      for (std::uint64_t idx = t; idx < N; idx += threads) {
        const Vec x = vec_from_index(F, idx, n);
        for (const auto& s : conn) {
          const std::uint64_t j = vec_index(F, add(F, x, s));
          if (j < idx) continue;
          ++sinks[t].checked;
          if (!rule_holds(S, image[idx], image[j])) sinks[t].record(x, vec_from_index(F, j, n));
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();
    for (auto& s : sinks) {
      rep.pairs_checked += s.checked;
      rep.violations += s.violations;
      for (auto& w : s.witnesses) rep.witnesses.push_back(std::move(w));
    }

    std::vector<std::uint64_t> ids;
    for (const auto& v : image) ids.push_back(vec_index(F, v));
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    rep.image_size = ids.size();
    if (ids.size() <= 20000) {
      bool all = true;
      for (std::size_t i = 0; i < ids.size() && all; ++i) {
        for (std::size_t j = i + 1; j < ids.size() && all; ++j) {
          all = is_lightlike(S, vec_from_index(F, ids[i], n), vec_from_index(F, ids[j], n));
        }
      }
      rep.image_pairwise_lightlike = all;
    }
  } else {
    rep.seed = mode.seed;
    std::mt19937_64 rng(mode.seed);
    PairSink sink;
    auto random_vec = [&] {
      Vec v(n);
      for (auto& c : v) c = F.element(static_cast<std::uint32_t>(rng() % F.q()));
      return v;
    };
    for (std::uint64_t i = 0; i < mode.samples; ++i) {
      const Vec x = random_vec();
      Vec s;
      do {
        s = random_vec();
      } while (is_zero(s) || S.form.evaluate(s) != F.zero());
      const Vec y = add(F, x, s);
      ++sink.checked;
      if (!rule_holds(S, m(x), m(y))) sink.record(x, y);
    }
    rep.pairs_checked = sink.checked;
    rep.violations = sink.violations;
    rep.witnesses = std::move(sink.witnesses);
  }
  auto key = [&](const std::pair<Vec, Vec>& w) { return std::make_pair(vec_index(F, w.first), vec_index(F, w.second)); };
  std::sort(rep.witnesses.begin(), rep.witnesses.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  if (rep.witnesses.size() > 10) rep.witnesses.resize(10);
  return rep;
}

BijectivityVerdict bijectivity_verdict(const MinkowskiSpace& S, const VerdictOptions& options) {
  const Field& F = S.field;
  const std::size_t n = S.n;
  const std::uint32_t q = F.q();
  if (n < 4 || q % 4 != 3) throw Error(ErrorCode::OutOfScopeParameters, "verdict needs n >= 4 and q ≡ 3 (mod 4)");
  const bool prime = F.k() == 1;
  BijectivityVerdict v;
  auto automatic = [&](std::string branch, std::string reason) {
    v.branch = std::move(branch);
    v.automatic_bijectivity = true;
    v.nonbijective = Existence::none;
    v.reason = std::move(reason);
    return v;
  };
  std::optional<std::string> construction_name;

  if (n % 4 == 0) return automatic("n≡0 mod 4", "M_n(q) is elliptic, hence a core");
  if (n % 2 == 1 && n >= 9) return automatic("n odd ≥ 9", "Q_{n-1}(q) has no ovoid for n >= 9");
  if (n == 7) {
    if (prime && q > 3) return automatic("n=7, q>3 prime", "Q6(q) has no ovoid for primes q > 3");
    v.branch = "n=7";
    v.reason = F.p() == 3 ? "Q6(3^k) has an ovoid, but whether ω·α = |V| holds for VO7(q) is open"
                          : "ovoid existence in Q6(q) is open for this q";
    return v;
  }
  if (n == 5) {
    v.branch = "n=5";
    if (F.p() == 3) {
      v.nonbijective = Existence::exists;
      v.reason = "an ovoid of Q6(3^k) transfers to a maximum independent set of VO5(q)";
      v.example = "exa5";
      construction_name = "primer1";
    } else {
      v.reason = "no ovoid of Q6(q) is available to force ω·α = |V| for VO5(q)";
    }
  } else {
    v.branch = "n≡2 mod 4";
    const OvoidExistence ex = ovoid_existence(QuadricKind::hyperbolic, static_cast<unsigned>(n), q);
    if (ex.status == Existence::none) return automatic(v.branch, "Q_{n-1}^+(q) has no ovoid: " + ex.reason);
    if (n == 6 && F.p() == 3) {
      v.nonbijective = Existence::exists;
      v.reason = "an ovoid of Q6(3^k) transfers to a maximum independent set of VO6+(q)";
      v.example = "dim6_thas";
      construction_name = "primer2";
    } else if (n == 6 && kantor_field(F)) {
      v.nonbijective = Existence::exists;
      v.reason = "an ovoid of Q7+(q) transfers to a maximum independent set of VO6+(q)";
      v.example = "dim6_kantor";
      construction_name = "primer3";
    } else if (n == 6 && prime) {
      v.nonbijective = Existence::exists;
      v.reason = "Q7+(p) has ovoids, which are not available in parameterised form";
    } else {
      v.reason = "ovoid existence needed for a non-bijective map is open for this q";
    }
  }

  if (options.build_witness && construction_name) {
    const AffineGraph G = make_affine_graph(S.form);
    auto K = max_clique(G);
    auto I = transported_construction(S.form, *construction_name);
    v.witness = clique_factorization_map(S, std::move(K.vertices), std::move(I));
    VerifyMode mode = options.verify;
    const auto conn = static_cast<std::uint64_t>(G.connection_set_size);
    if (G.vertex_count() * conn / 2 <= options.pair_budget) mode.exhaustive = true;
    v.witness_report = verify_rule(S, *v.witness, mode, options.pair_budget);
  }
  return v;
}

}  // namespace polarcore
