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


#include <doctest.h>

#include <algorithm>
#include <array>

#include "polarcore/error.hpp"
#include "polarcore/quadspace.hpp"
#include "support.hpp"

using namespace polarcore;
using namespace polarcore::testing;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

SymForm diag_form(const Field& F, std::initializer_list<int> d) {
  Matrix A(d.size(), d.size());
  std::size_t i = 0;
  for (int x : d) {
    A(i, i) = F.from_int(x);
    ++i;
  }
  return SymForm(F, A);
}

// Closed-form projective quadric sizes, written out for the oracle.
std::uint64_t expected_quadric_points(QuadricKind kind, unsigned n, std::uint64_t q) {
  auto pw = [](std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  switch (kind) {
    case QuadricKind::parabolic: return (pw(q, n - 1) - 1) / (q - 1);
    case QuadricKind::hyperbolic: return (pw(q, n / 2) - 1) * (pw(q, n / 2 - 1) + 1) / (q - 1);
    case QuadricKind::elliptic: return (pw(q, n / 2) + 1) * (pw(q, n / 2 - 1) - 1) / (q - 1);
  }
  return 0;
}

Vec unit(const Field& F, std::size_t n, std::size_t i) {
  Vec v(n, F.zero());
  v[i] = F.one();
  return v;
}

}  // namespace

TEST_CASE("evaluate_form small values") {
  const Field F = Field::of_order(3);
  CHECK(evaluate_form(diag_form(F, {1, -1}), {F.one(), F.one()}) == F.zero());
  CHECK(evaluate_form(identity_form(F, 2), {F.one(), F.one()}) == F.from_int(2));
  CHECK(evaluate_form(minkowski_form(F, 4), {F.one(), F.one(), F.zero(), F.zero()}) == F.zero());
  CHECK(code_of([&] { evaluate_form(identity_form(F, 2), {F.one()}); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("form construction checks") {
  const Field F = Field::of_order(3);
  Matrix A = Matrix::identity(2);
  A(0, 1) = F.one();
  CHECK(code_of([&] { SymForm(F, A); }) == ErrorCode::NotSymmetric);
  CHECK(code_of([&] { SymForm(F, Matrix(2, 2)); }) == ErrorCode::Singular);
}

TEST_CASE("isotropic counts: worked values") {
  const Field F = Field::of_order(3);
  CHECK(isotropic_count(identity_form(F, 2), F.zero()) == 1);
  CHECK(isotropic_count(diag_form(F, {1, -1}), F.zero()) == 5);
  CHECK(isotropic_count(identity_form(F, 3), F.zero()) == 9);
}

TEST_CASE("isotropic counts match enumeration on random forms") {
  Rng rng(11);
  const std::vector<std::pair<unsigned, std::size_t>> shapes{{3, 2}, {3, 3}, {3, 4}, {3, 5}, {3, 6}, {3, 7},
                                                             {3, 8}, {5, 2}, {5, 3}, {5, 4}, {5, 5}, {7, 2},
                                                             {7, 3}, {7, 4}, {9, 2}, {9, 3}, {9, 4}};
  for (int it = 0; it < 100; ++it) {
    const auto [q, n] = shapes[it % shapes.size()];
    const Field F = Field::of_order(q);
    const SymForm S(F, random_symmetric(F, n, rng));
    const Elt b = random_elt(F, rng);
    CHECK(isotropic_count(S, b) == static_cast<std::int64_t>(brute_count(F, S.matrix(), b)));
  }
}

TEST_CASE("classification: worked values") {
  const Field F = Field::of_order(3);
  const FormClass m = classify_form(minkowski_form(F, 4));
  CHECK(m.kind == QuadricKind::elliptic);
  CHECK(m.witt_index == 1);
  const FormClass h = classify_form(diag_form(F, {1, -1}));
  CHECK(h.kind == QuadricKind::hyperbolic);
  CHECK(h.witt_index == 1);
  const FormClass p = classify_form(identity_form(F, 5));
  CHECK(p.kind == QuadricKind::parabolic);
  CHECK(p.witt_index == 2);
  CHECK(p.generator_size == 4);
  CHECK(code_of([] { form_class(QuadricKind::parabolic, 4, 3); }) == ErrorCode::BadParity);
}

TEST_CASE("classification matches projective point counts and is a congruence invariant") {
  Rng rng(12);
  for (unsigned q : {3U, 5U, 7U}) {
    const Field F = Field::of_order(q);
    for (std::size_t n = 2; n <= (q == 3 ? 6U : 4U); ++n) {
      for (int it = 0; it < 4; ++it) {
        const SymForm S(F, random_symmetric(F, n, rng));
        const FormClass c = classify_form(S);
        const std::uint64_t points = (brute_count(F, S.matrix(), F.zero()) - 1) / (q - 1);
        CHECK(points == expected_quadric_points(c.kind, static_cast<unsigned>(n), q));
        const Matrix P = random_invertible(F, n, rng);
        const FormClass c2 = classify_form(SymForm(F, congruence(F, P, S.matrix())));
        CHECK(c2.kind == c.kind);
        CHECK(c2.witt_index == c.witt_index);
      }
    }
  }
}

TEST_CASE("Witt extension: worked values") {
  const Field F = Field::of_order(3);
  const SymForm S = diag_form(F, {1, -1});
  const Matrix Q1 = Matrix::from_columns(std::vector<Vec>{{F.one(), F.one()}});
  const Matrix Q2 = Matrix::from_columns(std::vector<Vec>{{F.from_int(2), F.from_int(2)}});
  const Matrix P = witt_extension(S, Q1, Q2);
  CHECK(preserves(F, P, S.matrix()));
  CHECK(mul(F, P, Q1) == Q2);

  // The isometry group of diag(1,-1) over GF(3), by enumeration of all 81 matrices.
  std::vector<Matrix> group;
  for (const auto& v : all_vectors(F, 4)) {
    const Matrix M = Matrix::from_rows(std::vector<Vec>{{v[0], v[1]}, {v[2], v[3]}});
    if (preserves(F, M, S.matrix())) group.push_back(M);
  }
  CHECK(group.size() == 4);  // dihedral of order 2(q-1)
  CHECK(std::find(group.begin(), group.end(), P) != group.end());

  CHECK(witt_extension(identity_form(F, 3), Matrix::identity(3), Matrix::identity(3)) == Matrix::identity(3));

  const Matrix E1 = Matrix::from_columns(std::vector<Vec>{unit(F, 2, 0)});
  const Matrix E2 = Matrix::from_columns(std::vector<Vec>{unit(F, 2, 1)});
  CHECK(code_of([&] { witt_extension(S, E1, E2); }) == ErrorCode::GramMismatch);
}

TEST_CASE("Witt extension on random instances") {
  Rng rng(13);
  for (unsigned q : {3U, 7U, 11U}) {
    const Field F = Field::of_order(q);
    for (int it = 0; it < 40; ++it) {
      const std::size_t n = 2 + rng() % 5;
      const std::size_t m = 1 + rng() % n;
      const SymForm S(F, random_symmetric(F, n, rng));
      Matrix Q1;
      do {
        Q1 = random_matrix(F, n, m, rng);
      } while (rank(F, Q1) != m);
      const Matrix Q2 = mul(F, random_isometry(F, S.matrix(), rng), Q1);
      const Matrix P = witt_extension(S, Q1, Q2);
      CHECK(preserves(F, P, S.matrix()));
      CHECK(mul(F, P, Q1) == Q2);
    }
  }
}

TEST_CASE("isometries from the Witt extension preserve the quadric") {
  Rng rng(14);
  const Field F = Field::of_order(3);
  const SymForm S = identity_form(F, 4);
  const Vec x1 = random_isotropic(F, S.matrix(), rng);
  const Vec x2 = random_isotropic(F, S.matrix(), rng);
  const Matrix P = witt_extension(S, Matrix::from_columns(std::vector<Vec>{x1}), Matrix::from_columns(std::vector<Vec>{x2}));
  for (const auto& v : all_vectors(F, 4)) {
    CHECK((brute_q(F, S.matrix(), v) == F.zero()) == (brute_q(F, S.matrix(), mul(F, P, v)) == F.zero()));
  }
}

TEST_CASE("scale and pair isometries") {
  const Field F = Field::of_order(3);
  const SymForm A3 = antidiag_form(F, 3);
  const Vec e1 = unit(F, 3, 0), e3 = unit(F, 3, 2);
  const PairIsometry pi = pair_isometry(A3, e1, e3, e3, e1);
  CHECK(preserves(F, pi.P, A3.matrix()));
  CHECK(mul(F, pi.P, e1) == e3);
  CHECK(mul(F, pi.P, e3) == scale(F, pi.alpha, e1));

  const PairIsometry same = pair_isometry(A3, e1, e3, e1, e3);
  CHECK(mul(F, same.P, e1) == e1);
  CHECK(same.alpha == F.one());
  CHECK(code_of([&] { pair_isometry(A3, unit(F, 3, 1), e3, e1, e3); }) == ErrorCode::PreconditionViolated);

  const SymForm I3 = identity_form(F, 3);
  const Matrix P = scale_isometry(I3, e1, unit(F, 3, 1), F.one(), F.one());
  CHECK(preserves(F, P, I3.matrix()));
  CHECK(mul(F, P, e1) == unit(F, 3, 1));
  CHECK(code_of([&] { scale_isometry(I3, e1, {F.one(), F.one(), F.zero()}, F.one(), F.one()); }) ==
        ErrorCode::IncompatibleValues);
}

TEST_CASE("totally isotropic subspaces") {
  const Field F = Field::of_order(3);
  const auto b = totally_isotropic_subspace(diag_form(F, {1, -1}));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == Vec{F.one(), F.one()});
  CHECK(totally_isotropic_subspace(minkowski_form(F, 4)).size() == 1);
  CHECK(code_of([&] { totally_isotropic_subspace(identity_form(F, 2)); }) == ErrorCode::Anisotropic);

  Rng rng(15);
  for (unsigned q : {3U, 5U, 7U, 9U}) {
    const Field G = Field::of_order(q);
    for (std::size_t n = 3; n <= 8; ++n) {
      const SymForm S(G, random_symmetric(G, n, rng));
      const auto basis = totally_isotropic_subspace(S);
      CHECK(basis.size() == classify_form(S).witt_index);
      CHECK(rank(G, Matrix::from_columns(basis)) == basis.size());
      for (const auto& u : basis) {
        for (const auto& v : basis) CHECK(brute_b(G, S.matrix(), u, v) == G.zero());
      }
    }
  }
}

TEST_CASE("rank-one determinant identity") {
  const Field F = Field::of_order(3);
  const SymForm I2 = identity_form(F, 2);
  CHECK(rank_one_det(I2, {F.zero(), F.zero()}, {F.one(), F.zero()}) == F.one());
  CHECK(rank_one_det(I2, {F.one(), F.zero()}, {F.one(), F.zero()}) == F.from_int(2));
  Rng rng(16);
  for (int it = 0; it < 200; ++it) {
    const Field G = Field::of_order(std::array{3U, 7U, 11U, 9U}[it % 4]);
    const std::size_t n = 2 + rng() % 5;
    const SymForm S(G, random_symmetric(G, n, rng));
    const Vec x = random_vec(G, n, rng), y = random_vec(G, n, rng);
    Matrix B = S.matrix();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) B(i, j) = G.add(B(i, j), G.mul(x[i], y[j]));
    }
    CHECK(rank_one_det(S, x, y) == det(G, B));
  }
}

TEST_CASE("identity plus scaled outer product has determinant a^T a / a1^2") {
  Rng rng(17);
  const Field F3 = Field::of_order(3);
  auto run = [](const Field& F, const Vec& a) {
    const std::size_t m = a.size() - 1;
    Matrix M = Matrix::identity(m);
    const Elt inv2 = F.inv(F.mul(a[0], a[0]));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) M(i, j) = F.add(M(i, j), F.mul(inv2, F.mul(a[i + 1], a[j + 1])));
    }
    Elt ata = F.zero();
    for (Elt x : a) ata = F.add(ata, F.mul(x, x));
    return std::pair{det(F, M), F.mul(ata, inv2)};
  };
  const auto [d0, e0] = run(F3, {F3.one(), F3.one(), F3.one()});
  CHECK(d0 == F3.zero());
  CHECK(e0 == F3.zero());
  for (int it = 0; it < 200; ++it) {
    const Field F = Field::of_order(std::array{3U, 7U, 11U}[it % 3]);
    Vec a = random_vec(F, 2 + rng() % 5, rng);
    a[0] = random_nonzero(F, rng);
    const auto [d, e] = run(F, a);
    CHECK(d == e);
  }
}

TEST_CASE("bordered matrix is singular exactly at a = x^T A^-1 x") {
  Rng rng(18);
  for (int it = 0; it < 200; ++it) {
    const Field F = Field::of_order(std::array{3U, 7U, 11U}[it % 3]);
    const std::size_t m = 1 + rng() % 5;
    const Matrix A = random_symmetric(F, m, rng);
    const Vec x = random_vec(F, m, rng);
    const Elt schur = dot(F, x, mul(F, inverse(F, A), x));
    const Elt a = it % 2 == 0 ? schur : random_elt(F, rng);
    Matrix B(m + 1, m + 1);
    B(0, 0) = a;
    for (std::size_t i = 0; i < m; ++i) {
      B(0, i + 1) = B(i + 1, 0) = x[i];
      for (std::size_t j = 0; j < m; ++j) B(i + 1, j + 1) = A(i, j);
    }
    CHECK((det(F, B) == F.zero()) == (a == schur));
    if (a == schur) {
      // B = Pᵀ (0 ⊕ A) P with P = [[1, 0], [A⁻¹x, I]].
      Matrix P = Matrix::identity(m + 1);
      const Vec w = mul(F, inverse(F, A), x);
      for (std::size_t i = 0; i < m; ++i) P(i + 1, 0) = w[i];
      Matrix Z(m + 1, m + 1);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) Z(i + 1, j + 1) = A(i, j);
      }
      CHECK(congruence(F, P, Z) == B);
    }
  }
}

TEST_CASE("canonical bases and congruence transport") {
  Rng rng(19);
  for (unsigned q : {3U, 5U, 7U, 11U, 9U}) {
    const Field F = Field::of_order(q);
    const Elt d = F.find_nonsquare();
    for (std::size_t n = 2; n <= 6; ++n) {
      const SymForm S(F, random_symmetric(F, n, rng));
      const Matrix C = canonical_basis(S);
      const Matrix G = S.gram(C);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (i != j) CHECK(G(i, j) == F.zero());
        }
        if (i + 1 < n) CHECK(G(i, i) == F.one());
      }
      CHECK((G(n - 1, n - 1) == F.one() || G(n - 1, n - 1) == d));

      const FormClass c = classify_form(S);
      const SymForm target = canonical_form(F, c.kind, n);
      const Congruence tr = congruence_transport(target, S);
      CHECK(congruence(F, tr.T, target.matrix()) == scale(F, tr.scalar, S.matrix()));
      if (n % 2 == 0) CHECK(tr.scalar == F.one());
    }
  }
}

TEST_CASE("named forms") {
  const Field F = Field::of_order(3);
  CHECK(classify_form(thas5_form(F)).kind == QuadricKind::parabolic);
  CHECK(classify_form(thas5_bordered_form(F)).kind == QuadricKind::hyperbolic);
  CHECK(classify_form(split4_form(F)).kind == QuadricKind::hyperbolic);
  CHECK(classify_form(kantor6_form(Field::of_order(11))).kind == QuadricKind::hyperbolic);
  CHECK(classify_form(antidiag_bordered_form(F, 4)).kind == QuadricKind::hyperbolic);
  CHECK(classify_form(antidiag_form(F, 5)).kind == QuadricKind::parabolic);
  for (const auto& id : named_form_ids()) {
    std::size_t n = 4;
    if (id == "thas5" || id.starts_with("canonical-parabolic")) n = 5;
    if (id == "thas5-bordered" || id == "kantor6") n = 6;
    const Field G = id == "kantor6" ? Field::of_order(11) : F;
    CHECK(named_form(G, id, n).n() == n);
  }
  CHECK(code_of([&] { named_form(F, "nope", 3); }) == ErrorCode::UnknownName);
}
