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

#include "polarcore/error.hpp"
#include "polarcore/linalg.hpp"
#include "support.hpp"

using namespace polarcore;
using namespace polarcore::testing;

namespace {

// Cofactor expansion, independent of the elimination code.
Elt cofactor_det(const Field& F, const Matrix& A) {
  const std::size_t n = A.rows();
  if (n == 1) return A(0, 0);
  Elt s = F.zero();
  for (std::size_t j = 0; j < n; ++j) {
    Matrix M(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != j) M(r - 1, cc++) = A(r, c);
      }
    }
    const Elt term = F.mul(A(0, j), cofactor_det(F, M));
    s = j % 2 == 0 ? F.add(s, term) : F.sub(s, term);
  }
  return s;
}

}  // namespace

TEST_CASE("determinant agrees with cofactor expansion") {
  Rng rng(1);
  for (const Field& F : {Field::of_order(3), Field::of_order(9), Field::of_order(11)}) {
    for (int it = 0; it < 60; ++it) {
      const std::size_t n = 1 + rng() % 5;
      const Matrix A = random_matrix(F, n, n, rng);
      CHECK(det(F, A) == cofactor_det(F, A));
    }
  }
}

TEST_CASE("inverse, solve, nullspace, rank") {
  Rng rng(2);
  const Field F = Field::of_order(7);
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 2 + rng() % 4;
    const Matrix A = random_invertible(F, n, rng);
    CHECK(mul(F, A, inverse(F, A)) == Matrix::identity(n));
    const Vec b = random_vec(F, n, rng);
    const auto x = solve(F, A, b);
    REQUIRE(x);
    CHECK(mul(F, A, *x) == b);
    CHECK(rank(F, A) == n);

    Matrix S = random_matrix(F, n, n, rng);
    for (std::size_t i = 0; i < n; ++i) S(i, n - 1) = S(i, 0);  // force a kernel
    const auto ker = nullspace(F, S);
    CHECK(ker.size() == n - rank(F, S));
    for (const auto& v : ker) CHECK(is_zero(mul(F, S, v)));
  }
  CHECK_THROWS_AS(inverse(F, Matrix(2, 2)), Error);
}

TEST_CASE("vector indexing is a lexicographic bijection") {
  const Field F = Field::of_order(9);
  const auto all = all_vectors(F, 3);
  REQUIRE(all.size() == 729);
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    CHECK(vec_index(F, all[i]) == i);
    CHECK(vec_from_index(F, i, 3) == all[i]);
  }
}

TEST_CASE("complete_basis extends to an invertible matrix") {
  Rng rng(3);
  const Field F = Field::of_order(5);
  for (int it = 0; it < 30; ++it) {
    const std::vector<Vec> start{random_nonzero_vec(F, 5, rng)};
    const auto basis = complete_basis(F, start, 5);
    REQUIRE(basis.size() == 5);
    CHECK(basis.front() == start.front());
    CHECK(det(F, Matrix::from_columns(basis)) != F.zero());
  }
}

TEST_CASE("ipow overflow is reported") {
  CHECK(ipow(3, 5) == 243);
  CHECK_THROWS_AS(ipow(11, 30), Error);
}
