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

// Helpers shared by the test binaries: random instances and brute-force
// oracles that avoid the library code paths they are used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "polarcore/linalg.hpp"
#include "polarcore/quadspace.hpp"

namespace polarcore::testing {

using Rng = std::mt19937_64;

inline Elt random_elt(const Field& F, Rng& rng) { return F.element(static_cast<std::uint32_t>(rng() % F.q())); }

inline Elt random_nonzero(const Field& F, Rng& rng) {
  return F.element(1 + static_cast<std::uint32_t>(rng() % (F.q() - 1)));
}

inline Vec random_vec(const Field& F, std::size_t n, Rng& rng) {
  Vec v(n);
  for (auto& x : v) x = random_elt(F, rng);
  return v;
}

inline Vec random_nonzero_vec(const Field& F, std::size_t n, Rng& rng) {
  for (;;) {
    Vec v = random_vec(F, n, rng);
    if (!is_zero(v)) return v;
  }
}

/// Q(x) = Σ A_ij x_i x_j, written out without the library's bilinear helpers.
inline Elt brute_q(const Field& F, const Matrix& A, const Vec& x) {
  Elt s = F.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) s = F.add(s, F.mul(A(i, j), F.mul(x[i], x[j])));
  }
  return s;
}

inline Elt brute_b(const Field& F, const Matrix& A, const Vec& x, const Vec& y) {
  Elt s = F.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) s = F.add(s, F.mul(A(i, j), F.mul(x[i], y[j])));
  }
  return s;
}

/// Every vector of F^n in lexicographic order.
inline std::vector<Vec> all_vectors(const Field& F, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, F.zero());
  for (;;) {
    out.push_back(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i].code + 1 < F.q()) {
        v[i] = F.element(v[i].code + 1);
        break;
      }
      v[i] = F.zero();
      if (i == 0) return out;
    }
  }
}

inline std::uint64_t brute_count(const Field& F, const Matrix& A, Elt b) {
  std::uint64_t c = 0;
  for (const auto& v : all_vectors(F, A.rows())) c += brute_q(F, A, v) == b;
  return c;
}

inline Matrix random_matrix(const Field& F, std::size_t r, std::size_t c, Rng& rng) {
  Matrix M(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) M(i, j) = random_elt(F, rng);
  }
  return M;
}

inline Matrix random_invertible(const Field& F, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix M = random_matrix(F, n, n, rng);
    if (det(F, M) != F.zero()) return M;
  }
}

/// A random symmetric invertible matrix.
inline Matrix random_symmetric(const Field& F, std::size_t n, Rng& rng) {
  for (;;) {
    Matrix M(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) M(i, j) = M(j, i) = random_elt(F, rng);
    }
    if (det(F, M) != F.zero()) return M;
  }
}

/// Product of random reflections x -> x - (2 B(x,v)/Q(v)) v: an isometry of A
/// obtained without the Witt machinery.
inline Matrix random_isometry(const Field& F, const Matrix& A, Rng& rng, int reflections = 4) {
  const std::size_t n = A.rows();
  Matrix P = Matrix::identity(n);
  for (int r = 0; r < reflections; ++r) {
    Vec v;
    Elt qv;
    do {
      v = random_nonzero_vec(F, n, rng);
      qv = brute_q(F, A, v);
    } while (qv == F.zero());
    // R = I - (2/Q(v)) v vᵀ A
    const Elt c = F.div(F.from_int(2), qv);
    Matrix R = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Elt vA = F.zero();
        for (std::size_t k = 0; k < n; ++k) vA = F.add(vA, F.mul(v[k], A(k, j)));
        R(i, j) = F.sub(R(i, j), F.mul(c, F.mul(v[i], vA)));
      }
    }
    P = mul(F, R, P);
  }
  return P;
}

inline Vec random_isotropic(const Field& F, const Matrix& A, Rng& rng) {
  for (;;) {
    Vec v = random_nonzero_vec(F, A.rows(), rng);
    if (brute_q(F, A, v) == F.zero()) return v;
  }
}

inline bool preserves(const Field& F, const Matrix& P, const Matrix& A) {
  return mul(F, mul(F, transpose(P), A), P) == A;
}

}  // namespace polarcore::testing
