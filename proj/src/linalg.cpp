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

#include "polarcore/linalg.hpp"

#include <utility>

#include "polarcore/error.hpp"

namespace polarcore {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::DimensionMismatch, what);
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(const Field& F, Matrix& A) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
    std::size_t piv = r;
    while (piv < A.rows() && A(piv, c) == F.zero()) ++piv;
    if (piv == A.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(piv, j), A(r, j));
    }
    const Elt inv = F.inv(A(r, c));
    for (std::size_t j = 0; j < A.cols(); ++j) A(r, j) = F.mul(A(r, j), inv);
    for (std::size_t i = 0; i < A.rows(); ++i) {
      if (i == r || A(i, c) == F.zero()) continue;
      const Elt f = A(i, c);
      for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = F.sub(A(i, j), F.mul(f, A(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = Elt{1};
  return I;
}

Matrix Matrix::from_columns(std::span<const Vec> cols) {
  if (cols.empty()) return Matrix();
  Matrix M(cols[0].size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    require(cols[j].size() == M.rows(), "ragged columns");
    for (std::size_t i = 0; i < M.rows(); ++i) M(i, j) = cols[j][i];
  }
  return M;
}

Matrix Matrix::from_rows(std::span<const Vec> rows) {
  if (rows.empty()) return Matrix();
  Matrix M(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == M.cols(), "ragged rows");
    for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = rows[i][j];
  }
  return M;
}

Matrix Matrix::from_ints(const Field& F, std::size_t rows, std::size_t cols,
                         std::initializer_list<std::int64_t> values) {
  require(values.size() == rows * cols, "wrong number of entries");
  Matrix M(rows, cols);
  std::size_t idx = 0;
  for (auto v : values) {
    M(idx / cols, idx % cols) = F.from_int(v);
    ++idx;
  }
  return M;
}

Vec Matrix::row(std::size_t i) const { return Vec(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

Vec Matrix::column(std::size_t j) const {
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Vec zero_vec(std::size_t n) { return Vec(n, Elt{0}); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Elt{0});
  v[i] = Elt{1};
  return v;
}

bool is_zero(const Vec& v) {
  for (auto x : v) {
    if (x.code != 0) return false;
  }
  return true;
}

Vec add(const Field& F, const Vec& x, const Vec& y) {
  require(x.size() == y.size(), "vector sizes differ");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.add(x[i], y[i]);
  return out;
}

Vec sub(const Field& F, const Vec& x, const Vec& y) {
  require(x.size() == y.size(), "vector sizes differ");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.sub(x[i], y[i]);
  return out;
}

Vec scale(const Field& F, Elt a, const Vec& x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.mul(a, x[i]);
  return out;
}

Elt dot(const Field& F, const Vec& x, const Vec& y) {
  require(x.size() == y.size(), "vector sizes differ");
  Elt acc = F.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = F.add(acc, F.mul(x[i], y[i]));
  return acc;
}

Vec frobenius(const Field& F, const Vec& x, unsigned j) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = F.frobenius(x[i], j);
  return out;
}

Matrix transpose(const Matrix& A) {
  Matrix T(A.cols(), A.rows());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j);
  }
  return T;
}

Matrix mul(const Field& F, const Matrix& A, const Matrix& B) {
  require(A.cols() == B.rows(), "matrix product shape mismatch");
  Matrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t l = 0; l < A.cols(); ++l) {
      const Elt a = A(i, l);
      if (a == F.zero()) continue;
      for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) = F.add(C(i, j), F.mul(a, B(l, j)));
    }
  }
  return C;
}

Vec mul(const Field& F, const Matrix& A, const Vec& x) {
  require(A.cols() == x.size(), "matrix-vector shape mismatch");
  Vec out(A.rows(), F.zero());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    Elt acc = F.zero();
    for (std::size_t j = 0; j < A.cols(); ++j) acc = F.add(acc, F.mul(A(i, j), x[j]));
    out[i] = acc;
  }
  return out;
}

Matrix add(const Field& F, const Matrix& A, const Matrix& B) {
  require(A.rows() == B.rows() && A.cols() == B.cols(), "matrix sum shape mismatch");
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.add(A(i, j), B(i, j));
  }
  return C;
}

Matrix scale(const Field& F, Elt a, const Matrix& A) {
  Matrix C(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.mul(a, A(i, j));
  }
  return C;
}

Matrix frobenius(const Field& F, const Matrix& A, unsigned j) {
  Matrix C(A.rows(), A.cols());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    for (std::size_t c = 0; c < A.cols(); ++c) C(r, c) = F.frobenius(A(r, c), j);
  }
  return C;
}

Matrix congruence(const Field& F, const Matrix& P, const Matrix& A) {
  return mul(F, transpose(P), mul(F, A, P));
}

Elt bilinear(const Field& F, const Matrix& A, const Vec& x, const Vec& y) {
  require(A.rows() == x.size() && A.cols() == y.size(), "bilinear form shape mismatch");
  Elt acc = F.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == F.zero()) continue;
    Elt row = F.zero();
    for (std::size_t j = 0; j < y.size(); ++j) row = F.add(row, F.mul(A(i, j), y[j]));
    acc = F.add(acc, F.mul(x[i], row));
  }
  return acc;
}

Elt quadratic(const Field& F, const Matrix& A, const Vec& x) { return bilinear(F, A, x, x); }

Elt det(const Field& F, Matrix A) {
  require(A.square(), "determinant of non-square matrix");
  const std::size_t n = A.rows();
  Elt result = F.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A(piv, c) == F.zero()) ++piv;
    if (piv == n) return F.zero();
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A(piv, j), A(c, j));
      result = F.neg(result);
    }
    result = F.mul(result, A(c, c));
    const Elt inv = F.inv(A(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (A(i, c) == F.zero()) continue;
      const Elt f = F.mul(A(i, c), inv);
      for (std::size_t j = c; j < n; ++j) A(i, j) = F.sub(A(i, j), F.mul(f, A(c, j)));
    }
  }
  return result;
}

std::size_t rank(const Field& F, Matrix A) { return rref(F, A).size(); }

Matrix inverse(const Field& F, const Matrix& A) {
  require(A.square(), "inverse of non-square matrix");
  const std::size_t n = A.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = F.one();
  }
  const auto pivots = rref(F, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorCode::Singular, "matrix is singular");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

std::vector<Vec> nullspace(const Field& F, const Matrix& A) {
  Matrix R = A;
  const auto pivots = rref(F, R);
  std::vector<bool> is_pivot(A.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < A.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(A.cols());
    v[free] = F.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(R(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Field& F, const Matrix& A, const Vec& b) {
  require(A.rows() == b.size(), "solve shape mismatch");
  Matrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  const auto pivots = rref(F, aug);
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;
  Vec x = zero_vec(A.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, A.cols());
  return x;
}

std::vector<Vec> complete_basis(const Field& F, std::vector<Vec> vecs, std::size_t n) {
  std::size_t current = vecs.empty() ? 0 : rank(F, Matrix::from_columns(vecs));
  if (current != vecs.size()) throw Error(ErrorCode::RankDeficient, "vectors are dependent");
  for (std::size_t i = 0; i < n && vecs.size() < n; ++i) {
    vecs.push_back(unit_vec(n, i));
    if (rank(F, Matrix::from_columns(vecs)) == vecs.size()) continue;
    vecs.pop_back();
  }
  return vecs;
}

std::uint64_t ipow(std::uint64_t q, unsigned n) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (out > (std::uint64_t{1} << 62) / q) throw Error(ErrorCode::OutOfScopeParameters, "q^n overflows");
    out *= q;
  }
  return out;
}

std::uint64_t vec_index(const Field& F, const Vec& x) {
  std::uint64_t idx = 0;
  for (auto e : x) idx = idx * F.q() + e.code;
  return idx;
}

Vec vec_from_index(const Field& F, std::uint64_t index, std::size_t n) {
  Vec out(n);
  for (std::size_t i = n; i-- > 0;) {
    out[i] = Elt{static_cast<std::uint32_t>(index % F.q())};
    index /= F.q();
  }
  return out;
}

}  // namespace polarcore
