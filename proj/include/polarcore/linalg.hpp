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

// Dense vectors and matrices over GF(q), with Gaussian elimination.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "polarcore/field.hpp"

namespace polarcore {

using Vec = std::vector<Elt>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::span<const Vec> cols);
  static Matrix from_rows(std::span<const Vec> rows);
  /// Builds a matrix from small integers mapped into the prime subfield.
  static Matrix from_ints(const Field& F, std::size_t rows, std::size_t cols,
                          std::initializer_list<std::int64_t> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elt operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elt> data_;
};

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec add(const Field& F, const Vec& x, const Vec& y);
Vec sub(const Field& F, const Vec& x, const Vec& y);
Vec scale(const Field& F, Elt a, const Vec& x);
Elt dot(const Field& F, const Vec& x, const Vec& y);
/// Entry-wise x -> x^{p^j}.
Vec frobenius(const Field& F, const Vec& x, unsigned j);

Matrix transpose(const Matrix& A);
Matrix mul(const Field& F, const Matrix& A, const Matrix& B);
Vec mul(const Field& F, const Matrix& A, const Vec& x);
Matrix add(const Field& F, const Matrix& A, const Matrix& B);
Matrix scale(const Field& F, Elt a, const Matrix& A);
Matrix frobenius(const Field& F, const Matrix& A, unsigned j);
/// Pᵀ A P.
Matrix congruence(const Field& F, const Matrix& P, const Matrix& A);
/// xᵀ A y.
Elt bilinear(const Field& F, const Matrix& A, const Vec& x, const Vec& y);
/// xᵀ A x.
Elt quadratic(const Field& F, const Matrix& A, const Vec& x);

Elt det(const Field& F, Matrix A);
std::size_t rank(const Field& F, Matrix A);
/// Throws Singular when A is not invertible.
Matrix inverse(const Field& F, const Matrix& A);
/// Basis of {x : A x = 0}.
std::vector<Vec> nullspace(const Field& F, const Matrix& A);
/// Some x with A x = b, or nullopt.
std::optional<Vec> solve(const Field& F, const Matrix& A, const Vec& b);
/// Extends linearly independent vectors to a basis of F^n with standard vectors.
std::vector<Vec> complete_basis(const Field& F, std::vector<Vec> vecs, std::size_t n);

/// Checked q^n; throws OutOfScopeParameters on overflow past 2^62.
std::uint64_t ipow(std::uint64_t q, unsigned n);

/// Lexicographic index of a vector (first coordinate most significant).
std::uint64_t vec_index(const Field& F, const Vec& x);
Vec vec_from_index(const Field& F, std::uint64_t index, std::size_t n);

}  // namespace polarcore
