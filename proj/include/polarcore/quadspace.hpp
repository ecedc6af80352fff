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

// Non-degenerate symmetric bilinear forms over GF(q), q odd.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polarcore/field.hpp"
#include "polarcore/linalg.hpp"

namespace polarcore {

enum class QuadricKind { parabolic, hyperbolic, elliptic };

std::string_view to_string(QuadricKind kind);
/// Accepts "parabolic"/"par"/"0", "hyperbolic"/"+"/"plus", "elliptic"/"-"/"minus".
QuadricKind parse_kind(std::string_view text);

struct FormClass {
  QuadricKind kind;
  unsigned witt_index;          // r
  std::uint64_t generator_size;  // (q^r - 1)/(q - 1) projective points per generator
};

/// A symmetric invertible n x n matrix over a fixed field.
class SymForm {
 public:
  /// Throws NotSymmetric, Singular, or DimensionMismatch (n < 2).
  SymForm(Field F, Matrix A);

  const Field& field() const { return F_; }
  const Matrix& matrix() const { return A_; }
  std::size_t n() const { return A_.rows(); }
  Elt det() const { return det_; }

  Elt evaluate(const Vec& x) const;
  Elt bilinear(const Vec& x, const Vec& y) const;
  /// Gram matrix Qᵀ A Q of the columns of Q.
  Matrix gram(const Matrix& Q) const;

 private:
  Field F_;
  Matrix A_;
  Elt det_;
};

/// xᵀ A x; throws DimensionMismatch.
Elt evaluate_form(const SymForm& S, const Vec& x);

/// |{x : xᵀAx = b}| from the closed-form count.
std::int64_t isotropic_count(const SymForm& S, Elt b);

FormClass classify_form(const SymForm& S);
FormClass form_class(QuadricKind kind, unsigned n, std::uint32_t q);

bool is_isometry(const SymForm& S, const Matrix& P);

/// P with PᵀAP = A and P Q1 = Q2. Throws GramMismatch or RankDeficient.
Matrix witt_extension(const SymForm& S, const Matrix& Q1, const Matrix& Q2);

/// P with PᵀAP = A and P x1 = (a1/a2) x2, given x_iᵀAx_i = c·a_i² for a common c != 0.
Matrix scale_isometry(const SymForm& S, const Vec& x1, const Vec& x2, Elt a1, Elt a2);

struct PairIsometry {
  Matrix P;
  Elt alpha;
};

/// P with PᵀAP = A, P x1 = x2, P y1 = alpha y2 for isotropic x_i, y_i with x_iᵀAy_i != 0.
PairIsometry pair_isometry(const SymForm& S, const Vec& x1, const Vec& y1, const Vec& x2, const Vec& y2);

/// r vectors spanning a maximal totally isotropic subspace. Throws Anisotropic when r = 0.
std::vector<Vec> totally_isotropic_subspace(const SymForm& S);

/// det(A + x yᵀ) computed as (det A)(1 + yᵀ A⁻¹ x).
Elt rank_one_det(const SymForm& S, const Vec& x, const Vec& y);

/// Columns c_1..c_m of a basis of span(W) with Gram diag(1, ..., 1, delta), delta in {1, d}
/// where d is the field's smallest non-square. The span of W must be non-degenerate.
Matrix canonical_basis(const Field& F, const Matrix& A, const Matrix& W);
Matrix canonical_basis(const SymForm& S);

struct Congruence {
  Matrix T;
  Elt scalar;
};

/// T and c with Tᵀ A_target T = c A_source. For even n the forms must have the same
/// discriminant class (c = 1); for odd n, c absorbs the discriminant (c in {1, d}).
Congruence congruence_transport(const SymForm& target, const SymForm& source);

// Named forms.
SymForm identity_form(const Field& F, std::size_t n);
SymForm minkowski_form(const Field& F, std::size_t n);
/// Ones on the anti-diagonal.
SymForm antidiag_form(const Field& F, std::size_t n);
/// antidiag(n-1) ⊕ (-1); hyperbolic for even n.
SymForm antidiag_bordered_form(const Field& F, std::size_t n);
/// The 5x5 model with -1 on the anti-diagonal and 1 in the centre.
SymForm thas5_form(const Field& F);
/// thas5 ⊕ (-1).
SymForm thas5_bordered_form(const Field& F);
/// diag(-3, 1) ⊕ [[0,-1],[-1,0]] ⊕ [[0,1],[1,0]].
SymForm kantor6_form(const Field& F);
/// diag(1, -d, -d, 1) with d the smallest non-square.
SymForm split4_form(const Field& F);
/// diag(1, ..., 1, delta) of the requested kind.
SymForm canonical_form(const Field& F, QuadricKind kind, std::size_t n);

/// Resolves a form id: minkowski, identity, antidiag, antidiag-bordered, thas5,
/// thas5-bordered, kantor6, split4, canonical-{parabolic,hyperbolic,elliptic}.
SymForm named_form(const Field& F, std::string_view id, std::size_t n);
std::vector<std::string> named_form_ids();

}  // namespace polarcore
