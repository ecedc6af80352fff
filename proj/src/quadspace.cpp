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


#include "polarcore/quadspace.hpp"

#include <utility>

#include "polarcore/error.hpp"

namespace polarcore {

namespace {

int sign_power(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

Elt signed_elt(const Field& F, int sign, Elt x) { return sign > 0 ? x : F.neg(x); }

std::int64_t checked_pow(std::uint64_t q, unsigned e) { return static_cast<std::int64_t>(ipow(q, e)); }

// Orthogonal basis (in coordinates) of F^m with respect to the non-degenerate Gram H.
std::vector<Vec> orthogonal_coords(const Field& F, const Matrix& H) {
  const std::size_t m = H.rows();
  std::vector<Vec> rest;
  for (std::size_t i = 0; i < m; ++i) rest.push_back(unit_vec(m, i));
  std::vector<Vec> chosen;
  while (!rest.empty()) {
    std::size_t used = rest.size();
    Vec v;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (quadratic(F, H, rest[i]) != F.zero()) {
        used = i;
        v = rest[i];
        break;
      }
    }
    if (used == rest.size()) {
      for (std::size_t i = 0; i < rest.size() && used == rest.size(); ++i) {
        for (std::size_t j = i + 1; j < rest.size(); ++j) {
          if (bilinear(F, H, rest[i], rest[j]) != F.zero()) {
            used = i;
            v = add(F, rest[i], rest[j]);
            break;
          }
        }
      }
    }
    if (used == rest.size()) throw Error(ErrorCode::Singular, "degenerate subspace");
    const Elt qv = quadratic(F, H, v);
    std::vector<Vec> next;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (i == used) continue;
      const Elt c = F.div(bilinear(F, H, rest[i], v), qv);
      next.push_back(sub(F, rest[i], scale(F, c, v)));
    }
    chosen.push_back(std::move(v));
    rest = std::move(next);
  }
  return chosen;
}

// (x, y) with a x^2 + b y^2 = 1, x ascending.
std::pair<Elt, Elt> represent_one(const Field& F, Elt a, Elt b) {
  for (std::uint32_t c = 0; c < F.q(); ++c) {
    const Elt x = F.element(c);
    const Elt t = F.div(F.sub(F.one(), F.mul(a, F.mul(x, x))), b);
    if (auto y = F.sqrt(t)) return {x, *y};
  }
  throw Error(ErrorCode::VerificationFailed, "binary form does not represent 1");
}

void require_square_dim(const SymForm& S, std::size_t size) {
  if (size != S.n()) throw Error(ErrorCode::DimensionMismatch, "vector length differs from form dimension");
}

}  // namespace

std::string_view to_string(QuadricKind kind) {
  switch (kind) {
    case QuadricKind::parabolic: return "parabolic";
    case QuadricKind::hyperbolic: return "hyperbolic";
    case QuadricKind::elliptic: return "elliptic";
  }
  return "?";
}

QuadricKind parse_kind(std::string_view text) {
  if (text == "parabolic" || text == "par" || text == "0") return QuadricKind::parabolic;
  if (text == "hyperbolic" || text == "+" || text == "plus") return QuadricKind::hyperbolic;
  if (text == "elliptic" || text == "-" || text == "minus") return QuadricKind::elliptic;
  throw Error(ErrorCode::ParseError, "unknown quadric kind '" + std::string(text) + "'");
}

SymForm::SymForm(Field F, Matrix A) : F_(std::move(F)), A_(std::move(A)) {
  if (!A_.square() || A_.rows() < 2) throw Error(ErrorCode::DimensionMismatch, "form must be square with n >= 2");
  if (A_ != transpose(A_)) throw Error(ErrorCode::NotSymmetric, "form matrix is not symmetric");
  det_ = polarcore::det(F_, A_);
  if (det_ == F_.zero()) throw Error(ErrorCode::Singular, "form matrix is singular");
}

Elt SymForm::evaluate(const Vec& x) const {
  require_square_dim(*this, x.size());
  return quadratic(F_, A_, x);
}

Elt SymForm::bilinear(const Vec& x, const Vec& y) const {
  require_square_dim(*this, x.size());
  require_square_dim(*this, y.size());
  return polarcore::bilinear(F_, A_, x, y);
}

Matrix SymForm::gram(const Matrix& Q) const { return congruence(F_, Q, A_); }

Elt evaluate_form(const SymForm& S, const Vec& x) { return S.evaluate(x); }

std::int64_t isotropic_count(const SymForm& S, Elt b) {
  const Field& F = S.field();
  const std::uint64_t q = F.q();
  const auto n = static_cast<unsigned>(S.n());
  const std::int64_t base = checked_pow(q, n - 1);
  if (n % 2 == 0) {
    const int e = F.eta(signed_elt(F, sign_power(n / 2), S.det()));
    const std::int64_t v = b == F.zero() ? static_cast<std::int64_t>(q) - 1 : -1;
    return base + v * checked_pow(q, (n - 2) / 2) * e;
  }
  const int e = F.eta(F.mul(signed_elt(F, sign_power((n - 1) / 2), b), S.det()));
  return base + checked_pow(q, (n - 1) / 2) * e;
}

FormClass form_class(QuadricKind kind, unsigned n, std::uint32_t q) {
  unsigned r = 0;
  switch (kind) {
    case QuadricKind::parabolic:
      if (n % 2 == 0) throw Error(ErrorCode::BadParity, "parabolic forms have odd dimension");
      r = (n - 1) / 2;
      break;
    case QuadricKind::hyperbolic:
      if (n % 2 == 1) throw Error(ErrorCode::BadParity, "hyperbolic forms have even dimension");
      r = n / 2;
      break;
    case QuadricKind::elliptic:
      if (n % 2 == 1) throw Error(ErrorCode::BadParity, "elliptic forms have even dimension");
      r = n / 2 - 1;
      break;
  }
  return FormClass{kind, r, (ipow(q, r) - 1) / (q - 1)};
}

FormClass classify_form(const SymForm& S) {
  const Field& F = S.field();
  const auto n = static_cast<unsigned>(S.n());
  if (n % 2 == 1) return form_class(QuadricKind::parabolic, n, F.q());
  const int e = F.eta(signed_elt(F, sign_power(n / 2), S.det()));
  return form_class(e > 0 ? QuadricKind::hyperbolic : QuadricKind::elliptic, n, F.q());
}

bool is_isometry(const SymForm& S, const Matrix& P) {
  return P.rows() == S.n() && P.cols() == S.n() && congruence(S.field(), P, S.matrix()) == S.matrix();
}

Matrix canonical_basis(const Field& F, const Matrix& A, const Matrix& W) {
  const Matrix H = congruence(F, W, A);
  auto coords = orthogonal_coords(F, H);
  const std::size_t m = coords.size();
  // Pairwise rewrite <a> ⊥ <b> as <1> ⊥ <ab>, pushing the discriminant to the end.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const Elt a = quadratic(F, H, coords[i]);
    const Elt b = quadratic(F, H, coords[i + 1]);
    const auto [x, y] = represent_one(F, a, b);
    Vec u = add(F, scale(F, x, coords[i]), scale(F, y, coords[i + 1]));
    Vec w = sub(F, scale(F, F.mul(b, y), coords[i]), scale(F, F.mul(a, x), coords[i + 1]));
    coords[i] = std::move(u);
    coords[i + 1] = std::move(w);
  }
  const Elt last = quadratic(F, H, coords[m - 1]);
  Elt root;
  if (auto s = F.sqrt(last)) {
    root = *s;
  } else {
    root = *F.sqrt(F.div(last, F.find_nonsquare()));
  }
  coords[m - 1] = scale(F, F.inv(root), coords[m - 1]);
  std::vector<Vec> cols;
  for (const auto& c : coords) cols.push_back(mul(F, W, c));
  return Matrix::from_columns(cols);
}

Matrix canonical_basis(const SymForm& S) {
  return canonical_basis(S.field(), S.matrix(), Matrix::identity(S.n()));
}

Matrix witt_extension(const SymForm& S, const Matrix& Q1, const Matrix& Q2) {
  const Field& F = S.field();
  const Matrix& A = S.matrix();
  const std::size_t n = S.n();
  if (Q1.rows() != n || Q2.rows() != n || Q1.cols() != Q2.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "Q1 and Q2 must both be n x m");
  }
  const std::size_t m = Q1.cols();
  if (m == 0) return Matrix::identity(n);
  if (rank(F, Q1) != m || rank(F, Q2) != m) throw Error(ErrorCode::RankDeficient, "Q1 and Q2 need full column rank");
  if (S.gram(Q1) != S.gram(Q2)) throw Error(ErrorCode::GramMismatch, "Q1ᵀAQ1 differs from Q2ᵀAQ2");

  Matrix B1 = Q1;
  Matrix B2 = Q2;
  // Enlarge both frames identically until their common Gram matrix is non-degenerate.
  for (;;) {
    const Matrix G = S.gram(B1);
    const auto radical = nullspace(F, G);
    if (radical.empty()) break;
    const std::size_t k = B1.cols();
    const Matrix T = Matrix::from_columns(complete_basis(F, {radical.front()}, k));
    B1 = mul(F, B1, T);
    B2 = mul(F, B2, T);
    std::vector<Vec> cols1, cols2;
    for (std::size_t j = 0; j < k; ++j) {
      cols1.push_back(B1.column(j));
      cols2.push_back(B2.column(j));
    }
    for (auto* frame : {&cols1, &cols2}) {
      const Matrix Bt = mul(F, transpose(Matrix::from_columns(*frame)), A);
      auto v = solve(F, Bt, unit_vec(k, 0));
      if (!v) throw Error(ErrorCode::VerificationFailed, "no hyperbolic partner for radical vector");
      const Elt half = F.div(S.evaluate(*v), F.from_int(2));
      frame->push_back(sub(F, *v, scale(F, half, frame->front())));
    }
    B1 = Matrix::from_columns(cols1);
    B2 = Matrix::from_columns(cols2);
  }

  auto complete = [&](const Matrix& B) {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < B.cols(); ++j) cols.push_back(B.column(j));
    if (B.cols() < n) {
      const auto perp = nullspace(F, mul(F, transpose(B), A));
      const Matrix C = canonical_basis(F, A, Matrix::from_columns(perp));
      for (std::size_t j = 0; j < C.cols(); ++j) cols.push_back(C.column(j));
    }
    return Matrix::from_columns(cols);
  };
  const Matrix full1 = complete(B1);
  const Matrix full2 = complete(B2);
  const Matrix P = mul(F, full2, inverse(F, full1));
  if (!is_isometry(S, P) || mul(F, P, Q1) != Q2) {
    throw Error(ErrorCode::VerificationFailed, "Witt extension failed its postcondition check");
  }
  return P;
}

Matrix scale_isometry(const SymForm& S, const Vec& x1, const Vec& x2, Elt a1, Elt a2) {
  const Field& F = S.field();
  if (a1 == F.zero() || a2 == F.zero()) throw Error(ErrorCode::IncompatibleValues, "a1 and a2 must be nonzero");
  const Elt c1 = F.div(S.evaluate(x1), F.mul(a1, a1));
  const Elt c2 = F.div(S.evaluate(x2), F.mul(a2, a2));
  if (c1 != c2 || c1 == F.zero()) {
    throw Error(ErrorCode::IncompatibleValues, "x_iᵀAx_i / a_i² must agree and be nonzero");
  }
  const Vec target = scale(F, F.div(a1, a2), x2);
  return witt_extension(S, Matrix::from_columns(std::vector<Vec>{x1}), Matrix::from_columns(std::vector<Vec>{target}));
}

PairIsometry pair_isometry(const SymForm& S, const Vec& x1, const Vec& y1, const Vec& x2, const Vec& y2) {
  const Field& F = S.field();
  for (const Vec* v : {&x1, &y1, &x2, &y2}) {
    if (S.evaluate(*v) != F.zero()) throw Error(ErrorCode::PreconditionViolated, "pair vectors must be isotropic");
  }
  const Elt b1 = S.bilinear(x1, y1);
  const Elt b2 = S.bilinear(x2, y2);
  if (b1 == F.zero() || b2 == F.zero()) {
    throw Error(ErrorCode::PreconditionViolated, "x_iᵀAy_i must be nonzero");
  }
  const Elt alpha = F.div(b1, b2);
  const Matrix Q1 = Matrix::from_columns(std::vector<Vec>{x1, y1});
  const Matrix Q2 = Matrix::from_columns(std::vector<Vec>{x2, scale(F, alpha, y2)});
  return PairIsometry{witt_extension(S, Q1, Q2), alpha};
}

std::vector<Vec> totally_isotropic_subspace(const SymForm& S) {
  const Field& F = S.field();
  const Matrix& A = S.matrix();
  const FormClass cls = classify_form(S);
  if (cls.witt_index == 0) throw Error(ErrorCode::Anisotropic, "form has Witt index 0");
  Matrix W = Matrix::identity(S.n());
  std::vector<Vec> out;
  for (unsigned step = 0; step < cls.witt_index; ++step) {
    const Matrix H = congruence(F, W, A);
    const std::size_t m = H.rows();
    const std::uint64_t total = ipow(F.q(), static_cast<unsigned>(m));
    Vec c;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      Vec cand = vec_from_index(F, idx, m);
      if (quadratic(F, H, cand) == F.zero()) {
        c = std::move(cand);
        break;
      }
    }
    if (c.empty()) throw Error(ErrorCode::VerificationFailed, "no isotropic vector in complement");
    out.push_back(mul(F, W, c));
    const Vec hc = mul(F, H, c);
    std::size_t j = 0;
    while (hc[j] == F.zero()) ++j;
    Vec partner = scale(F, F.inv(hc[j]), unit_vec(m, j));
    partner = sub(F, partner, scale(F, F.div(quadratic(F, H, partner), F.from_int(2)), c));
    if (step + 1 == cls.witt_index) break;
    const Matrix rows = Matrix::from_rows(std::vector<Vec>{hc, mul(F, H, partner)});
    W = mul(F, W, Matrix::from_columns(nullspace(F, rows)));
  }
  return out;
}

Elt rank_one_det(const SymForm& S, const Vec& x, const Vec& y) {
  const Field& F = S.field();
  require_square_dim(S, x.size());
  require_square_dim(S, y.size());
  const Vec ainv_x = mul(F, inverse(F, S.matrix()), x);
  return F.mul(S.det(), F.add(F.one(), dot(F, y, ainv_x)));
}

Congruence congruence_transport(const SymForm& target, const SymForm& source) {
  const Field& F = target.field();
  if (target.n() != source.n()) throw Error(ErrorCode::DimensionMismatch, "forms differ in dimension");
  const int e = F.eta(F.div(target.det(), source.det()));
  Elt c = F.one();
  if (e < 0) {
    if (target.n() % 2 == 0) throw Error(ErrorCode::IncompatibleValues, "forms are not congruent");
    c = F.find_nonsquare();
  }
  const SymForm scaled(F, scale(F, c, source.matrix()));
  const Matrix T = mul(F, canonical_basis(target), inverse(F, canonical_basis(scaled)));
  if (congruence(F, T, target.matrix()) != scaled.matrix()) {
    throw Error(ErrorCode::VerificationFailed, "congruence transport failed its check");
  }
  return Congruence{T, c};
}

SymForm identity_form(const Field& F, std::size_t n) { return SymForm(F, Matrix::identity(n)); }

SymForm minkowski_form(const Field& F, std::size_t n) {
  Matrix M = Matrix::identity(n);
  for (std::size_t i = 1; i < n; ++i) M(i, i) = F.neg(F.one());
  return SymForm(F, M);
}

SymForm antidiag_form(const Field& F, std::size_t n) {
  Matrix M(n, n);
  for (std::size_t i = 0; i < n; ++i) M(i, n - 1 - i) = F.one();
  return SymForm(F, M);
}

SymForm antidiag_bordered_form(const Field& F, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::DimensionMismatch, "bordered antidiagonal form needs n >= 2");
  Matrix M(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) M(i, n - 2 - i) = F.one();
  M(n - 1, n - 1) = F.neg(F.one());
  return SymForm(F, M);
}

SymForm thas5_form(const Field& F) {
  return SymForm(F, Matrix::from_ints(F, 5, 5,
                                      {0, 0, 0, 0, -1,  //
                                       0, 0, 0, -1, 0,  //
                                       0, 0, 1, 0, 0,   //
                                       0, -1, 0, 0, 0,  //
                                       -1, 0, 0, 0, 0}));
}

SymForm thas5_bordered_form(const Field& F) {
  const Matrix A = thas5_form(F).matrix();
  Matrix M(6, 6);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) M(i, j) = A(i, j);
  }
  M(5, 5) = F.neg(F.one());
  return SymForm(F, M);
}

SymForm kantor6_form(const Field& F) {
  return SymForm(F, Matrix::from_ints(F, 6, 6,
                                      {-3, 0, 0, 0, 0, 0,   //
                                       0, 1, 0, 0, 0, 0,    //
                                       0, 0, 0, -1, 0, 0,   //
                                       0, 0, -1, 0, 0, 0,   //
                                       0, 0, 0, 0, 0, 1,    //
                                       0, 0, 0, 0, 1, 0}));
}

SymForm split4_form(const Field& F) {
  const Elt md = F.neg(F.find_nonsquare());
  Matrix M = Matrix::identity(4);
  M(1, 1) = md;
  M(2, 2) = md;
  return SymForm(F, M);
}

SymForm canonical_form(const Field& F, QuadricKind kind, std::size_t n) {
  form_class(kind, static_cast<unsigned>(n), F.q());
  Matrix M = Matrix::identity(n);
  if (kind == QuadricKind::parabolic) return SymForm(F, M);
  // diag(1,...,1) has discriminant class eta((-1)^{n/2}).
  const int e = F.eta(signed_elt(F, sign_power(n / 2), F.one()));
  const bool want_plus = kind == QuadricKind::hyperbolic;
  if ((e > 0) != want_plus) M(n - 1, n - 1) = F.find_nonsquare();
  return SymForm(F, M);
}

std::vector<std::string> named_form_ids() {
  return {"minkowski", "identity", "antidiag",           "antidiag-bordered",    "thas5",
          "thas5-bordered", "kantor6", "split4", "canonical-parabolic", "canonical-hyperbolic",
          "canonical-elliptic"};
}

SymForm named_form(const Field& F, std::string_view id, std::size_t n) {
  auto need = [&](std::size_t want) {
    if (n != 0 && n != want) {
      throw Error(ErrorCode::DimensionMismatch, "form '" + std::string(id) + "' has dimension " + std::to_string(want));
    }
  };
  if (id == "minkowski") return minkowski_form(F, n);
  if (id == "identity") return identity_form(F, n);
  if (id == "antidiag") return antidiag_form(F, n);
  if (id == "antidiag-bordered") return antidiag_bordered_form(F, n);
  if (id == "thas5") return need(5), thas5_form(F);
  if (id == "thas5-bordered") return need(6), thas5_bordered_form(F);
  if (id == "kantor6") return need(6), kantor6_form(F);
  if (id == "split4") return need(4), split4_form(F);
  if (id.starts_with("canonical-")) return canonical_form(F, parse_kind(id.substr(10)), n);
  throw Error(ErrorCode::UnknownName, "unknown form id '" + std::string(id) + "'");
}

}  // namespace polarcore
