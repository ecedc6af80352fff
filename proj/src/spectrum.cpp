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


#include "polarcore/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "polarcore/error.hpp"
#include "polarcore/polar_graphs.hpp"

namespace polarcore {

namespace {

SpectrumReport from_map(const std::map<std::int64_t, std::int64_t>& m, SpectrumSource source, std::uint64_t N,
                        std::int64_t valency) {
  SpectrumReport R;
  R.source = source;
  R.vertex_count = N;
  R.valency = valency;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    if (it->second != 0) R.pairs.emplace_back(it->first, it->second);
  }
  return R;
}

std::int64_t P(std::uint64_t q, unsigned e) { return static_cast<std::int64_t>(ipow(q, e)); }

// Isotropic vectors (including 0) of an invertible symmetric matrix of any size.
std::int64_t zero_count(const Field& F, const Matrix& M) {
  if (M.rows() <= 1) return 1;
  return isotropic_count(SymForm(F, M), F.zero());
}

std::vector<Vec> connection_set(const SymForm& S) {
  const Field& F = S.field();
  const std::uint64_t N = ipow(F.q(), static_cast<unsigned>(S.n()));
  std::vector<Vec> conn;
  for (std::uint64_t idx = 1; idx < N; ++idx) {
    Vec s = vec_from_index(F, idx, S.n());
    if (S.evaluate(s) == F.zero()) conn.push_back(std::move(s));
  }
  return conn;
}

}  // namespace

std::string_view to_string(SpectrumSource source) {
  switch (source) {
    case SpectrumSource::closed_form: return "closed_form";
    case SpectrumSource::character_sum: return "character_sum";
    case SpectrumSource::numeric_oracle: return "numeric_oracle";
  }
  return "?";
}

bool report_consistent(const SpectrumReport& R) {
  if (R.pairs.empty()) return false;
  std::int64_t total = 0, trace = 0;
  for (auto [l, m] : R.pairs) {
    total += m;
    trace += l * m;
  }
  return total == static_cast<std::int64_t>(R.vertex_count) && trace == 0 && R.max_eigenvalue() == R.valency;
}

SpectrumReport spectrum_closed_form(QuadricKind kind, unsigned n, std::uint32_t q) {
  form_class(kind, n, q);
  const std::int64_t Q = q;
  const std::uint64_t N = ipow(q, n);
  std::map<std::int64_t, std::int64_t> m;
  if (kind == QuadricKind::parabolic) {
    const std::int64_t h = P(q, (n - 1) / 2);
    const std::int64_t top = P(q, n - 1);
    m[top - 1] += 1;
    m[h - 1] += (Q - 1) * (top + h) / 2;
    m[-1] += top - 1;
    m[-h - 1] += (Q - 1) * (top - h) / 2;
    return from_map(m, SpectrumSource::closed_form, N, top - 1);
  }
  const std::int64_t a = P(q, n / 2 - 1);  // q^{n/2-1}
  const std::int64_t b = P(q, n / 2);      // q^{n/2}
  if (kind == QuadricKind::elliptic) {
    const std::int64_t val = (a - 1) * (b + 1);
    m[val] += 1;
    m[a - 1] += a * (Q - 1) * (b + 1);
    m[-b + a - 1] += (a - 1) * (b + 1);
    return from_map(m, SpectrumSource::closed_form, N, val);
  }
  const std::int64_t val = (a + 1) * (b - 1);
  m[val] += 1;
  m[b - a - 1] += (a + 1) * (b - 1);
  m[-a - 1] += a * (Q - 1) * (b - 1);
  return from_map(m, SpectrumSource::closed_form, N, val);
}

SpectrumReport spectrum_character(const SymForm& S, std::uint64_t budget) {
  const Field& F = S.field();
  const std::size_t n = S.n();
  const std::uint64_t N = ipow(F.q(), static_cast<unsigned>(n));
  const auto conn_size = static_cast<std::uint64_t>(isotropic_count(S, F.zero()) - 1);
  if (conn_size != 0 && N > budget / conn_size) throw Error(ErrorCode::BudgetExceeded, "character sum exceeds budget");
  const auto conn = connection_set(S);
  const std::int64_t p = F.p();
  const auto s = static_cast<std::int64_t>(conn.size());
  std::map<std::int64_t, std::int64_t> m;
  for (std::uint64_t idx = 0; idx < N; ++idx) {
    const Vec a = vec_from_index(F, idx, n);
    std::int64_t delta = 0;
    for (const auto& x : conn) {
      if (F.trace(dot(F, a, x)) == F.zero()) ++delta;
    }
    const std::int64_t num = delta * p - s;
    if (num % (p - 1) != 0) throw Error(ErrorCode::NonIntegerEigenvalue, "character sum is not integral");
    m[num / (p - 1)] += 1;
  }
  return from_map(m, SpectrumSource::character_sum, N, s);
}

SpectrumReport spectrum_character_analytic(const SymForm& S, std::uint64_t budget) {
  const Field& F = S.field();
  const std::size_t n = S.n();
  if (n % 2 == 0) throw Error(ErrorCode::BadParity, "analytic character path needs a parabolic form");
  const std::uint64_t N = ipow(F.q(), static_cast<unsigned>(n));
  if (N > budget) throw Error(ErrorCode::BudgetExceeded, "analytic character path exceeds budget");
  // VO(A) ≅ VO(I) through any T with TᵀAT = cI.
  congruence_transport(S, identity_form(F, n));
  const std::int64_t q = F.q();
  const std::int64_t s = isotropic_count(S, F.zero()) - 1;
  std::map<std::int64_t, std::int64_t> m;
  for (std::uint64_t idx = 0; idx < N; ++idx) {
    const Vec a = vec_from_index(F, idx, n);
    std::int64_t omega0 = 0;
    std::size_t i1 = 0;
    while (i1 < n && a[i1] == F.zero()) ++i1;
    if (i1 == n) {
      omega0 = s;
    } else {
      // Eliminate x_{i1}: the remaining coordinates carry I + a1^{-2} b bᵀ.
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < n; ++i) {
        if (i != i1) rest.push_back(i);
      }
      const Elt inv_a1_sq = F.inv(F.mul(a[i1], a[i1]));
      Matrix A1 = Matrix::identity(n - 1);
      for (std::size_t i = 0; i < n - 1; ++i) {
        for (std::size_t j = 0; j < n - 1; ++j) {
          A1(i, j) = F.add(A1(i, j), F.mul(inv_a1_sq, F.mul(a[rest[i]], a[rest[j]])));
        }
      }
      const Elt ata = dot(F, a, a);
      if (ata != F.zero()) {
        omega0 = zero_count(F, A1) - 1;
      } else {
        std::size_t j2 = 0;
        while (a[rest[j2]] == F.zero()) ++j2;
        Matrix A12(n - 2, n - 2);
        for (std::size_t i = 0, r = 0; i < n - 1; ++i) {
          if (i == j2) continue;
          for (std::size_t j = 0, c = 0; j < n - 1; ++j) {
            if (j == j2) continue;
            A12(r, c++) = A1(i, j);
          }
          ++r;
        }
        if (det(F, A12) == F.zero() || det(F, A1) != F.zero()) {
          throw Error(ErrorCode::VerificationFailed, "isotropic functional has unexpected block structure");
        }
        omega0 = q * zero_count(F, A12) - 1;
      }
    }
    const std::int64_t num = q * omega0 - s;
    if (num % (q - 1) != 0) throw Error(ErrorCode::NonIntegerEigenvalue, "analytic eigenvalue is not integral");
    m[num / (q - 1)] += 1;
  }
  return from_map(m, SpectrumSource::character_sum, N, s);
}

SpectrumReport spectrum_numeric_oracle(const SymForm& S, std::uint64_t budget) {
  const Field& F = S.field();
  const std::uint64_t N = ipow(F.q(), static_cast<unsigned>(S.n()));
  if (N > budget) throw Error(ErrorCode::BudgetExceeded, "numeric oracle exceeds budget");
  const auto conn = connection_set(S);
  const auto dim = static_cast<Eigen::Index>(N);
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(dim, dim);
  for (std::uint64_t v = 0; v < N; ++v) {
    const Vec x = vec_from_index(F, v, S.n());
    for (const auto& s : conn) {
      adj(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(vec_index(F, add(F, x, s)))) = 1.0;
    }
  }
  // QR on the tridiagonal form can stall on highly degenerate spectra, so
  // multiplicities come from Sturm counts instead.
  Eigen::Tridiagonalization<Eigen::MatrixXd> tri(adj);
  const Eigen::VectorXd d = tri.diagonal();
  const Eigen::VectorXd e = tri.subDiagonal();
  auto below = [&](double x) {
    std::int64_t neg = 0;
    double piv = 1.0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      piv = d(i) - x - (i > 0 ? e(i - 1) * e(i - 1) / piv : 0.0);
      if (piv == 0.0) piv = -1e-300;
      if (piv < 0) ++neg;
    }
    return neg;
  };
  const auto deg = static_cast<std::int64_t>(conn.size());
  std::map<std::int64_t, std::int64_t> m;
  std::int64_t total = 0;
  for (std::int64_t r = -deg; r <= deg; ++r) {
    const auto lam = static_cast<double>(r);
    const std::int64_t mult = below(lam + 0.5) - below(lam - 0.5);
    if (mult == 0) continue;
    if (below(lam + 1e-6) - below(lam - 1e-6) != mult) {
      throw Error(ErrorCode::NonIntegerEigenvalue, "eigenvalue is not near an integer");
    }
    m[r] = mult;
    total += mult;
  }
  if (total != static_cast<std::int64_t>(N)) throw Error(ErrorCode::NonIntegerEigenvalue, "eigenvalues outside the valency range");
  return from_map(m, SpectrumSource::numeric_oracle, N, static_cast<std::int64_t>(conn.size()));
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return Rational{num / g, den / g};
}

std::int64_t Rational::floor() const {
  const std::int64_t f = num / den;
  return (num % den != 0 && num < 0) ? f - 1 : f;
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational hoffman_alpha_bound(const SpectrumReport& R) {
  if (R.valency <= 0) throw Error(ErrorCode::ZeroValency, "Hoffman bound needs positive valency");
  const std::int64_t lmin = R.min_eigenvalue();
  const std::int64_t lmax = R.max_eigenvalue();
  const __int128 num = static_cast<__int128>(R.vertex_count) * (-lmin);
  const std::int64_t den = lmax - lmin;
  const std::int64_t g = std::gcd(static_cast<std::int64_t>(num % den), den);
  const __int128 reduced = num / g;
  if (reduced > INT64_MAX) throw Error(ErrorCode::OutOfScopeParameters, "Hoffman bound overflows");
  return make_rational(static_cast<std::int64_t>(reduced), den / g);
}

bool is_ramanujan(const SpectrumReport& R) {
  const std::int64_t l1 = R.max_eigenvalue();
  for (auto [l, m] : R.pairs) {
    if (l == l1 || l == -l1) continue;
    if (l * l > 4 * (l1 - 1)) return false;
  }
  return true;
}

}  // namespace polarcore
