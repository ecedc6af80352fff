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

#include "polarcore/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "polarcore/error.hpp"

namespace polarcore {

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients over GF(p)

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = lead * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p, unsigned len) {
  Poly out(len, 0);
  for (unsigned i = 0; i < len; ++i) {
    out[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return out;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits of code.
Poly monic_from_code(std::uint64_t code, std::uint32_t p, unsigned d) {
  Poly out = poly_from_code(code, p, d);
  out.push_back(1);
  return out;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg <= 1) return true;
  for (unsigned d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      if (poly_mod(f, monic_from_code(c, p, d), p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      unsigned k = 0;
      while (q % d == 0) {
        q /= d;
        ++k;
      }
      if (q != 1) return std::nullopt;
      return std::make_pair(static_cast<std::uint32_t>(d), k);
    }
  }
  return std::make_pair(static_cast<std::uint32_t>(q), 1u);
}

struct Field::Impl {
  std::uint32_t p = 0;
  unsigned k = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::uint32_t generator = 0;
  std::vector<std::uint32_t> exp;  // exp[i] = g^i for 0 <= i < 2(q-1)
  std::vector<std::uint32_t> log;  // log[x] for x != 0

  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    const Poly pa = poly_from_code(a, p, k);
    const Poly pb = poly_from_code(b, p, k);
    Poly prod(2 * k, 0);
    for (unsigned i = 0; i < k; ++i) {
      if (pa[i] == 0) continue;
      for (unsigned j = 0; j < k; ++j) {
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p);
      }
    }
    const Poly r = poly_mod(prod, modulus, p);
    std::uint64_t code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * p + r[i];
    return static_cast<std::uint32_t>(code);
  }

  std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  }

  void build_tables() {
    const std::uint64_t order = q - 1;
    const auto factors = prime_factors(order);
    for (std::uint32_t g = 1; g < q; ++g) {
      bool primitive = true;
      for (auto r : factors) {
        if (slow_pow(g, order / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = g;
        break;
      }
    }
    exp.assign(2 * order, 0);
    log.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp[i] = x;
      exp[i + order] = x;
      log[x] = static_cast<std::uint32_t>(i);
      x = (k == 1) ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * generator % p)
                   : slow_mul(x, generator);
    }
  }
};

Field Field::create(std::uint32_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(ErrorCode::BadModulus, "degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw Error(ErrorCode::OutOfScopeParameters, "field order exceeds 2^20");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = static_cast<std::uint32_t>(q);
  if (modulus) {
    Poly m = *modulus;
    if (m.size() != k + 1 || m.back() != 1) {
      throw Error(ErrorCode::BadModulus, "modulus must be monic of degree " + std::to_string(k));
    }
    for (auto c : m) {
      if (c >= p) throw Error(ErrorCode::BadModulus, "modulus coefficient not reduced mod p");
    }
    if (!is_irreducible(m, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
    impl->modulus = std::move(m);
  } else if (k == 1) {
    impl->modulus = {0, 1};
  } else {
    for (std::uint64_t c = 0;; ++c) {
      Poly m = monic_from_code(c, p, k);
      if (is_irreducible(m, p)) {
        impl->modulus = std::move(m);
        break;
      }
    }
  }
  impl->build_tables();
  return Field(std::move(impl));
}

Field Field::of_order(std::uint64_t q) {
  const auto pk = prime_power(q);
  if (!pk) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  return create(pk->first, pk->second);
}

Field Field::parse(std::string_view spec) {
  auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::ParseError, "bad field spec '" + std::string(spec) + "'");
    }
    return v;
  };
  std::string_view head = spec;
  std::optional<std::vector<std::uint32_t>> modulus;
  if (auto slash = spec.find('/'); slash != std::string_view::npos) {
    head = spec.substr(0, slash);
    std::vector<std::uint32_t> coeffs;
    std::string_view rest = spec.substr(slash + 1);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      coeffs.push_back(static_cast<std::uint32_t>(parse_uint(rest.substr(0, comma))));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    modulus = std::move(coeffs);
  }
  std::uint64_t p = 0;
  unsigned k = 1;
  if (auto caret = head.find('^'); caret != std::string_view::npos) {
    p = parse_uint(head.substr(0, caret));
    k = static_cast<unsigned>(parse_uint(head.substr(caret + 1)));
  } else {
    p = parse_uint(head);
  }
  if (p > 0xffffffffu) throw Error(ErrorCode::OutOfScopeParameters, "prime too large");
  return create(static_cast<std::uint32_t>(p), k, std::move(modulus));
}

std::string Field::spec() const {
  std::string out = std::to_string(impl_->p) + "^" + std::to_string(impl_->k);
  if (impl_->k > 1) {
    out += "/";
    for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(impl_->modulus[i]);
    }
  }
  return out;
}

std::uint32_t Field::p() const { return impl_->p; }
unsigned Field::k() const { return impl_->k; }
std::uint32_t Field::q() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const { return impl_->modulus; }

Elt Field::from_int(std::int64_t v) const {
  const std::int64_t p = impl_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return Elt{static_cast<std::uint32_t>(r)};
}

Elt Field::element(std::uint32_t code) const {
  if (code >= impl_->q) throw Error(ErrorCode::ParseError, "element code out of range");
  return Elt{code};
}

Elt Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > impl_->k) throw Error(ErrorCode::DimensionMismatch, "too many coefficients");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * impl_->p + coeffs[i] % impl_->p;
  return Elt{static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(Elt x) const { return poly_from_code(x.code, impl_->p, impl_->k); }

Elt Field::add(Elt x, Elt y) const {
  const std::uint32_t p = impl_->p;
  if (impl_->k == 1) {
    const std::uint32_t s = x.code + y.code;
    return Elt{s >= p ? s - p : s};
  }
  std::uint32_t a = x.code, b = y.code, out = 0, place = 1;
  for (unsigned i = 0; i < impl_->k; ++i) {
    std::uint32_t s = a % p + b % p;
    if (s >= p) s -= p;
    out += s * place;
    place *= p;
    a /= p;
    b /= p;
  }
  return Elt{out};
}

Elt Field::neg(Elt x) const {
  const std::uint32_t p = impl_->p;
  if (impl_->k == 1) return Elt{x.code == 0 ? 0 : p - x.code};
  std::uint32_t a = x.code, out = 0, place = 1;
  for (unsigned i = 0; i < impl_->k; ++i) {
    const std::uint32_t d = a % p;
    out += (d == 0 ? 0 : p - d) * place;
    place *= p;
    a /= p;
  }
  return Elt{out};
}

Elt Field::sub(Elt x, Elt y) const { return add(x, neg(y)); }

Elt Field::mul(Elt x, Elt y) const {
  if (x.code == 0 || y.code == 0) return Elt{0};
  return Elt{impl_->exp[impl_->log[x.code] + impl_->log[y.code]]};
}

Elt Field::inv(Elt x) const {
  if (x.code == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t order = impl_->q - 1;
  return Elt{impl_->exp[(order - impl_->log[x.code]) % order]};
}

Elt Field::div(Elt x, Elt y) const { return mul(x, inv(y)); }

Elt Field::pow(Elt x, std::uint64_t e) const {
  if (e == 0) return one();
  if (x.code == 0) return zero();
  const std::uint64_t order = impl_->q - 1;
  return Elt{impl_->exp[(static_cast<std::uint64_t>(impl_->log[x.code]) * (e % order)) % order]};
}

int Field::eta(Elt x) const {
  if (x.code == 0) return 0;
  return pow(x, (impl_->q - 1) / 2) == one() ? 1 : -1;
}

std::optional<Elt> Field::sqrt(Elt x) const {
  if (x.code == 0) return zero();
  const std::uint32_t e = impl_->log[x.code];
  if (e % 2 != 0) return std::nullopt;
  const Elt r{impl_->exp[e / 2]};
  const Elt s = neg(r);
  return s < r ? s : r;
}

Elt Field::trace(Elt x) const {
  Elt acc = zero();
  Elt term = x;
  for (unsigned i = 0; i < impl_->k; ++i) {
    acc = add(acc, term);
    term = pow(term, impl_->p);
  }
  return acc;
}

Elt Field::frobenius(Elt x, unsigned j) const {
  for (unsigned i = 0; i < j % impl_->k; ++i) x = pow(x, impl_->p);
  return x;
}

Elt Field::find_nonsquare() const {
  for (std::uint32_t c = 1; c < impl_->q; ++c) {
    if (eta(Elt{c}) == -1) return Elt{c};
  }
  throw Error(ErrorCode::VerificationFailed, "no non-square found");
}

std::pair<Elt, Elt> Field::two_square_decompose(Elt c) const {
  for (std::uint32_t a = 0; a < impl_->q; ++a) {
    const Elt rest = sub(c, mul(Elt{a}, Elt{a}));
    for (std::uint32_t b = 0; b < impl_->q; ++b) {
      if (mul(Elt{b}, Elt{b}) == rest) return {Elt{a}, Elt{b}};
    }
  }
  throw Error(ErrorCode::VerificationFailed, "no two-square decomposition");
}

Elt Field::primitive() const { return Elt{impl_->generator}; }

std::string Field::format(Elt x) const {
  if (impl_->k == 1) return std::to_string(x.code);
  if (x.code == 0) return "0";
  const auto c = coeffs(x);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c[i]);
    } else {
      if (c[i] != 1) out += std::to_string(c[i]);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

Elt Field::parse_element(std::string_view text) const {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&]() -> Error { return Error(ErrorCode::ParseError, "bad element '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();
  if (impl_->k == 1) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw fail();
    return from_int(v);
  }
  std::vector<std::int64_t> acc(impl_->k, 0);
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::int64_t coef = 1;
    bool have_coef = false;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > start) {
      coef = std::stoll(s.substr(start, pos - start));
      have_coef = true;
    }
    if (pos < s.size() && s[pos] == '*') ++pos;
    unsigned degree = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      degree = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw fail();
        degree = static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
      }
    } else if (!have_coef) {
      throw fail();
    }
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-') throw fail();
    if (degree >= impl_->k) throw fail();
    acc[degree] += sign * coef;
  }
  std::vector<std::uint32_t> c(impl_->k);
  const std::int64_t p = impl_->p;
  for (unsigned i = 0; i < impl_->k; ++i) c[i] = static_cast<std::uint32_t>(((acc[i] % p) + p) % p);
  return from_coeffs(c);
}

bool operator==(const Field& a, const Field& b) {
  return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k &&
                                a.impl_->modulus == b.impl_->modulus);
}

}  // namespace polarcore
