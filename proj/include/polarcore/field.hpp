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

// Exact arithmetic in GF(p^k) for odd primes p.
//
// Elements are stored as their coefficient vector over GF(p) packed into a
// base-p integer: code = c_0 + c_1 p + ... + c_{k-1} p^{k-1}, little-endian in
// the polynomial basis 1, t, ..., t^{k-1} of GF(p)[t]/(modulus). Code order is
// the lexicographic order used for every deterministic search in the library.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polarcore {

struct Elt {
  std::uint32_t code = 0;

  friend bool operator==(Elt, Elt) = default;
  friend auto operator<=>(Elt, Elt) = default;
};

class Field {
 public:
  /// Largest supported field order; multiplication uses discrete-log tables.
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  /// Builds GF(p^k). Without a modulus the lexicographically smallest monic
  /// irreducible polynomial of degree k is chosen. The modulus is given as
  /// k+1 little-endian coefficients with leading coefficient 1.
  static Field create(std::uint32_t p, unsigned k,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  /// Field of order q (a power of an odd prime) with the default modulus.
  static Field of_order(std::uint64_t q);

  /// Parses "p^k", "p", or "p^k/c0,c1,...,ck".
  static Field parse(std::string_view spec);

  /// Canonical spec string; always includes the modulus when k > 1.
  std::string spec() const;

  std::uint32_t p() const;
  unsigned k() const;
  std::uint32_t q() const;
  const std::vector<std::uint32_t>& modulus() const;

  Elt zero() const { return Elt{0}; }
  Elt one() const { return Elt{1}; }
  /// Image of an integer in the prime subfield.
  Elt from_int(std::int64_t v) const;
  Elt element(std::uint32_t code) const;
  Elt from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Elt x) const;

  Elt add(Elt x, Elt y) const;
  Elt sub(Elt x, Elt y) const;
  Elt neg(Elt x) const;
  Elt mul(Elt x, Elt y) const;
  Elt inv(Elt x) const;
  Elt div(Elt x, Elt y) const;
  Elt pow(Elt x, std::uint64_t e) const;

  /// Quadratic character: 0 at 0, 1 on nonzero squares, -1 on non-squares.
  int eta(Elt x) const;
  bool is_square(Elt x) const { return eta(x) >= 0; }
  /// Some y with y*y == x, chosen deterministically, or nullopt for non-squares.
  std::optional<Elt> sqrt(Elt x) const;

  /// x + x^p + ... + x^{p^{k-1}}; the result lies in the prime subfield.
  Elt trace(Elt x) const;
  /// x^{p^j} for 0 <= j < k.
  Elt frobenius(Elt x, unsigned j) const;

  /// Smallest (by code) non-square.
  Elt find_nonsquare() const;
  /// (a, b) with a^2 + b^2 == c, a ascending then b ascending.
  std::pair<Elt, Elt> two_square_decompose(Elt c) const;

  /// The generator of the multiplicative group used by the log tables.
  Elt primitive() const;

  std::string format(Elt x) const;
  Elt parse_element(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Trial-division primality test for the small integers used here.
bool is_prime(std::uint64_t n);

/// Decomposes q = p^k with p prime, or returns nullopt.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q);

}  // namespace polarcore

template <>
struct std::hash<polarcore::Elt> {
  std::size_t operator()(polarcore::Elt x) const noexcept { return x.code; }
};
