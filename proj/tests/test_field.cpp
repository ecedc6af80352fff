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

#include <set>

#include "polarcore/error.hpp"
#include "polarcore/field.hpp"

using namespace polarcore;

namespace {

std::vector<Field> small_fields() {
  return {Field::of_order(3), Field::of_order(5), Field::of_order(7), Field::of_order(9),
          Field::of_order(11), Field::of_order(25), Field::of_order(27), Field::of_order(81)};
}

Elt naive_pow(const Field& F, Elt x, std::uint64_t e) {
  Elt r = F.one();
  for (std::uint64_t i = 0; i < e; ++i) r = F.mul(r, x);
  return r;
}

}  // namespace

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Field::create(2, 1), Error);
  try {
    Field::create(2, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EvenCharacteristic);
  }
  try {
    Field::create(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonPrime);
  }
  try {
    Field::create(3, 2, std::vector<std::uint32_t>{2, 0, 1});  // t^2 - 1 = (t-1)(t+1)
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
  }
}

TEST_CASE("GF(9) with modulus t^2+1") {
  const Field F = Field::create(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  CHECK(F.q() == 9);
  const Elt t = F.from_coeffs(std::vector<std::uint32_t>{0, 1});
  CHECK(F.mul(t, t) == F.from_int(2));
  CHECK(F.trace(t) == F.zero());
  CHECK(F.trace(F.one()) == F.from_int(2));
  CHECK(F.frobenius(t, 1) == F.mul(F.from_int(2), t));
  CHECK(F.format(F.add(t, F.one())) == "t+1");
  CHECK(F.parse_element("t+1") == F.add(t, F.one()));
}

TEST_CASE("default modulus is the smallest irreducible monic polynomial") {
  // For k <= 3 a polynomial is irreducible iff it has no root in GF(p).
  for (auto [p, k] : {std::pair{3U, 2U}, std::pair{3U, 3U}, std::pair{5U, 2U}, std::pair{7U, 2U}, std::pair{11U, 3U}}) {
    const Field F = Field::create(p, k);
    const auto& m = F.modulus();
    REQUIRE(m.size() == k + 1);
    CHECK(m.back() == 1);
    auto has_root = [&](const std::vector<std::uint32_t>& c) {
      for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = (v * x + c[i]) % p;
        if (v == 0) return true;
      }
      return false;
    };
    CHECK_FALSE(has_root(m));
    // Every monic candidate with a smaller coefficient code has a root.
    std::uint64_t code = 0;
    for (std::size_t i = k; i-- > 0;) code = code * p + m[i];
    for (std::uint64_t c = 0; c < code; ++c) {
      std::vector<std::uint32_t> cand(k + 1, 0);
      std::uint64_t r = c;
      for (std::size_t i = 0; i < k; ++i) {
        cand[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      cand[k] = 1;
      CHECK(has_root(cand));
    }
  }
}

TEST_CASE("field axioms by enumeration") {
  for (const Field& F : {Field::of_order(3), Field::of_order(9), Field::of_order(25), Field::of_order(27)}) {
    const std::uint32_t q = F.q();
    for (std::uint32_t a = 0; a < q; ++a) {
      const Elt x = F.element(a);
      CHECK(F.add(x, F.neg(x)) == F.zero());
      if (a != 0) CHECK(F.mul(x, F.inv(x)) == F.one());
      for (std::uint32_t b = 0; b < q; ++b) {
        const Elt y = F.element(b);
        CHECK(F.add(x, y) == F.add(y, x));
        CHECK(F.mul(x, y) == F.mul(y, x));
        CHECK(F.sub(F.add(x, y), y) == x);
        const Elt z = F.element((a * 7 + b * 3 + 1) % q);
        CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
        CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
      }
    }
  }
}

TEST_CASE("small arithmetic values") {
  const Field F3 = Field::of_order(3), F7 = Field::of_order(7);
  CHECK(F3.mul(F3.from_int(2), F3.from_int(2)) == F3.one());
  CHECK(F7.inv(F7.from_int(3)) == F7.from_int(5));
  CHECK_THROWS_AS(F7.inv(F7.zero()), Error);
  CHECK(F7.pow(F7.from_int(3), 6) == F7.one());
}

TEST_CASE("pow agrees with repeated multiplication") {
  const Field F = Field::of_order(27);
  for (std::uint32_t a = 0; a < F.q(); ++a) {
    for (std::uint64_t e : {0, 1, 2, 5, 13, 26, 40}) CHECK(F.pow(F.element(a), e) == naive_pow(F, F.element(a), e));
  }
}

TEST_CASE("quadratic character") {
  const Field F7 = Field::of_order(7);
  CHECK(F7.eta(F7.from_int(3)) == -1);
  CHECK(F7.eta(F7.zero()) == 0);
  CHECK(Field::of_order(3).eta(Field::of_order(3).from_int(2)) == -1);
  for (const Field& F : small_fields()) {
    std::set<std::uint32_t> squares;
    for (std::uint32_t a = 1; a < F.q(); ++a) squares.insert(F.mul(F.element(a), F.element(a)).code);
    CHECK(squares.size() == (F.q() - 1) / 2);
    for (std::uint32_t a = 1; a < F.q(); ++a) {
      const Elt x = F.element(a);
      CHECK((F.eta(x) == 1) == squares.contains(a));
      const auto r = F.sqrt(x);
      CHECK(r.has_value() == squares.contains(a));
      if (r) CHECK(F.mul(*r, *r) == x);
      for (std::uint32_t b = 1; b < F.q(); b += 3) {
        CHECK(F.eta(F.mul(x, F.element(b))) == F.eta(x) * F.eta(F.element(b)));
      }
    }
  }
}

TEST_CASE("smallest non-square") {
  CHECK(Field::of_order(3).find_nonsquare() == Field::of_order(3).from_int(2));
  CHECK(Field::of_order(7).find_nonsquare() == Field::of_order(7).from_int(3));
  CHECK(Field::of_order(11).find_nonsquare() == Field::of_order(11).from_int(2));
  for (const Field& F : small_fields()) {
    const Elt d = F.find_nonsquare();
    CHECK(F.eta(d) == -1);
    for (std::uint32_t a = 0; a < d.code; ++a) CHECK(F.eta(F.element(a)) != -1);
  }
}

TEST_CASE("trace is additive, onto, and vanishes exactly on y^p - y") {
  for (const Field& F : small_fields()) {
    std::set<std::uint32_t> image, artin_schreier;
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      const Elt y = F.element(a);
      artin_schreier.insert(F.sub(F.pow(y, F.p()), y).code);
    }
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      const Elt x = F.element(a);
      const Elt tr = F.trace(x);
      CHECK(tr.code < F.p());
      image.insert(tr.code);
      CHECK((tr == F.zero()) == artin_schreier.contains(a));
      const Elt y = F.element((a * 5 + 2) % F.q());
      CHECK(F.trace(F.add(x, y)) == F.add(tr, F.trace(y)));
    }
    CHECK(image.size() == F.p());
  }
}

TEST_CASE("Frobenius") {
  for (const Field& F : {Field::of_order(9), Field::of_order(27), Field::of_order(125)}) {
    for (std::uint32_t a = 0; a < F.q(); ++a) {
      const Elt x = F.element(a);
      CHECK(F.frobenius(x, 0) == x);
      Elt y = x;
      for (unsigned j = 0; j < F.k(); ++j) y = F.frobenius(y, 1);
      CHECK(y == x);
      CHECK((F.frobenius(x, 1) == x) == (a < F.p()));
      const Elt z = F.element((a * 11 + 4) % F.q());
      CHECK(F.frobenius(F.mul(x, z), 1) == F.mul(F.frobenius(x, 1), F.frobenius(z, 1)));
      CHECK(F.frobenius(F.add(x, z), 1) == F.add(F.frobenius(x, 1), F.frobenius(z, 1)));
    }
  }
}

TEST_CASE("two-square decomposition") {
  const Field F3 = Field::of_order(3), F7 = Field::of_order(7);
  CHECK(F3.two_square_decompose(F3.from_int(2)) == std::pair{F3.one(), F3.one()});
  CHECK(F7.two_square_decompose(F7.zero()) == std::pair{F7.zero(), F7.zero()});
  CHECK(F7.two_square_decompose(F7.from_int(6)) == std::pair{F7.from_int(2), F7.from_int(3)});
  for (const Field& F : small_fields()) {
    for (std::uint32_t c = 0; c < F.q(); ++c) {
      const auto [a, b] = F.two_square_decompose(F.element(c));
      CHECK(F.add(F.mul(a, a), F.mul(b, b)) == F.element(c));
    }
  }
}

TEST_CASE("spec strings round-trip") {
  for (const Field& F : small_fields()) {
    const Field G = Field::parse(F.spec());
    CHECK(G == F);
    for (std::uint32_t a = 0; a < F.q(); ++a) CHECK(F.parse_element(F.format(F.element(a))) == F.element(a));
  }
  CHECK(Field::parse("3^2/1,0,1").q() == 9);
  CHECK_THROWS_AS(Field::parse("3^x"), Error);
}
