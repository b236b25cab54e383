#include <doctest.h>

#include "cauchymds/gf2_poly.hpp"
#include "cauchymds/oracle.hpp"
#include "support.hpp"

using namespace cauchymds;
using cauchymds::testing::erase;
using cauchymds::testing::random_even;
using cauchymds::testing::random_info;

TEST_CASE("gf2 polynomial arithmetic") {
  const Gf2Poly a = Gf2Poly::from_exponents({0, 1});  // 1 + x
  CHECK((a * a) == Gf2Poly::from_exponents({0, 2}));
  CHECK(a.degree() == 1);
  CHECK(Gf2Poly().is_zero());
  const Gf2Poly big = Gf2Poly::from_exponents({0, 70, 130});
  const auto dm = divmod(big, a);
  CHECK(dm.quotient * a + dm.remainder == big);
  CHECK(dm.remainder.degree() < 1);
  const Gf2Poly h5 = oracle::check_polynomial(5);
  CHECK(h5 == Gf2Poly::from_exponents({0, 1, 2, 3, 4}));
  // 1 + x^5 = (1 + x) h5, so gcd(1 + x^5, h5) = h5.
  CHECK(gcd(Gf2Poly::from_exponents({0, 5}), h5) == h5);
  const auto g = xgcd(Gf2Poly::from_exponents({0, 1, 3}), h5);
  CHECK(g.g == Gf2Poly::monomial(0));
  CHECK(g.u * Gf2Poly::from_exponents({0, 1, 3}) + g.v * h5 == g.g);
}

TEST_CASE("theta and phi") {
  const auto f = RingElement::from_exponents(5, {0, 4});
  const auto t = oracle::theta(f);
  CHECK(t.poly() == Gf2Poly::from_exponents({1, 2, 3}));
  CHECK(oracle::phi(t) == f);
  CHECK(oracle::theta(RingElement(5)).is_zero());
  CHECK(oracle::phi(oracle::QuotientElement(5, Gf2Poly())).is_zero());
  CHECK(oracle::phi(oracle::QuotientElement(5, Gf2Poly::from_exponents({1, 2, 3}))) == f);
}

TEST_CASE("phi after theta is the identity on the even-weight subring") {
  // Exhaustive for p = 5.
  for (unsigned m = 0; m < 32; ++m) {
    RingElement u(5);
    for (int i = 0; i < 5; ++i) u.set_coeff(i, (m >> i) & 1U);
    if (!u.is_even_weight()) continue;
    CHECK(oracle::phi(oracle::theta(u)) == u);
  }
  for (int p : {7, 11, 13, 67}) {
    for (int trial = 0; trial < 200; ++trial) {
      const RingElement u = random_even(p);
      CHECK(oracle::phi(oracle::theta(u)) == u);
    }
  }
}

TEST_CASE("theta is a ring homomorphism") {
  for (int trial = 0; trial < 200; ++trial) {
    const int p = cauchymds::testing::kTestPrimes[trial % 4];
    const RingElement u = cauchymds::testing::random_element(p);
    const RingElement v = cauchymds::testing::random_element(p);
    CHECK(oracle::theta(add(u, v)) == oracle::theta(u) + oracle::theta(v));
    CHECK(oracle::theta(cauchymds::testing::ring_mul(u, v)) ==
          oracle::theta(u) * oracle::theta(v));
  }
}

TEST_CASE("quotient inverses") {
  const oracle::QuotientElement one(5, Gf2Poly::monomial(0));
  for (int t = 0; t < 5; ++t) {
    for (int s = t + 1; s < 5; ++s) {
      const oracle::QuotientElement b(5, Gf2Poly::from_exponents({t, s}));
      CHECK(b.is_unit());
      CHECK(b * b.inverse() == one);
    }
  }
  // p = 7: h = (1 + x + x^3)(1 + x^2 + x^3), so 1 + x + x^3 is a zero divisor.
  const oracle::QuotientElement z(7, Gf2Poly::from_exponents({0, 1, 3}));
  CHECK_FALSE(z.is_unit());
  CHECK_THROWS_AS(z.inverse(), std::domain_error);
}

TEST_CASE("single-entry determinant") {
  const auto sys = CauchySystem::make(5, {0}, {2});
  const auto binom = oracle::theta(RingElement::from_exponents(5, {0, 2}));
  CHECK(oracle::det_bruteforce(sys) == binom.inverse());
  CHECK(oracle::theta(evaluate(determinant(sys), 5)) == binom.inverse());
}

TEST_CASE("worked 2x2 determinant") {
  const auto sys = CauchySystem::make(5, {0, 1}, {2, 3});
  const auto det = oracle::det_bruteforce(sys);
  CHECK(det.is_unit());
  CHECK(oracle::theta(evaluate(determinant(sys), 5)) == det);
  CHECK_THROWS_AS(
      oracle::det_bruteforce(CauchySystem::make(13, {0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11})),
      std::invalid_argument);
}

TEST_CASE("expanded generator structure") {
  const auto params = CodeParams::make(7, 1, 3);
  const auto g = oracle::expanded_generator(params);
  CHECK(g.rows() == 6);
  CHECK(g.cols() == 24);
  for (int u = 0; u < 6; ++u) {
    for (int c = 0; c < 6; ++c) CHECK(g.get(u, c) == (u == c));
  }
}

TEST_CASE("gf2 decoder") {
  SUBCASE("worked example") {
    const auto params = CodeParams::make(5, 2, 2);
    const std::vector<Column> info{cauchymds::testing::column_from_exponents(5, {0, 1}),
                                   cauchymds::testing::column_from_exponents(5, {1, 3})};
    const Codeword cw = encode(params, info);
    const auto got =
        oracle::decode_gf2(params, erase(cw, {true, true, false, false}), ErasurePattern{{0, 1}, {}});
    CHECK(got == info);
  }
  SUBCASE("no erasures") {
    const auto params = CodeParams::make(7, 3, 2);
    const auto info = random_info(params);
    const Codeword cw = encode(params, info);
    CHECK(oracle::decode_gf2(params, erase(cw, std::vector<bool>(5, false)), ErasurePattern{}) ==
          info);
  }
  SUBCASE("agrees with the codec") {
    const auto params = CodeParams::make(11, 3, 4);
    for (int trial = 0; trial < 50; ++trial) {
      const Codeword cw = encode(params, random_info(params));
      std::vector<bool> lost(7, false);
      ErasurePattern pat;
      for (int c = 0; c < 7 && pat.size() < 4; ++c) {
        if (cauchymds::testing::uniform(0, 2) != 0) continue;
        lost[c] = true;
        if (c < 3) pat.lost_info.push_back(c); else pat.lost_parity.push_back(c - 3);
      }
      const auto avail = erase(cw, lost);
      const auto got = oracle::decode_gf2(params, avail, pat);
      const Codeword full = decode(params, avail, pat);
      for (int i = 0; i < 3; ++i) CHECK(got[i] == full.columns[i]);
    }
  }
}
