#include <doctest.h>

#include "cauchymds/ring.hpp"
#include "support.hpp"

using namespace cauchymds;
using cauchymds::testing::binomial_poly;
using cauchymds::testing::random_binomial;
using cauchymds::testing::random_element;
using cauchymds::testing::random_even;
using cauchymds::testing::ring_mul;

namespace {

RingElement P5(std::initializer_list<int> exps) { return RingElement::from_exponents(5, exps); }

// Closed-form inverse of x^t + x^{t+b}: x^{p-t}(1 + x^{2b} + ... + x^{(p-1)b}),
// shifted into C_p by +h when needed.
RingElement closed_form_inverse(int p, BinomialExp e) {
  RingElement sum(p);
  for (int j = 0; j <= p - 1; j += 2) sum.flip((j * e.b) % p);
  RingElement inv = mul_monomial(sum, p - e.t);
  if (!inv.is_even_weight()) inv ^= RingElement::all_ones(p);
  return inv;
}

bool padding_clear(const RingElement& u) {
  for (int i = u.modulus(); i < RingElement::kWords * 64; ++i) {
    if ((u.words()[i / 64] >> (i % 64)) & 1U) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("add") {
  CHECK(add(P5({0, 1}), P5({1, 3})) == P5({0, 3}));
  const RingElement u = random_element(7);
  CHECK(add(u, u).is_zero());
  CHECK(add(u, RingElement(7)) == u);
  CHECK_THROWS_AS(add(RingElement(5), RingElement(7)), std::invalid_argument);
  for (int trial = 0; trial < 100; ++trial) {
    const RingElement a = random_element(11), b = random_element(11);
    CHECK(add(a, b).weight() % 2 == (a.weight() + b.weight()) % 2);
  }
}

TEST_CASE("mul_monomial") {
  CHECK(mul_monomial(P5({0, 1}), 1) == P5({1, 2}));
  const RingElement u = random_element(13);
  CHECK(mul_monomial(u, 0) == u);
  CHECK(mul_monomial(P5({2}), 4) == P5({1}));
  CHECK(mul_monomial(u, 13 + 3) == mul_monomial(u, 3));
  XorCounter ctr;
  CHECK(mul_monomial(Tracked::unknown(u), 5).value == mul_monomial(u, 5));
  CHECK(ctr.count() == 0);
}

TEST_CASE("mul_binomial") {
  CHECK(mul_binomial(P5({0, 2}), BinomialExp{0, 1}) == P5({0, 1, 2, 3}));
  CHECK(mul_binomial(P5({3}), BinomialExp{2, 1}) == P5({0, 1}));
  CHECK(mul_binomial(RingElement(5), BinomialExp{1, 3}).is_zero());

  SUBCASE("counting charges p, or p-2 with a known-zero top coefficient") {
    XorCounter full;
    mul_binomial(Tracked::unknown(random_element(11)), BinomialExp{2, 3}, full);
    CHECK(full.count() == 11);
    RingElement v = random_element(11);
    v.set_coeff(10, false);
    XorCounter top;
    mul_binomial(Tracked::zero_top(v), BinomialExp{2, 3}, top);
    CHECK(top.count() == 9);
  }
}

TEST_CASE("div_binomial examples") {
  CHECK(div_binomial(P5({0, 1, 2, 3}), BinomialExp{0, 1}) == P5({0, 2}));
  CHECK(div_binomial(P5({0, 1}), BinomialExp{2, 1}) == P5({3}));
  CHECK(div_binomial(RingElement(5), BinomialExp{0, 4}).is_zero());
  CHECK(div_binomial(P5({0, 1}), BinomialExp{0, 2}) == P5({1, 3}));
  // x + x^3 times 1 + x^2 is 1 + x.
  CHECK(ring_mul(P5({1, 3}), P5({0, 2})) == P5({0, 1}));

  CHECK_THROWS_AS(div_binomial(P5({0}), BinomialExp{0, 1}), std::domain_error);
  XorCounter ctr;
  CHECK_THROWS_AS(div_binomial(P5({0, 1, 2}), BinomialExp{0, 1}, ctr), std::domain_error);
  CHECK_THROWS_AS(div_binomial(P5({0, 1}), BinomialExp{2, 3}), std::invalid_argument);
}

TEST_CASE("div_binomial_canonical") {
  CHECK(div_binomial_canonical(P5({0, 1, 2, 3}), BinomialExp{0, 1}) == P5({0, 2}));
  CHECK(div_binomial_canonical(P5({0, 1}), BinomialExp{0, 2}) == P5({1, 3}));
  CHECK(div_binomial_canonical(RingElement(5), BinomialExp{1, 1}).is_zero());
  // x^3 has odd weight; the canonical quotient is x^3 + h.
  CHECK(div_binomial_canonical(P5({0, 1}), BinomialExp{2, 1}) == P5({0, 1, 2, 4}));
}

TEST_CASE("constants") {
  const auto c = constants(5);
  CHECK(c.check == P5({0, 1, 2, 3, 4}));
  CHECK(c.identity == P5({1, 2, 3, 4}));
  CHECK(add(c.identity, c.check) == P5({0}));
}

TEST_CASE("construction and bit layout") {
  CHECK_THROWS_AS(RingElement(2), std::invalid_argument);
  CHECK_THROWS_AS(RingElement(kMaxModulus + 1), std::invalid_argument);
  CHECK(P5({0, 1, 3}).to_string() == "1 + x + x^3");
  CHECK(RingElement(5).to_string() == "0");
  const std::uint8_t bits[] = {1, 0, 1};
  CHECK(RingElement::from_bits(5, bits) == P5({0, 2}));
  CHECK(RingElement::from_exponents(5, {7}) == P5({2}));

  for (int p : {5, 67, 131, 251}) {
    for (int trial = 0; trial < 50; ++trial) {
      const RingElement u = random_even(p);
      const auto e = random_binomial(p);
      CHECK(padding_clear(mul_monomial(u, trial)));
      CHECK(padding_clear(mul_binomial(u, e)));
      CHECK(padding_clear(div_binomial(u, e)));
      CHECK(padding_clear(div_binomial_canonical(u, e)));
    }
  }
}

TEST_CASE("ring identities") {
  for (int p : {3, 5, 7, 11, 13, 67, 251}) {
    CAPTURE(p);
    const auto c = constants(p);
    CHECK(ring_mul(c.check, c.check) == c.check);
    for (int trial = 0; trial < 50; ++trial) {
      const RingElement s = random_even(p);
      const RingElement t = random_even(p);
      CHECK(ring_mul(s, c.check).is_zero());
      CHECK(ring_mul(s, c.identity) == s);
      CHECK(add(s, t).is_even_weight());
      CHECK(mul_binomial(s, random_binomial(p)).is_even_weight());
      CHECK(mul_binomial(random_element(p), random_binomial(p)).is_even_weight());
    }
  }
}

TEST_CASE("binomial inverses for every valid (t, b)") {
  for (int p : {3, 5, 7, 11, 13}) {
    const auto e_x = constants(p).identity;
    for (int t = 0; t < p; ++t) {
      for (int b = 1; t + b <= p - 1; ++b) {
        CAPTURE(p);
        CAPTURE(t);
        CAPTURE(b);
        const BinomialExp e{t, b};
        const RingElement inv = div_binomial_canonical(e_x, e);
        CHECK(inv.is_even_weight());
        CHECK(mul_binomial(inv, e) == e_x);
        CHECK(inv == closed_form_inverse(p, e));
      }
    }
  }
}

TEST_CASE("inverse identities, checked by clearing denominators") {
  for (int trial = 0; trial < 500; ++trial) {
    const int p = cauchymds::testing::kTestPrimes[trial % 4];
    const auto e_x = constants(p).identity;
    const BinomialExp A = random_binomial(p), B = random_binomial(p);
    const RingElement a = binomial_poly(p, A), b = binomial_poly(p, B);
    const RingElement inv_a = div_binomial_canonical(e_x, A);
    const RingElement inv_b = div_binomial_canonical(e_x, B);

    // 1/A * 1/B = 1/(AB)
    const RingElement prod_inv = ring_mul(inv_a, inv_b);
    CHECK(ring_mul(prod_inv, ring_mul(a, b)) == e_x);
    CHECK(div_binomial_canonical(div_binomial_canonical(e_x, A), B) == prod_inv);

    // s1/A + s2/A = (s1+s2)/A
    const RingElement s1 = random_even(p), s2 = random_even(p);
    const RingElement lhs = add(div_binomial_canonical(s1, A), div_binomial_canonical(s2, A));
    CHECK(lhs == div_binomial_canonical(add(s1, s2), A));
    CHECK(mul_binomial(lhs, A) == add(s1, s2));

    // 1/A + 1/B = (A+B)/(AB)
    const RingElement sum_inv = add(inv_a, inv_b);
    CHECK(ring_mul(sum_inv, ring_mul(a, b)) == ring_mul(add(a, b), e_x));
    CHECK(sum_inv == ring_mul(add(a, b), prod_inv));
  }
}

TEST_CASE("division round trip and fast/counting agreement") {
  for (int trial = 0; trial < 1000; ++trial) {
    const int p = cauchymds::testing::kTestPrimes[trial % 4];
    const RingElement s = random_even(p);
    const BinomialExp e = random_binomial(p);
    const RingElement c = div_binomial(s, e);
    CHECK_FALSE(c.coeff(p - 1));
    CHECK(mul_binomial(c, e) == s);

    XorCounter ctr;
    const Tracked tc = div_binomial(Tracked::unknown(s), e, ctr);
    CHECK(tc.value == c);
    CHECK(ctr.count() == static_cast<std::uint64_t>(p - 3));
    CHECK_FALSE(tc.support.coeff(p - 1));

    const RingElement canon = div_binomial_canonical(s, e);
    CHECK((canon == c || canon == add(c, RingElement::all_ones(p))));

    const RingElement u = random_element(p), v = random_element(p);
    XorCounter other;
    CHECK(mul_binomial(Tracked::unknown(u), e, other).value == mul_binomial(u, e));
    CHECK(add(Tracked::unknown(u), Tracked::unknown(v), other).value == add(u, v));
  }
}

TEST_CASE("large moduli agree across both paths") {
  for (int p : {61, 67, 127, 131, 251}) {
    for (int trial = 0; trial < 40; ++trial) {
      const RingElement s = random_even(p);
      const BinomialExp e = random_binomial(p);
      XorCounter ctr;
      CHECK(div_binomial(s, e, ctr) == div_binomial(s, e));
      CHECK(mul_binomial(div_binomial(s, e), e) == s);
    }
  }
}

TEST_CASE("counting add skips known-zero positions") {
  RingElement u = random_element(7), v = random_element(7);
  u.set_coeff(6, false);
  v.set_coeff(6, false);
  XorCounter ctr;
  const Tracked r = add(Tracked::zero_top(u), Tracked::zero_top(v), ctr);
  CHECK(ctr.count() == 6);
  CHECK_FALSE(r.support.coeff(6));
  XorCounter mixed;
  add(Tracked::zero_top(u), Tracked::unknown(v), mixed);
  CHECK(mixed.count() == 6);
  CHECK_THROWS_AS(Tracked::zero_top(RingElement::all_ones(7)), std::invalid_argument);
}

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(251));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(249));
}
