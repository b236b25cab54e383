#pragma once

// Arithmetic policies that let the solver and codec share one algorithm body
// between the word-parallel fast path and the XOR-counting path.

#include "cauchymds/ring.hpp"
#include "cauchymds/xor_counter.hpp"

namespace cauchymds::detail {

struct FastArith {
  using Element = RingElement;

  Element lift(const RingElement& v) const { return v; }
  Element lift_zero_top(const RingElement& v) const { return v; }
  const RingElement& value(const Element& e) const { return e; }
  Element add(const Element& u, const Element& v) const { return cauchymds::add(u, v); }
  Element mul(const Element& u, BinomialExp e) const { return mul_binomial(u, e); }
  Element div(const Element& s, BinomialExp e) const { return div_binomial(s, e); }
  // Stored information bits plus their parity-check bit at degree p-1.
  Element lift_information(const RingElement& stored) const {
    RingElement s = stored;
    s.set_coeff(s.modulus() - 1, s.weight() % 2 != 0);
    return s;
  }
};

struct CountingArith {
  using Element = Tracked;
  XorCounter* ctr;

  Element lift(const RingElement& v) const { return Tracked::unknown(v); }
  Element lift_zero_top(const RingElement& v) const { return Tracked::zero_top(v); }
  const RingElement& value(const Element& e) const { return e.value; }
  Element add(const Element& u, const Element& v) const { return cauchymds::add(u, v, *ctr); }
  Element mul(const Element& u, BinomialExp e) const { return mul_binomial(u, e, *ctr); }
  Element div(const Element& s, BinomialExp e) const { return div_binomial(s, e, *ctr); }
  // Summing p-1 bits costs p-2 XORs.
  Element lift_information(const RingElement& stored) const {
    const int p = stored.modulus();
    bool acc = false;
    for (int i = 0; i < p - 1; ++i) acc = acc != stored.coeff(i);
    ctr->add(static_cast<std::uint64_t>(p - 2));
    RingElement s = stored;
    s.set_coeff(p - 1, acc);
    return Tracked::unknown(s);
  }
};

}  // namespace cauchymds::detail
