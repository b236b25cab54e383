#include "cauchymds/ring.hpp"

#include <bit>
#include <stdexcept>

namespace cauchymds {

namespace {

using Words = RingElement::Words;
constexpr int kWords = RingElement::kWords;

Words shift_left(const Words& w, int n) {
  Words r{};
  const int ws = n / 64;
  const int bs = n % 64;
  for (int i = kWords - 1; i >= ws; --i) {
    r[i] = w[i - ws] << bs;
    if (bs != 0 && i - ws - 1 >= 0) r[i] |= w[i - ws - 1] >> (64 - bs);
  }
  return r;
}

Words shift_right(const Words& w, int n) {
  Words r{};
  const int ws = n / 64;
  const int bs = n % 64;
  for (int i = 0; i + ws < kWords; ++i) {
    r[i] = w[i + ws] >> bs;
    if (bs != 0 && i + ws + 1 < kWords) r[i] |= w[i + ws + 1] << (64 - bs);
  }
  return r;
}

Words low_mask(int p) {
  Words m{};
  for (int i = 0; i < kWords; ++i) {
    const int lo = i * 64;
    if (p >= lo + 64) {
      m[i] = ~std::uint64_t{0};
    } else if (p > lo) {
      m[i] = (std::uint64_t{1} << (p - lo)) - 1;
    }
  }
  return m;
}

int reduce(int i, int p) {
  const int m = i % p;
  return m < 0 ? m + p : m;
}

void require_same_modulus(const RingElement& u, const RingElement& v) {
  if (u.modulus() != v.modulus()) {
    throw std::invalid_argument("ring elements have different moduli");
  }
}

void require_binomial(BinomialExp e, int p) {
  if (!e.valid_for(p)) {
    throw std::invalid_argument("binomial exponents out of range for modulus");
  }
}

void require_even_weight(const RingElement& s) {
  if (!s.is_even_weight()) {
    throw std::domain_error("binomial division requires an even-weight dividend");
  }
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RingElement::RingElement(int p) : p_(p) {
  if (p < 3 || p > kMaxModulus) {
    throw std::invalid_argument("modulus must lie in [3, " + std::to_string(kMaxModulus) + "]");
  }
}

RingElement RingElement::from_exponents(int p, std::initializer_list<int> exps) {
  RingElement r(p);
  for (int e : exps) r.flip(reduce(e, p));
  return r;
}

RingElement RingElement::from_bits(int p, std::span<const std::uint8_t> bits) {
  RingElement r(p);
  if (static_cast<int>(bits.size()) > p) {
    throw std::invalid_argument("more coefficients than the modulus allows");
  }
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0) r.flip(static_cast<int>(i));
  }
  return r;
}

RingElement RingElement::monomial(int p, int i) {
  RingElement r(p);
  r.flip(reduce(i, p));
  return r;
}

RingElement RingElement::all_ones(int p) {
  RingElement r(p);
  r.words_ = low_mask(p);
  return r;
}

void RingElement::set_coeff(int i, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (v) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

int RingElement::weight() const {
  int w = 0;
  for (auto word : words_) w += std::popcount(word);
  return w;
}

bool RingElement::is_zero() const {
  for (auto word : words_) {
    if (word != 0) return false;
  }
  return true;
}

RingElement& RingElement::operator^=(const RingElement& other) {
  require_same_modulus(*this, other);
  for (int i = 0; i < kWords; ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::string RingElement::to_string() const {
  std::string out;
  for (int i = 0; i < p_; ++i) {
    if (!coeff(i)) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

BinomialExp BinomialExp::between(int u, int v) {
  if (u == v) throw std::invalid_argument("binomial needs two distinct exponents");
  if (u > v) std::swap(u, v);
  return BinomialExp{u, v - u};
}

RingConstants constants(int p) {
  RingConstants c{RingElement::all_ones(p), RingElement::all_ones(p)};
  c.identity.flip(0);
  return c;
}

RingElement add(const RingElement& u, const RingElement& v) {
  RingElement r = u;
  r ^= v;
  return r;
}

RingElement mul_monomial(const RingElement& u, int i) {
  const int p = u.modulus();
  const int s = reduce(i, p);
  if (s == 0) return u;
  RingElement r(p);
  const Words hi = shift_left(u.words(), s);
  const Words lo = shift_right(u.words(), p - s);
  const Words mask = low_mask(p);
  for (int w = 0; w < kWords; ++w) r.mutable_words()[w] = (hi[w] | lo[w]) & mask[w];
  return r;
}

RingElement mul_binomial(const RingElement& u, BinomialExp e) {
  require_binomial(e, u.modulus());
  RingElement r = mul_monomial(u, e.low());
  r ^= mul_monomial(u, e.high());
  return r;
}

// Word-parallel division: multiply by the closed-form inverse
// x^{p-t}(1 + x^{2b} + x^{4b} + ... + x^{(p-1)b}), then pick the member of
// {c, c + h} whose top coefficient is zero. The geometric sum is built by
// doubling, so only O(log p) rotations are needed.
RingElement div_binomial(const RingElement& s, BinomialExp e) {
  const int p = s.modulus();
  require_binomial(e, p);
  require_even_weight(s);

  const int terms = (p + 1) / 2;
  const int step = 2 * e.b;
  RingElement acc(p);
  RingElement block = s;  // sum_{j < block_len} x^{step*j} s
  int block_len = 1;
  int offset = 0;
  for (int n = terms; n != 0; n >>= 1) {
    if (n & 1) {
      acc ^= mul_monomial(block, step * offset);
      offset += block_len;
    }
    if (n >> 1) {
      block ^= mul_monomial(block, step * block_len);
      block_len *= 2;
    }
  }
  RingElement c = mul_monomial(acc, p - e.t);
  if (c.coeff(p - 1)) c ^= RingElement::all_ones(p);
  return c;
}

RingElement div_binomial_canonical(const RingElement& s, BinomialExp e) {
  RingElement c = div_binomial(s, e);
  if (!c.is_even_weight()) c ^= RingElement::all_ones(s.modulus());
  return c;
}

Tracked Tracked::unknown(const RingElement& v) {
  return Tracked{v, RingElement::all_ones(v.modulus())};
}

Tracked Tracked::zero_top(const RingElement& v) {
  const int p = v.modulus();
  if (v.coeff(p - 1)) throw std::invalid_argument("top coefficient is not zero");
  Tracked t = unknown(v);
  t.support.flip(p - 1);
  return t;
}

Tracked add(const Tracked& u, const Tracked& v, XorCounter& ctr) {
  require_same_modulus(u.value, v.value);
  const int p = u.value.modulus();
  Tracked r{RingElement(p), RingElement(p)};
  std::uint64_t xors = 0;
  for (int i = 0; i < p; ++i) {
    const bool su = u.support.coeff(i);
    const bool sv = v.support.coeff(i);
    if (su && sv) ++xors;
    r.value.set_coeff(i, u.value.coeff(i) != v.value.coeff(i));
    r.support.set_coeff(i, su || sv);
  }
  ctr.add(xors);
  return r;
}

Tracked mul_monomial(const Tracked& u, int i) {
  return Tracked{mul_monomial(u.value, i), mul_monomial(u.support, i)};
}

Tracked mul_binomial(const Tracked& u, BinomialExp e, XorCounter& ctr) {
  const int p = u.value.modulus();
  require_binomial(e, p);
  Tracked r{RingElement(p), RingElement(p)};
  std::uint64_t xors = 0;
  // out_i = u_{i-t} + u_{i-t-b}
  for (int i = 0; i < p; ++i) {
    const int j0 = reduce(i - e.low(), p);
    const int j1 = reduce(i - e.high(), p);
    const bool s0 = u.support.coeff(j0);
    const bool s1 = u.support.coeff(j1);
    if (s0 && s1) ++xors;
    r.value.set_coeff(i, u.value.coeff(j0) != u.value.coeff(j1));
    r.support.set_coeff(i, s0 || s1);
  }
  ctr.add(xors);
  return r;
}

// Recurrence from the coefficient relations s_{t+j} = c_j + c_{j-b}:
// fix c_{p-1} = 0, read c_{p-b-1} and c_{b-1} directly, then walk the orbit
// of -b starting at p-b-1 with one XOR per step.
Tracked div_binomial(const Tracked& s, BinomialExp e, XorCounter& ctr) {
  const int p = s.value.modulus();
  require_binomial(e, p);
  require_even_weight(s.value);
  const int t = e.t;
  const int b = e.b;

  RingElement c(p);
  c.set_coeff(p - b - 1, s.value.coeff(reduce(t - 1, p)));
  c.set_coeff(b - 1, s.value.coeff(reduce(t + b - 1, p)));
  std::uint64_t xors = 0;
  for (int i = 2; i <= p - 2; ++i) {
    const int dst = reduce(p - i * b - 1, p);
    const int src = reduce(p - (i - 1) * b - 1, p);
    const bool sv = s.value.coeff(reduce(t - (i - 1) * b - 1, p));
    c.set_coeff(dst, sv != c.coeff(src));
    ++xors;
  }
  ctr.add(xors);

  Tracked r{c, RingElement::all_ones(p)};
  r.support.flip(p - 1);
  return r;
}

RingElement div_binomial(const RingElement& s, BinomialExp e, XorCounter& ctr) {
  return div_binomial(Tracked::unknown(s), e, ctr).value;
}

RingElement mul_binomial(const RingElement& u, BinomialExp e, XorCounter& ctr) {
  return mul_binomial(Tracked::unknown(u), e, ctr).value;
}

}  // namespace cauchymds
