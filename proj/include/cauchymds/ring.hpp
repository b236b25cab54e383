#pragma once

// Arithmetic in R_p = F2[x]/(1+x^p) and its even-weight subring C_p.
//
// Every element is a p-bit coefficient vector: the coefficient of x^i lives
// at bit i, packed little-endian into 64-bit words. Bits at positions >= p
// are always zero. Multiplication by x is a cyclic right shift, so the only
// operations the codec ever needs (monomial and binomial multiplication,
// binomial division) reduce to rotations and XORs.
//
// Two execution profiles are provided:
//   * the fast path (free functions taking RingElement) works on whole words;
//   * the counting path (functions taking Tracked + XorCounter&) is
//     bit-serial and charges one XOR per output bit whose two operands may
//     both be nonzero. Known-zero positions are threaded through as a
//     support mask.
// Both profiles produce identical coefficient vectors.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

#include "cauchymds/xor_counter.hpp"

namespace cauchymds {

// Largest modulus representable in the inline word storage.
inline constexpr int kMaxModulus = 251;

bool is_prime(int n);

class RingElement {
 public:
  static constexpr int kWords = 4;
  using Words = std::array<std::uint64_t, kWords>;

  RingElement() = default;
  // The zero polynomial of R_p. Requires 3 <= p <= kMaxModulus.
  explicit RingElement(int p);

  static RingElement from_exponents(int p, std::initializer_list<int> exps);
  // bits[i] is the coefficient of x^i; bits.size() <= p.
  static RingElement from_bits(int p, std::span<const std::uint8_t> bits);
  static RingElement monomial(int p, int i);
  // All p bits set: h(x) = 1 + x + ... + x^{p-1}.
  static RingElement all_ones(int p);

  int modulus() const { return p_; }
  bool coeff(int i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set_coeff(int i, bool v);
  void flip(int i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  int weight() const;
  bool is_even_weight() const { return weight() % 2 == 0; }
  bool is_zero() const;

  const Words& words() const { return words_; }
  Words& mutable_words() { return words_; }

  RingElement& operator^=(const RingElement& other);
  friend bool operator==(const RingElement&, const RingElement&) = default;

  // "1 + x + x^3"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  Words words_{};
  int p_ = 0;
};

// The binomial x^t + x^{t+b}, with b >= 1 and t + b <= p - 1.
struct BinomialExp {
  int t = 0;
  int b = 1;

  // x^u + x^v for distinct u, v in [0, p).
  static BinomialExp between(int u, int v);

  int low() const { return t; }
  int high() const { return t + b; }
  bool valid_for(int p) const { return t >= 0 && b >= 1 && t + b <= p - 1; }
  friend bool operator==(const BinomialExp&, const BinomialExp&) = default;
};

struct RingConstants {
  RingElement identity;  // e(x) = x + x^2 + ... + x^{p-1}, identity of C_p
  RingElement check;     // h(x) = 1 + x + ... + x^{p-1}
};

RingConstants constants(int p);

// --- fast path ---

RingElement add(const RingElement& u, const RingElement& v);
// x^i * u; i is reduced mod p.
RingElement mul_monomial(const RingElement& u, int i);
RingElement mul_binomial(const RingElement& u, BinomialExp e);
// The quotient c with c_{p-1} = 0 and c * (x^t + x^{t+b}) = s. The input must
// have even weight. The result may have odd weight.
RingElement div_binomial(const RingElement& s, BinomialExp e);
// The unique even-weight quotient.
RingElement div_binomial_canonical(const RingElement& s, BinomialExp e);

// --- counting path ---

// A ring element with the set of coefficient positions that may be nonzero.
// Positions outside `support` are structurally zero (independent of data).
struct Tracked {
  RingElement value;
  RingElement support;

  // Every coefficient may be nonzero.
  static Tracked unknown(const RingElement& v);
  // Coefficient p-1 is known to be zero; v must agree.
  static Tracked zero_top(const RingElement& v);
};

Tracked add(const Tracked& u, const Tracked& v, XorCounter& ctr);
Tracked mul_monomial(const Tracked& u, int i);
Tracked mul_binomial(const Tracked& u, BinomialExp e, XorCounter& ctr);
// Bit-serial simplified binomial division. Always charges p - 3 XORs.
Tracked div_binomial(const Tracked& s, BinomialExp e, XorCounter& ctr);
// Untracked convenience wrapper: the input is treated as fully unknown.
RingElement div_binomial(const RingElement& s, BinomialExp e, XorCounter& ctr);
RingElement mul_binomial(const RingElement& u, BinomialExp e, XorCounter& ctr);

}  // namespace cauchymds
