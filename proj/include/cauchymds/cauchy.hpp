#pragma once

// Square Cauchy systems over C_p. Entry (i, j) of the matrix is the inverse
// of x^{a_i} + x^{b_j}; the matrix is only ever held symbolically as the two
// exponent lists.

#include <span>
#include <vector>

#include "cauchymds/ring.hpp"
#include "cauchymds/xor_counter.hpp"

namespace cauchymds {

class CauchySystem {
 public:
  // Throws std::invalid_argument unless p is an odd prime <= kMaxModulus,
  // both lists have the same nonzero length, and all exponents are pairwise
  // distinct and lie in [0, p).
  static CauchySystem make(int p, std::vector<int> a_exps, std::vector<int> b_exps);

  int modulus() const { return p_; }
  int size() const { return static_cast<int>(a_.size()); }
  // 0-based accessors.
  int a(int i) const { return a_[i]; }
  int b(int j) const { return b_[j]; }
  std::span<const int> a_exps() const { return a_; }
  std::span<const int> b_exps() const { return b_; }
  // The binomial whose inverse sits at entry (i, j).
  BinomialExp entry(int i, int j) const { return BinomialExp::between(a_[i], b_[j]); }

 private:
  CauchySystem(int p, std::vector<int> a, std::vector<int> b)
      : p_(p), a_(std::move(a)), b_(std::move(b)) {}

  int p_;
  std::vector<int> a_;
  std::vector<int> b_;
};

// Stage i of the lower factor L^i (1-based i in [1, l-1]). Rows are indexed
// by j = i+1 .. l; row j combines the old values at j-1 and j, then divides.
struct LowerFactor {
  int stage = 0;
  std::vector<BinomialExp> prev_coeff;  // x^{a_{j-i}} + x^{b_i}
  std::vector<BinomialExp> self_coeff;  // x^{a_j} + x^{b_i}
  std::vector<BinomialExp> divisor;     // x^{a_j} + x^{a_{j-i}}
};

// Stage i of the upper factor U^i. Divisors and diagonal act on rows
// j = i+1 .. l; superdiagonal entries sit on rows j = i .. l-1.
struct UpperFactor {
  int stage = 0;
  std::vector<BinomialExp> divisor;   // x^{b_{j-i}} + x^{b_j}
  std::vector<BinomialExp> diagonal;  // x^{a_i} + x^{b_j}
  std::vector<BinomialExp> super;     // x^{a_i} + x^{b_{j-i+1}}
};

// C^{-1} = U^1 ... U^{l-1} D L^{l-1} ... L^1, kept as exponent data.
struct FactoredInverse {
  int modulus = 0;
  std::vector<UpperFactor> upper;  // U^1 .. U^{l-1}
  std::vector<BinomialExp> diagonal;
  std::vector<LowerFactor> lower;  // L^1 .. L^{l-1}

  std::size_t factor_count() const { return upper.size() + 1 + lower.size(); }
};

FactoredInverse factorize(const CauchySystem& sys);

// Solves C s = c. Inputs may carry +h(x) offsets; the output is the unique
// even-weight solution either way.
std::vector<RingElement> lu_solve(const CauchySystem& sys, std::span<const RingElement> c);
std::vector<Tracked> lu_solve(const CauchySystem& sys, std::span<const Tracked> c,
                              XorCounter& ctr);
// Counting solve with every input coefficient treated as possibly nonzero.
std::vector<RingElement> lu_solve(const CauchySystem& sys, std::span<const RingElement> c,
                                  XorCounter& ctr);

// C s, computed entry by entry with canonical divisions. Outputs are in C_p.
std::vector<RingElement> multiply(const CauchySystem& sys, std::span<const RingElement> s);

// det C = prod_{j>i} (x^{a_j}+x^{a_i})(x^{b_i}+x^{b_j}) / prod_{i,j} (x^{a_i}+x^{b_j}).
struct Determinant {
  std::vector<BinomialExp> numerator;
  std::vector<BinomialExp> denominator;
};

Determinant determinant(const CauchySystem& sys);
// The determinant as an element of C_p.
RingElement evaluate(const Determinant& det, int p);
// gcd(det mod h, h) == 1.
bool is_invertible(const CauchySystem& sys);

}  // namespace cauchymds
