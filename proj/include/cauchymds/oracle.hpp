#pragma once

// Brute-force reference implementations used by tests and verification.
// Nothing here is on the coding fast path, and nothing here counts XORs.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cauchymds/cauchy.hpp"
#include "cauchymds/codec.hpp"
#include "cauchymds/gf2_poly.hpp"
#include "cauchymds/ring.hpp"

namespace cauchymds::oracle {

class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool get(int r, int c) const;
  void set(int r, int c, bool v);
  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  int rows_;
  int cols_;
  int stride_;
  std::vector<std::uint64_t> data_;
};

// k(p-1) x (k+r)(p-1) matrix; row u is the codeword of the u-th unit
// information vector (column u / (p-1), bit u % (p-1)), laid out column by
// column.
BinaryMatrix expanded_generator(const CodeParams& params);

// Recovers the k information columns by Gaussian elimination over GF(2) on
// the generator restricted to the available columns. Throws
// std::runtime_error if the restricted system is singular.
std::vector<Column> decode_gf2(const CodeParams& params,
                               std::span<const std::optional<Column>> available,
                               const ErasurePattern& pattern);

// h(x) = 1 + x + ... + x^{p-1} as a plain F2[x] polynomial.
Gf2Poly check_polynomial(int p);

// An element of F2[x]/(h(x)), stored with degree < p-1.
class QuotientElement {
 public:
  QuotientElement(int p, const Gf2Poly& poly);

  int modulus() const { return p_; }
  const Gf2Poly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  friend QuotientElement operator+(const QuotientElement& a, const QuotientElement& b);
  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b);
  friend bool operator==(const QuotientElement&, const QuotientElement&) = default;

  // Extended Euclid against h(x). Throws std::domain_error for non-units.
  QuotientElement inverse() const;
  // gcd(poly, h) == 1.
  bool is_unit() const;

 private:
  int p_;
  Gf2Poly poly_;
};

// f mod h(x).
QuotientElement theta(const RingElement& f);
// (g * e(x)) mod (1 + x^p).
RingElement phi(const QuotientElement& g);

// Cofactor expansion of the Cauchy matrix with every entry first reduced
// mod h(x). Limited to systems of size <= 5.
QuotientElement det_bruteforce(const CauchySystem& sys);

}  // namespace cauchymds::oracle
