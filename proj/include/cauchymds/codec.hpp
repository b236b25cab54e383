#pragma once

// The C(k, r, p) array code: a (p-1) x (k+r) bit array with k information
// columns and r parity columns. Column j holds the coefficients of degrees
// 0..p-2 of a polynomial in C_p; the degree p-1 coefficient is never stored.
//
// Parity column j is
//     c_j(x) = sum_i s_i(x) / (x^j + x^{r+i}),
// computed with the simplified binomial division, so its top coefficient is
// always zero.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cauchymds/cauchy.hpp"
#include "cauchymds/ring.hpp"
#include "cauchymds/xor_counter.hpp"

namespace cauchymds {

class CodeParams {
 public:
  // Throws std::invalid_argument unless p is an odd prime <= kMaxModulus,
  // k >= 1, r >= 1 and k + r <= p.
  static CodeParams make(int p, int k, int r);

  int p() const { return p_; }
  int k() const { return k_; }
  int r() const { return r_; }
  int columns() const { return k_ + r_; }
  int column_bits() const { return p_ - 1; }

  // Generator entry for information column `info` and parity column `parity`
  // is the inverse of this binomial.
  BinomialExp generator_entry(int info, int parity) const {
    return BinomialExp::between(parity, r_ + info);
  }

  friend bool operator==(const CodeParams&, const CodeParams&) = default;

 private:
  CodeParams(int p, int k, int r) : p_(p), k_(k), r_(r) {}
  int p_;
  int k_;
  int r_;
};

// One stored column: p-1 bits, bit i being the coefficient of x^i.
class Column {
 public:
  Column() = default;
  explicit Column(int p) : bits_(p) {}

  // bits.size() must equal p-1.
  static Column from_bits(int p, std::span<const std::uint8_t> bits);
  // Drops the degree p-1 coefficient.
  static Column truncate(const RingElement& poly);

  int modulus() const { return bits_.modulus(); }
  int size() const { return bits_.modulus() - 1; }
  bool bit(int i) const { return bits_.coeff(i); }
  void set_bit(int i, bool v) { bits_.set_coeff(i, v); }

  // Appends the parity of the stored bits (information columns).
  RingElement lift_with_parity() const;
  // Appends a zero coefficient (parity columns).
  const RingElement& lift_with_zero() const { return bits_; }

  std::vector<std::uint8_t> to_bits() const;
  friend bool operator==(const Column&, const Column&) = default;

 private:
  RingElement bits_;  // coefficient p-1 always zero
};

struct Codeword {
  std::vector<Column> columns;  // k information columns, then r parity columns

  std::span<const Column> info(const CodeParams& params) const {
    return std::span<const Column>(columns).first(params.k());
  }
  std::span<const Column> parity(const CodeParams& params) const {
    return std::span<const Column>(columns).subspan(params.k());
  }
  friend bool operator==(const Codeword&, const Codeword&) = default;
};

// Lost columns. Information indices are in [0, k), parity indices in [0, r).
struct ErasurePattern {
  std::vector<int> lost_info;
  std::vector<int> lost_parity;

  // Pattern of every column that is absent from `available` (length k+r).
  static ErasurePattern from_available(const CodeParams& params,
                                       std::span<const std::optional<Column>> available);

  int size() const { return static_cast<int>(lost_info.size() + lost_parity.size()); }
  // Throws std::invalid_argument on out-of-range, unsorted or duplicate
  // indices, or more than r erasures.
  void validate(const CodeParams& params) const;
};

struct DecodePlan {
  std::vector<int> survivor_info;   // information columns read, ascending
  std::vector<int> helper_parity;   // one per lost information column
  std::vector<int> lost_info;
  std::vector<int> lost_parity;
  // a-side: helper parity indices; b-side: lost_info[m] + r. Absent when no
  // information column is lost.
  std::optional<CauchySystem> system;
};

// All surviving information columns plus the lowest-index available parity
// columns, one per lost information column.
DecodePlan plan_decode(const CodeParams& params, const ErasurePattern& pattern,
                       const std::vector<bool>& available);

Codeword encode(const CodeParams& params, std::span<const Column> info);
Codeword encode(const CodeParams& params, std::span<const Column> info, XorCounter& ctr);

// `available` has one slot per column (k information then r parity); a slot
// must be filled exactly when its column is not in `pattern`.
Codeword decode(const CodeParams& params, std::span<const std::optional<Column>> available,
                const ErasurePattern& pattern);
Codeword decode(const CodeParams& params, std::span<const std::optional<Column>> available,
                const ErasurePattern& pattern, XorCounter& ctr);

// The Cauchy-solve stage of decoding on already-lifted polynomials:
// survivor_info[i] is s_{plan.survivor_info[i]}(x), helper_parity[h] is
// c_{plan.helper_parity[h]}(x). Returns s for each plan.lost_info entry.
std::vector<RingElement> solve_erased_information(const CodeParams& params,
                                                  const DecodePlan& plan,
                                                  std::span<const RingElement> survivor_info,
                                                  std::span<const RingElement> helper_parity);

// Exhaustive MDS verification. Small codes decode every unit codeword under
// every erasure pattern of size <= r; larger codes check invertibility of
// every square Cauchy submatrix of the generator.
bool mds_check(const CodeParams& params);

}  // namespace cauchymds
