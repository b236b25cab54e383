#pragma once

// XOR-complexity accounting: closed-form operation counts for encoding,
// decoding and the Cauchy solve, the Circulant Cauchy reference curves, and
// the normalized comparison table for C(p-r, r, p).

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cauchymds {

// k(p-2) + r(2kp - 4k - p + 1)
std::int64_t predict_encode_xors(int p, int k, int r);
// Upper bound for an l x l Cauchy solve: 4l^2 p - 3lp - 5l^2 + 3l + 2.
std::int64_t predict_solve_xors(int l, int p);
// (k-g)(p-2) + g(k-g)(2p-4) + solve(g) + d(k(p-3) + (k-1)(p-1))
std::int64_t predict_decode_xors(int p, int k, int lost_info, int lost_parity);

// Circulant Cauchy per-information-bit costs.
double circulant_encode_normalized(int p, int k, int r);
// Assumes k = p - r and r lost information columns.
double circulant_decode_normalized(int p, int r);

enum class Mode { kEncode, kDecode };

struct ComplexityRow {
  int p = 0;
  int k = 0;
  int r = 0;
  Mode mode = Mode::kEncode;
  std::int64_t proposed_formula = 0;
  std::int64_t proposed_measured = 0;
  double circulant_formula = 0;  // absolute count: normalized * k(p-1)
  double normalized_proposed = 0;
  double normalized_circulant = 0;

  bool proposed_below_circulant() const { return normalized_proposed < normalized_circulant; }
  // 100 * (1 - proposed / circulant)
  double reduction_percent() const;
};

std::vector<int> primes_in_range(int lo, int hi);

// One encode row and one decode row per prime, for C(p-r, r, p). Measured
// counts come from instrumented encode/decode runs on seeded random data;
// decode rows erase the first min(r, k) information columns. Throws
// std::invalid_argument for a non-prime p or p <= r.
std::vector<ComplexityRow> normalized_curves(int r, std::span<const int> primes);

// Header: p,k,r,mode,proposed_formula,proposed_measured,circulant_formula,
// normalized_proposed,normalized_circulant,proposed_below_circulant,
// reduction_percent. LF line endings.
void write_csv(std::ostream& out, std::span<const ComplexityRow> rows);

std::string to_string(Mode mode);

}  // namespace cauchymds
