#include "cauchymds/metrics.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "cauchymds/codec.hpp"
#include "cauchymds/ring.hpp"

namespace cauchymds {

std::int64_t predict_encode_xors(int p, int k, int r) {
  const std::int64_t P = p, K = k, R = r;
  return K * (P - 2) + R * (2 * K * P - 4 * K - P + 1);
}

std::int64_t predict_solve_xors(int l, int p) {
  const std::int64_t L = l, P = p;
  return 4 * L * L * P - 3 * L * P - 5 * L * L + 3 * L + 2;
}

std::int64_t predict_decode_xors(int p, int k, int lost_info, int lost_parity) {
  const std::int64_t P = p, K = k, G = lost_info, D = lost_parity;
  return (K - G) * (P - 2) + G * (K - G) * (2 * P - 4) + predict_solve_xors(lost_info, p) +
         D * (K * (P - 3) + (K - 1) * (P - 1));
}

double circulant_encode_normalized(int p, int k, int r) {
  return 3.0 * r - 2.0 + static_cast<double>(k - r) / (static_cast<double>(k) * (p - 1));
}

double circulant_decode_normalized(int p, int r) {
  const double P = p, R = r;
  return (3 * R * P * (P - R) + 6 * R * R * P) / ((P - R) * (P - 1));
}

double ComplexityRow::reduction_percent() const {
  return 100.0 * (1.0 - normalized_proposed / normalized_circulant);
}

std::vector<int> primes_in_range(int lo, int hi) {
  std::vector<int> out;
  for (int n = std::max(lo, 2); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

namespace {

std::vector<Column> random_info(const CodeParams& params, std::mt19937_64& rng) {
  std::vector<Column> info;
  std::bernoulli_distribution coin(0.5);
  for (int i = 0; i < params.k(); ++i) {
    Column c(params.p());
    for (int b = 0; b < params.column_bits(); ++b) c.set_bit(b, coin(rng));
    info.push_back(c);
  }
  return info;
}

}  // namespace

std::vector<ComplexityRow> normalized_curves(int r, std::span<const int> primes) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  std::vector<ComplexityRow> rows;
  std::mt19937_64 rng(0x5eed);
  for (int p : primes) {
    if (!is_prime(p) || p < 3) throw std::invalid_argument("not an odd prime: " + std::to_string(p));
    if (p <= r) throw std::invalid_argument("p must exceed r");
    const int k = p - r;
    const CodeParams params = CodeParams::make(p, k, r);
    const double info_bits = static_cast<double>(k) * (p - 1);
    const auto info = random_info(params, rng);

    XorCounter enc_ctr;
    const Codeword cw = encode(params, info, enc_ctr);
    ComplexityRow enc;
    enc.p = p;
    enc.k = k;
    enc.r = r;
    enc.mode = Mode::kEncode;
    enc.proposed_formula = predict_encode_xors(p, k, r);
    enc.proposed_measured = static_cast<std::int64_t>(enc_ctr.count());
    enc.normalized_circulant = circulant_encode_normalized(p, k, r);
    enc.circulant_formula = enc.normalized_circulant * info_bits;
    enc.normalized_proposed = static_cast<double>(enc.proposed_formula) / info_bits;
    rows.push_back(enc);

    const int lost = std::min(r, k);
    std::vector<std::optional<Column>> avail(cw.columns.begin(), cw.columns.end());
    for (int i = 0; i < lost; ++i) avail[i].reset();
    XorCounter dec_ctr;
    decode(params, avail, ErasurePattern::from_available(params, avail), dec_ctr);
    ComplexityRow dec = enc;
    dec.mode = Mode::kDecode;
    dec.proposed_formula = predict_decode_xors(p, k, lost, 0);
    dec.proposed_measured = static_cast<std::int64_t>(dec_ctr.count());
    dec.normalized_circulant = circulant_decode_normalized(p, r);
    dec.circulant_formula = dec.normalized_circulant * info_bits;
    dec.normalized_proposed = static_cast<double>(dec.proposed_formula) / info_bits;
    rows.push_back(dec);
  }
  return rows;
}

std::string to_string(Mode mode) { return mode == Mode::kEncode ? "encode" : "decode"; }

void write_csv(std::ostream& out, std::span<const ComplexityRow> rows) {
  out << "p,k,r,mode,proposed_formula,proposed_measured,circulant_formula,"
         "normalized_proposed,normalized_circulant,proposed_below_circulant,"
         "reduction_percent\n";
  out << std::setprecision(10);
  for (const auto& row : rows) {
    out << row.p << ',' << row.k << ',' << row.r << ',' << to_string(row.mode) << ','
        << row.proposed_formula << ',' << row.proposed_measured << ',' << row.circulant_formula
        << ',' << row.normalized_proposed << ',' << row.normalized_circulant << ','
        << (row.proposed_below_circulant() ? "true" : "false") << ','
        << row.reduction_percent() << '\n';
  }
}

}  // namespace cauchymds
