#pragma once

// Test-only helpers: seeded generators and a schoolbook product in R_p that
// does not go through any codec path.

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "cauchymds/codec.hpp"
#include "cauchymds/ring.hpp"

namespace cauchymds::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261019);
  return gen;
}

inline int uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng());
}

inline RingElement random_element(int p) {
  RingElement r(p);
  for (int i = 0; i < p; ++i) r.set_coeff(i, uniform(0, 1) == 1);
  return r;
}

inline RingElement random_even(int p) {
  RingElement r = random_element(p);
  if (!r.is_even_weight()) r.flip(uniform(0, p - 1));
  return r;
}

inline BinomialExp random_binomial(int p) {
  const int u = uniform(0, p - 1);
  int v = uniform(0, p - 2);
  if (v >= u) ++v;
  return BinomialExp::between(u, v);
}

// u * v in R_p as a sum of cyclic shifts of u.
inline RingElement ring_mul(const RingElement& u, const RingElement& v) {
  RingElement out(u.modulus());
  for (int i = 0; i < v.modulus(); ++i) {
    if (v.coeff(i)) out ^= mul_monomial(u, i);
  }
  return out;
}

inline RingElement binomial_poly(int p, BinomialExp e) {
  return RingElement::from_exponents(p, {e.low(), e.high()});
}

inline Column random_column(int p) {
  Column c(p);
  for (int b = 0; b < p - 1; ++b) c.set_bit(b, uniform(0, 1) == 1);
  return c;
}

inline std::vector<Column> random_info(const CodeParams& params) {
  std::vector<Column> info;
  for (int i = 0; i < params.k(); ++i) info.push_back(random_column(params.p()));
  return info;
}

inline Column column_from_exponents(int p, std::initializer_list<int> exps) {
  return Column::truncate(RingElement::from_exponents(p, exps));
}

// Drops every column whose flag in `lost` is set.
inline std::vector<std::optional<Column>> erase(const Codeword& cw, const std::vector<bool>& lost) {
  std::vector<std::optional<Column>> avail(cw.columns.begin(), cw.columns.end());
  for (std::size_t i = 0; i < lost.size(); ++i) {
    if (lost[i]) avail[i].reset();
  }
  return avail;
}

// Calls fn(mask) for every subset of n items with at most max_size members.
template <class Fn>
void for_each_subset(int n, int max_size, Fn&& fn) {
  for (unsigned m = 0; m < (1U << n); ++m) {
    if (__builtin_popcount(m) > max_size) continue;
    std::vector<bool> mask(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) mask[i] = (m >> i) & 1U;
    fn(mask);
  }
}

inline constexpr int kTestPrimes[] = {5, 7, 11, 13};

}  // namespace cauchymds::testing
