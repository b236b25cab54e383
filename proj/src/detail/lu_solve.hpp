#pragma once

#include <stdexcept>
#include <vector>

#include "cauchymds/cauchy.hpp"

namespace cauchymds::detail {

// Applies U^1 ... U^{l-1} D L^{l-1} ... L^1 to s, right to left, in place.
template <class Arith>
void apply_factored(const FactoredInverse& f, std::vector<typename Arith::Element>& s,
                    const Arith& ar) {
  const int l = static_cast<int>(s.size());
  if (static_cast<int>(f.diagonal.size()) != l) {
    throw std::invalid_argument("right-hand side length does not match the system");
  }

  // L^1 first. The bidiagonal update runs with descending j so every row
  // reads its neighbour's pre-update value.
  for (const LowerFactor& lf : f.lower) {
    const int i = lf.stage;
    for (int j = l; j >= i + 1; --j) {
      const int r = j - i - 1;
      s[j - 1] = ar.add(ar.mul(s[j - 2], lf.prev_coeff[r]), ar.mul(s[j - 1], lf.self_coeff[r]));
    }
    for (int j = i + 1; j <= l; ++j) s[j - 1] = ar.div(s[j - 1], lf.divisor[j - i - 1]);
  }

  for (int i = 0; i < l; ++i) s[i] = ar.mul(s[i], f.diagonal[i]);

  for (auto it = f.upper.rbegin(); it != f.upper.rend(); ++it) {
    const UpperFactor& uf = *it;
    const int i = uf.stage;
    for (int j = i + 1; j <= l; ++j) s[j - 1] = ar.div(s[j - 1], uf.divisor[j - i - 1]);
    // Ascending j: row j reads s_{j+1} before it is rewritten.
    for (int j = i; j <= l - 1; ++j) {
      const auto carried = ar.mul(s[j], uf.super[j - i]);
      if (j == i) {
        s[j - 1] = ar.add(s[j - 1], carried);
      } else {
        s[j - 1] = ar.add(ar.mul(s[j - 1], uf.diagonal[j - i - 1]), carried);
      }
    }
    s[l - 1] = ar.mul(s[l - 1], uf.diagonal[l - i - 1]);
  }
}

}  // namespace cauchymds::detail
