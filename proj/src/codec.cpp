#include "cauchymds/codec.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "detail/arith.hpp"
#include "detail/lu_solve.hpp"

namespace cauchymds {

CodeParams CodeParams::make(int p, int k, int r) {
  if (p < 3 || p > kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument("p must be an odd prime <= " + std::to_string(kMaxModulus) +
                                ", got " + std::to_string(p));
  }
  if (k < 1 || r < 1) throw std::invalid_argument("k and r must both be at least 1");
  if (k + r > p) throw std::invalid_argument("k + r must not exceed p");
  return CodeParams(p, k, r);
}

Column Column::from_bits(int p, std::span<const std::uint8_t> bits) {
  if (static_cast<int>(bits.size()) != p - 1) {
    throw std::invalid_argument("a column holds exactly p-1 bits");
  }
  Column c(p);
  c.bits_ = RingElement::from_bits(p, bits);
  return c;
}

Column Column::truncate(const RingElement& poly) {
  Column c(poly.modulus());
  c.bits_ = poly;
  c.bits_.set_coeff(poly.modulus() - 1, false);
  return c;
}

RingElement Column::lift_with_parity() const {
  RingElement s = bits_;
  s.set_coeff(s.modulus() - 1, s.weight() % 2 != 0);
  return s;
}

std::vector<std::uint8_t> Column::to_bits() const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) out[i] = bit(i) ? 1 : 0;
  return out;
}

ErasurePattern ErasurePattern::from_available(const CodeParams& params,
                                              std::span<const std::optional<Column>> available) {
  if (static_cast<int>(available.size()) != params.columns()) {
    throw std::invalid_argument("expected one slot per column");
  }
  ErasurePattern pat;
  for (int i = 0; i < params.k(); ++i) {
    if (!available[i]) pat.lost_info.push_back(i);
  }
  for (int j = 0; j < params.r(); ++j) {
    if (!available[params.k() + j]) pat.lost_parity.push_back(j);
  }
  return pat;
}

void ErasurePattern::validate(const CodeParams& params) const {
  auto check = [](const std::vector<int>& idx, int limit, const char* what) {
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (idx[i] < 0 || idx[i] >= limit) {
        throw std::invalid_argument(std::string(what) + " index out of range");
      }
      if (i > 0 && idx[i] <= idx[i - 1]) {
        throw std::invalid_argument(std::string(what) + " indices must be strictly ascending");
      }
    }
  };
  check(lost_info, params.k(), "lost information");
  check(lost_parity, params.r(), "lost parity");
  if (size() > params.r()) {
    throw std::invalid_argument("more erasures than parity columns: fewer than k survivors");
  }
}

DecodePlan plan_decode(const CodeParams& params, const ErasurePattern& pattern,
                       const std::vector<bool>& available) {
  pattern.validate(params);
  if (static_cast<int>(available.size()) != params.columns()) {
    throw std::invalid_argument("expected one availability flag per column");
  }
  DecodePlan plan;
  plan.lost_info = pattern.lost_info;
  plan.lost_parity = pattern.lost_parity;
  for (int i = 0; i < params.k(); ++i) {
    if (std::binary_search(pattern.lost_info.begin(), pattern.lost_info.end(), i)) continue;
    if (!available[i]) {
      throw std::invalid_argument("information column " + std::to_string(i) +
                                  " is neither available nor marked lost");
    }
    plan.survivor_info.push_back(i);
  }
  const auto gamma = pattern.lost_info.size();
  for (int j = 0; j < params.r() && plan.helper_parity.size() < gamma; ++j) {
    if (std::binary_search(pattern.lost_parity.begin(), pattern.lost_parity.end(), j)) continue;
    if (available[params.k() + j]) plan.helper_parity.push_back(j);
  }
  if (plan.helper_parity.size() < gamma) {
    throw std::invalid_argument("insufficient surviving parity columns");
  }
  if (gamma > 0) {
    std::vector<int> b_side;
    for (int m : pattern.lost_info) b_side.push_back(m + params.r());
    plan.system = CauchySystem::make(params.p(), plan.helper_parity, std::move(b_side));
  }
  return plan;
}

namespace {

template <class Arith>
using Elements = std::vector<typename Arith::Element>;

void check_info(const CodeParams& params, std::span<const Column> info) {
  if (static_cast<int>(info.size()) != params.k()) {
    throw std::invalid_argument("expected exactly k information columns");
  }
  for (const Column& c : info) {
    if (c.modulus() != params.p()) {
      throw std::invalid_argument("information column does not hold p-1 bits");
    }
  }
}

// sum_i s_i / (x^j + x^{r+i}) over all k data polynomials.
template <class Arith>
typename Arith::Element parity_polynomial(const CodeParams& params, int j,
                                          const Elements<Arith>& data, const Arith& ar) {
  auto acc = ar.div(data[0], params.generator_entry(0, j));
  for (int i = 1; i < params.k(); ++i) {
    acc = ar.add(acc, ar.div(data[i], params.generator_entry(i, j)));
  }
  return acc;
}

template <class Arith>
Codeword encode_impl(const CodeParams& params, std::span<const Column> info, const Arith& ar) {
  check_info(params, info);
  Elements<Arith> data;
  data.reserve(info.size());
  for (const Column& c : info) data.push_back(ar.lift_information(c.lift_with_zero()));

  Codeword cw;
  cw.columns.assign(info.begin(), info.end());
  for (int j = 0; j < params.r(); ++j) {
    cw.columns.push_back(Column::truncate(ar.value(parity_polynomial(params, j, data, ar))));
  }
  return cw;
}

// Recovers the lost data polynomials: subtract the survivors' contribution
// from each helper parity, then solve the Cauchy system.
template <class Arith>
Elements<Arith> recover_info(const CodeParams& params, const DecodePlan& plan,
                             const Elements<Arith>& survivors, Elements<Arith> helpers,
                             const Arith& ar) {
  if (!plan.system) return {};
  for (std::size_t h = 0; h < helpers.size(); ++h) {
    for (std::size_t t = 0; t < survivors.size(); ++t) {
      const auto entry = params.generator_entry(plan.survivor_info[t], plan.helper_parity[h]);
      helpers[h] = ar.add(helpers[h], ar.div(survivors[t], entry));
    }
  }
  detail::apply_factored(factorize(*plan.system), helpers, ar);
  return helpers;
}

template <class Arith>
Codeword decode_impl(const CodeParams& params, std::span<const std::optional<Column>> available,
                     const ErasurePattern& pattern, const Arith& ar) {
  pattern.validate(params);
  if (static_cast<int>(available.size()) != params.columns()) {
    throw std::invalid_argument("expected one slot per column");
  }
  std::vector<bool> present_flags(available.size());
  for (std::size_t i = 0; i < available.size(); ++i) {
    present_flags[i] = available[i].has_value();
    if (available[i] && available[i]->modulus() != params.p()) {
      throw std::invalid_argument("available column does not hold p-1 bits");
    }
  }
  const ErasurePattern missing = ErasurePattern::from_available(params, available);
  if (missing.lost_info != pattern.lost_info || missing.lost_parity != pattern.lost_parity) {
    throw std::invalid_argument("erasure pattern does not match the available columns");
  }

  Codeword cw;
  cw.columns.resize(static_cast<std::size_t>(params.columns()));
  for (std::size_t i = 0; i < available.size(); ++i) {
    if (available[i]) cw.columns[i] = *available[i];
  }
  if (pattern.size() == 0) return cw;

  const DecodePlan plan = plan_decode(params, pattern, present_flags);

  Elements<Arith> data(static_cast<std::size_t>(params.k()));
  Elements<Arith> survivors;
  for (int i : plan.survivor_info) {
    data[i] = ar.lift_information(available[i]->lift_with_zero());
    survivors.push_back(data[i]);
  }

  Elements<Arith> helpers;
  for (int j : plan.helper_parity) {
    helpers.push_back(ar.lift_zero_top(available[params.k() + j]->lift_with_zero()));
  }
  Elements<Arith> recovered = recover_info(params, plan, survivors, std::move(helpers), ar);
  for (std::size_t m = 0; m < plan.lost_info.size(); ++m) {
    const int idx = plan.lost_info[m];
    cw.columns[idx] = Column::truncate(ar.value(recovered[m]));
    data[idx] = recovered[m];
  }

  for (int j : plan.lost_parity) {
    cw.columns[params.k() + j] = Column::truncate(ar.value(parity_polynomial(params, j, data, ar)));
  }
  return cw;
}

}  // namespace

Codeword encode(const CodeParams& params, std::span<const Column> info) {
  return encode_impl(params, info, detail::FastArith{});
}

Codeword encode(const CodeParams& params, std::span<const Column> info, XorCounter& ctr) {
  return encode_impl(params, info, detail::CountingArith{&ctr});
}

Codeword decode(const CodeParams& params, std::span<const std::optional<Column>> available,
                const ErasurePattern& pattern) {
  return decode_impl(params, available, pattern, detail::FastArith{});
}

Codeword decode(const CodeParams& params, std::span<const std::optional<Column>> available,
                const ErasurePattern& pattern, XorCounter& ctr) {
  return decode_impl(params, available, pattern, detail::CountingArith{&ctr});
}

std::vector<RingElement> solve_erased_information(const CodeParams& params,
                                                  const DecodePlan& plan,
                                                  std::span<const RingElement> survivor_info,
                                                  std::span<const RingElement> helper_parity) {
  if (survivor_info.size() != plan.survivor_info.size() ||
      helper_parity.size() != plan.helper_parity.size()) {
    throw std::invalid_argument("polynomial counts do not match the decode plan");
  }
  std::vector<RingElement> survivors(survivor_info.begin(), survivor_info.end());
  std::vector<RingElement> helpers(helper_parity.begin(), helper_parity.end());
  return recover_info(params, plan, survivors, std::move(helpers), detail::FastArith{});
}

namespace {

// Calls fn(mask) for every subset of n columns with at most r members.
template <class Fn>
void for_each_pattern(int n, int r, Fn&& fn) {
  std::vector<bool> mask(static_cast<std::size_t>(n));
  for (int size = 0; size <= r; ++size) {
    std::fill(mask.begin(), mask.end(), false);
    std::fill(mask.begin(), mask.begin() + size, true);
    do {
      fn(mask);
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
}

std::uint64_t binom(int n, int m) {
  if (m < 0 || m > n) return 0;
  std::uint64_t v = 1;
  for (int i = 1; i <= m; ++i) v = v * static_cast<std::uint64_t>(n - m + i) / i;
  return v;
}

bool mds_by_decoding(const CodeParams& params) {
  const int k = params.k();
  const int bits = params.column_bits();
  std::vector<Codeword> basis;
  for (int u = 0; u < k * bits; ++u) {
    std::vector<Column> info(static_cast<std::size_t>(k), Column(params.p()));
    info[u / bits].set_bit(u % bits, true);
    basis.push_back(encode(params, info));
  }
  bool ok = true;
  for_each_pattern(params.columns(), params.r(), [&](const std::vector<bool>& lost) {
    if (!ok) return;
    for (const Codeword& cw : basis) {
      std::vector<std::optional<Column>> avail(cw.columns.begin(), cw.columns.end());
      for (std::size_t i = 0; i < lost.size(); ++i) {
        if (lost[i]) avail[i].reset();
      }
      const auto pattern = ErasurePattern::from_available(params, avail);
      if (decode(params, avail, pattern) != cw) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

// Every square submatrix of the k x r Cauchy generator block must be invertible.
bool mds_by_determinants(const CodeParams& params) {
  const int k = params.k();
  const int r = params.r();
  for (int l = 1; l <= std::min(k, r); ++l) {
    std::vector<bool> rows(static_cast<std::size_t>(r), false);
    std::fill(rows.begin(), rows.begin() + l, true);
    do {
      std::vector<bool> cols(static_cast<std::size_t>(k), false);
      std::fill(cols.begin(), cols.begin() + l, true);
      do {
        std::vector<int> a, b;
        for (int j = 0; j < r; ++j) {
          if (rows[j]) a.push_back(j);
        }
        for (int i = 0; i < k; ++i) {
          if (cols[i]) b.push_back(r + i);
        }
        if (!is_invertible(CauchySystem::make(params.p(), a, b))) return false;
      } while (std::prev_permutation(cols.begin(), cols.end()));
    } while (std::prev_permutation(rows.begin(), rows.end()));
  }
  return true;
}

}  // namespace

bool mds_check(const CodeParams& params) {
  std::uint64_t patterns = 0;
  for (int s = 0; s <= params.r(); ++s) patterns += binom(params.columns(), s);
  const std::uint64_t work =
      patterns * static_cast<std::uint64_t>(params.k() * params.column_bits());
  constexpr std::uint64_t kDecodeBudget = 20000;
  return work <= kDecodeBudget ? mds_by_decoding(params) : mds_by_determinants(params);
}

}  // namespace cauchymds
