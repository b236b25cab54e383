#include "cauchymds/cauchy.hpp"

#include <algorithm>
#include <stdexcept>

#include "cauchymds/gf2_poly.hpp"
#include "detail/arith.hpp"
#include "detail/lu_solve.hpp"

namespace cauchymds {

CauchySystem CauchySystem::make(int p, std::vector<int> a_exps, std::vector<int> b_exps) {
  if (p < 3 || p > kMaxModulus || !is_prime(p)) {
    throw std::invalid_argument("Cauchy system modulus must be an odd prime <= " +
                                std::to_string(kMaxModulus));
  }
  if (a_exps.empty() || a_exps.size() != b_exps.size()) {
    throw std::invalid_argument("Cauchy system needs two exponent lists of equal nonzero length");
  }
  std::vector<int> all = a_exps;
  all.insert(all.end(), b_exps.begin(), b_exps.end());
  for (int e : all) {
    if (e < 0 || e >= p) throw std::invalid_argument("Cauchy exponent out of range");
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("Cauchy exponents must be pairwise distinct");
  }
  return CauchySystem(p, std::move(a_exps), std::move(b_exps));
}

FactoredInverse factorize(const CauchySystem& sys) {
  const int l = sys.size();
  // 1-based views onto the exponent lists.
  auto a = [&](int i) { return sys.a(i - 1); };
  auto b = [&](int i) { return sys.b(i - 1); };

  FactoredInverse f;
  f.modulus = sys.modulus();
  for (int i = 1; i <= l - 1; ++i) {
    LowerFactor lf;
    lf.stage = i;
    UpperFactor uf;
    uf.stage = i;
    for (int j = i + 1; j <= l; ++j) {
      lf.prev_coeff.push_back(BinomialExp::between(a(j - i), b(i)));
      lf.self_coeff.push_back(BinomialExp::between(a(j), b(i)));
      lf.divisor.push_back(BinomialExp::between(a(j), a(j - i)));
      uf.divisor.push_back(BinomialExp::between(b(j - i), b(j)));
      uf.diagonal.push_back(BinomialExp::between(a(i), b(j)));
    }
    for (int j = i; j <= l - 1; ++j) uf.super.push_back(BinomialExp::between(a(i), b(j - i + 1)));
    f.lower.push_back(std::move(lf));
    f.upper.push_back(std::move(uf));
  }
  for (int i = 1; i <= l; ++i) f.diagonal.push_back(BinomialExp::between(a(i), b(i)));
  return f;
}

namespace {

template <class Element>
void check_rhs(const CauchySystem& sys, std::span<const Element> c) {
  if (static_cast<int>(c.size()) != sys.size()) {
    throw std::invalid_argument("right-hand side length does not match the system");
  }
}

int modulus_of(const RingElement& e) { return e.modulus(); }
int modulus_of(const Tracked& e) { return e.value.modulus(); }

template <class Element>
void check_moduli(const CauchySystem& sys, std::span<const Element> c) {
  for (const auto& e : c) {
    if (modulus_of(e) != sys.modulus()) {
      throw std::invalid_argument("right-hand side modulus does not match the system");
    }
  }
}

}  // namespace

std::vector<RingElement> lu_solve(const CauchySystem& sys, std::span<const RingElement> c) {
  check_rhs(sys, c);
  check_moduli(sys, c);
  std::vector<RingElement> s(c.begin(), c.end());
  detail::apply_factored(factorize(sys), s, detail::FastArith{});
  return s;
}

std::vector<Tracked> lu_solve(const CauchySystem& sys, std::span<const Tracked> c,
                              XorCounter& ctr) {
  check_rhs(sys, c);
  check_moduli(sys, c);
  std::vector<Tracked> s(c.begin(), c.end());
  detail::apply_factored(factorize(sys), s, detail::CountingArith{&ctr});
  return s;
}

std::vector<RingElement> lu_solve(const CauchySystem& sys, std::span<const RingElement> c,
                                  XorCounter& ctr) {
  std::vector<Tracked> tracked;
  tracked.reserve(c.size());
  for (const auto& e : c) tracked.push_back(Tracked::unknown(e));
  auto solved = lu_solve(sys, std::span<const Tracked>(tracked), ctr);
  std::vector<RingElement> out;
  out.reserve(solved.size());
  for (auto& t : solved) out.push_back(t.value);
  return out;
}

std::vector<RingElement> multiply(const CauchySystem& sys, std::span<const RingElement> s) {
  check_rhs(sys, s);
  check_moduli(sys, s);
  std::vector<RingElement> out;
  out.reserve(s.size());
  for (int i = 0; i < sys.size(); ++i) {
    RingElement row(sys.modulus());
    for (int j = 0; j < sys.size(); ++j) row ^= div_binomial_canonical(s[j], sys.entry(i, j));
    out.push_back(row);
  }
  return out;
}

Determinant determinant(const CauchySystem& sys) {
  Determinant d;
  const int l = sys.size();
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      d.numerator.push_back(BinomialExp::between(sys.a(j), sys.a(i)));
      d.numerator.push_back(BinomialExp::between(sys.b(i), sys.b(j)));
    }
  }
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) d.denominator.push_back(sys.entry(i, j));
  }
  return d;
}

RingElement evaluate(const Determinant& det, int p) {
  RingElement v = constants(p).identity;
  for (BinomialExp e : det.numerator) v = mul_binomial(v, e);
  for (BinomialExp e : det.denominator) v = div_binomial_canonical(v, e);
  return v;
}

bool is_invertible(const CauchySystem& sys) {
  const int p = sys.modulus();
  const RingElement d = evaluate(determinant(sys), p);
  Gf2Poly check;
  Gf2Poly value;
  for (int i = 0; i < p; ++i) {
    check.flip(i);
    if (d.coeff(i)) value.flip(i);
  }
  return gcd(mod(value, check), check) == Gf2Poly::monomial(0);
}

}  // namespace cauchymds
