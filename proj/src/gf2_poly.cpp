#include "cauchymds/gf2_poly.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace cauchymds {

Gf2Poly Gf2Poly::monomial(int deg) {
  Gf2Poly p;
  p.flip(deg);
  return p;
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<int>& exps) {
  Gf2Poly p;
  for (int e : exps) p.flip(e);
  return p;
}

int Gf2Poly::degree() const {
  if (limbs_.empty()) return -1;
  const auto top = limbs_.back();
  return static_cast<int>(limbs_.size() - 1) * 64 + 63 - std::countl_zero(top);
}

bool Gf2Poly::coeff(int i) const {
  const auto w = static_cast<std::size_t>(i / 64);
  if (i < 0 || w >= limbs_.size()) return false;
  return (limbs_[w] >> (i % 64)) & 1U;
}

void Gf2Poly::flip(int i) {
  if (i < 0) throw std::invalid_argument("negative exponent");
  const auto w = static_cast<std::size_t>(i / 64);
  if (w >= limbs_.size()) limbs_.resize(w + 1, 0);
  limbs_[w] ^= std::uint64_t{1} << (i % 64);
  trim();
}

void Gf2Poly::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  for (std::size_t i = 0; i < o.limbs_.size(); ++i) limbs_[i] ^= o.limbs_[i];
  trim();
  return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
  for (int i = 0; i <= a.degree(); ++i) {
    if (!a.coeff(i)) continue;
    const int ws = i / 64;
    const int bs = i % 64;
    for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
      r.limbs_[j + ws] ^= b.limbs_[j] << bs;
      if (bs != 0) r.limbs_[j + ws + 1] ^= b.limbs_[j] >> (64 - bs);
    }
  }
  r.trim();
  return r;
}

std::string Gf2Poly::to_string() const {
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    if (!coeff(i)) continue;
    if (!out.empty()) out += " + ";
    out += i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
  }
  return out.empty() ? "0" : out;
}

Gf2DivMod divmod(const Gf2Poly& a, const Gf2Poly& m) {
  if (m.is_zero()) throw std::domain_error("polynomial division by zero");
  Gf2DivMod out{Gf2Poly{}, a};
  const int dm = m.degree();
  while (out.remainder.degree() >= dm) {
    const int shift = out.remainder.degree() - dm;
    out.quotient.flip(shift);
    out.remainder += m * Gf2Poly::monomial(shift);
  }
  return out;
}

Gf2Poly mod(const Gf2Poly& a, const Gf2Poly& m) { return divmod(a, m).remainder; }

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
  while (!b.is_zero()) {
    Gf2Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Gf2Xgcd xgcd(const Gf2Poly& a, const Gf2Poly& b) {
  // invariant: r0 = u0*a + v0*b, r1 = u1*a + v1*b
  Gf2Poly r0 = a, r1 = b;
  Gf2Poly u0 = Gf2Poly::monomial(0), u1;
  Gf2Poly v0, v1 = Gf2Poly::monomial(0);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Gf2Poly u2 = u0 + q * u1;
    Gf2Poly v2 = v0 + q * v1;
    r0 = std::move(r1);
    r1 = std::move(r);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  return Gf2Xgcd{r0, u0, v0};
}

}  // namespace cauchymds
