#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cauchymds {

// Dense polynomial over F2 of unbounded degree. Used for quotient-ring
// reference arithmetic, not on the coding fast path.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  static Gf2Poly monomial(int deg);
  static Gf2Poly from_exponents(const std::vector<int>& exps);

  // -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return limbs_.empty(); }
  bool coeff(int i) const;
  void flip(int i);

  Gf2Poly& operator+=(const Gf2Poly& o);
  friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::uint64_t> limbs_;
};

struct Gf2DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

Gf2DivMod divmod(const Gf2Poly& a, const Gf2Poly& m);
Gf2Poly mod(const Gf2Poly& a, const Gf2Poly& m);
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

struct Gf2Xgcd {
  Gf2Poly g;  // gcd(a, b)
  Gf2Poly u;  // u*a + v*b = g
  Gf2Poly v;
};

Gf2Xgcd xgcd(const Gf2Poly& a, const Gf2Poly& b);

}  // namespace cauchymds
