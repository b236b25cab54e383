#include "cauchymds/oracle.hpp"

#include <stdexcept>
#include <utility>

namespace cauchymds::oracle {

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64) {
  if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
  data_.assign(static_cast<std::size_t>(rows) * stride_, 0);
}

bool BinaryMatrix::get(int r, int c) const {
  return (data_[static_cast<std::size_t>(r) * stride_ + c / 64] >> (c % 64)) & 1U;
}

void BinaryMatrix::set(int r, int c, bool v) {
  auto& w = data_[static_cast<std::size_t>(r) * stride_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  w = v ? (w | bit) : (w & ~bit);
}

BinaryMatrix expanded_generator(const CodeParams& params) {
  const int bits = params.column_bits();
  const int k = params.k();
  BinaryMatrix g(k * bits, params.columns() * bits);
  for (int u = 0; u < k * bits; ++u) {
    std::vector<Column> info(static_cast<std::size_t>(k), Column(params.p()));
    info[u / bits].set_bit(u % bits, true);
    const Codeword cw = encode(params, info);
    for (int c = 0; c < params.columns(); ++c) {
      for (int b = 0; b < bits; ++b) g.set(u, c * bits + b, cw.columns[c].bit(b));
    }
  }
  return g;
}

std::vector<Column> decode_gf2(const CodeParams& params,
                               std::span<const std::optional<Column>> available,
                               const ErasurePattern& pattern) {
  pattern.validate(params);
  if (static_cast<int>(available.size()) != params.columns()) {
    throw std::invalid_argument("expected one slot per column");
  }
  const int bits = params.column_bits();
  const int unknowns = params.k() * bits;
  const BinaryMatrix g = expanded_generator(params);

  // One equation per available bit: sum_u G[u][col] x_u = observed.
  // Stored as rows of `unknowns + 1` bits, the last being the right side.
  std::vector<std::vector<bool>> eqs;
  for (int c = 0; c < params.columns(); ++c) {
    if (!available[c]) continue;
    for (int b = 0; b < bits; ++b) {
      std::vector<bool> row(static_cast<std::size_t>(unknowns + 1));
      for (int u = 0; u < unknowns; ++u) row[u] = g.get(u, c * bits + b);
      row[unknowns] = available[c]->bit(b);
      eqs.push_back(std::move(row));
    }
  }

  std::vector<int> pivot_row(static_cast<std::size_t>(unknowns), -1);
  int next = 0;
  for (int col = 0; col < unknowns; ++col) {
    int found = -1;
    for (int r = next; r < static_cast<int>(eqs.size()); ++r) {
      if (eqs[r][col]) {
        found = r;
        break;
      }
    }
    if (found < 0) throw std::runtime_error("GF(2) decode system is singular");
    std::swap(eqs[next], eqs[found]);
    for (int r = 0; r < static_cast<int>(eqs.size()); ++r) {
      if (r != next && eqs[r][col]) {
        for (int x = 0; x <= unknowns; ++x) eqs[r][x] = eqs[r][x] != eqs[next][x];
      }
    }
    pivot_row[col] = next++;
  }
  for (int r = next; r < static_cast<int>(eqs.size()); ++r) {
    if (eqs[r][unknowns]) throw std::runtime_error("available columns are inconsistent");
  }

  std::vector<Column> info(static_cast<std::size_t>(params.k()), Column(params.p()));
  for (int u = 0; u < unknowns; ++u) info[u / bits].set_bit(u % bits, eqs[pivot_row[u]][unknowns]);
  return info;
}

Gf2Poly check_polynomial(int p) {
  Gf2Poly h;
  for (int i = 0; i < p; ++i) h.flip(i);
  return h;
}

QuotientElement::QuotientElement(int p, const Gf2Poly& poly)
    : p_(p), poly_(mod(poly, check_polynomial(p))) {}

QuotientElement operator+(const QuotientElement& a, const QuotientElement& b) {
  return QuotientElement(a.p_, a.poly_ + b.poly_);
}

QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
  return QuotientElement(a.p_, a.poly_ * b.poly_);
}

QuotientElement QuotientElement::inverse() const {
  const Gf2Xgcd r = xgcd(poly_, check_polynomial(p_));
  if (r.g != Gf2Poly::monomial(0)) throw std::domain_error("element is not a unit mod h(x)");
  return QuotientElement(p_, r.u);
}

bool QuotientElement::is_unit() const {
  return gcd(poly_, check_polynomial(p_)) == Gf2Poly::monomial(0);
}

QuotientElement theta(const RingElement& f) {
  Gf2Poly g;
  for (int i = 0; i < f.modulus(); ++i) {
    if (f.coeff(i)) g.flip(i);
  }
  return QuotientElement(f.modulus(), g);
}

RingElement phi(const QuotientElement& g) {
  const int p = g.modulus();
  Gf2Poly e;
  for (int i = 1; i < p; ++i) e.flip(i);
  const Gf2Poly prod = g.poly() * e;
  RingElement out(p);
  for (int i = 0; i <= prod.degree(); ++i) {
    if (prod.coeff(i)) out.flip(i % p);
  }
  return out;
}

namespace {

using Matrix = std::vector<std::vector<QuotientElement>>;

QuotientElement cofactor_det(const Matrix& m, int p) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  QuotientElement det(p, Gf2Poly{});
  for (std::size_t col = 0; col < n; ++col) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QuotientElement> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    // Signs vanish in characteristic 2.
    det = det + m[0][col] * cofactor_det(minor, p);
  }
  return det;
}

}  // namespace

QuotientElement det_bruteforce(const CauchySystem& sys) {
  if (sys.size() > 5) throw std::invalid_argument("cofactor determinant limited to size <= 5");
  const int p = sys.modulus();
  Matrix m;
  for (int i = 0; i < sys.size(); ++i) {
    std::vector<QuotientElement> row;
    for (int j = 0; j < sys.size(); ++j) {
      const Gf2Poly binomial = Gf2Poly::monomial(sys.a(i)) + Gf2Poly::monomial(sys.b(j));
      row.push_back(QuotientElement(p, binomial).inverse());
    }
    m.push_back(std::move(row));
  }
  return cofactor_det(m, p);
}

}  // namespace cauchymds::oracle
