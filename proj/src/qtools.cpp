#include "rrs/qtools.hpp"

#include <sstream>

namespace rrs {

namespace {

// multiply by (1 - a q^shift)
void mul_one(Series& s, const Monomial& a, int shift) {
  int qb = a.q_exp + shift;
  if (qb >= 0) {
    s.mul_factor(Int(-a.sign), a.x_exp, qb);
  } else {
    Series f = Series::one() + Series::monomial(Int(-a.sign), a.x_exp, qb);
    s = mul(s, f);
  }
}

// divide by (1 - a q^shift)
void div_one(Series& s, const Monomial& a, int shift) {
  int qb = a.q_exp + shift;
  if (qb >= 1) {
    s.div_factor(Int(-a.sign), a.x_exp, qb);
  } else if (qb < 0) {
    // 1/(1 - a q^qb) = -a^{-1} q^{-qb} / (1 - a^{-1} q^{-qb}), needs x_exp = 0
    if (a.x_exp != 0) throw SeriesError("div_poch: Laurent factor with x");
    s = s.shifted(0, -qb, Int(-a.sign));
    s.div_factor(Int(-a.sign), 0, -qb);
  } else {
    throw SeriesError("div_poch: factor with q-exponent 0 is not a unit");
  }
}

}  // namespace

void mul_poch(Series& s, Monomial a, int base, int n) {
  if (n >= 0) {
    for (int j = 0; j < n; ++j) mul_one(s, a, base * j);
  } else {
    for (int j = n; j < 0; ++j) div_one(s, a, base * j);
  }
}

void div_poch(Series& s, Monomial a, int base, int n) {
  if (n >= 0) {
    for (int j = 0; j < n; ++j) div_one(s, a, base * j);
  } else {
    for (int j = n; j < 0; ++j) mul_one(s, a, base * j);
  }
}

void mul_poch_inf(Series& s, Monomial a, int base) {
  if (base < 1) throw SeriesError("poch_infinite: base must be positive");
  if (s.exact()) throw SeriesError("poch_infinite: needs a finite truncation");
  for (int j = 0; a.q_exp + base * j < s.trunc(); ++j) mul_one(s, a, base * j);
}

void div_poch_inf(Series& s, Monomial a, int base) {
  if (base < 1) throw SeriesError("poch_infinite: base must be positive");
  if (s.exact()) throw SeriesError("poch_infinite: needs a finite truncation");
  for (int j = 0; a.q_exp + base * j < s.trunc(); ++j) div_one(s, a, base * j);
}

Series poch_finite(Monomial a, int base, int n, int trunc) {
  Series s = Series::one(trunc);
  mul_poch(s, a, base, n);
  return s;
}

Series poch_infinite(Monomial a, int base, int trunc) {
  Series s = Series::one(trunc);
  mul_poch_inf(s, a, base);
  return s;
}

Series gauss_binom(int A, int B, int base, int trunc) {
  if (B < 0 || B > A) return Series::zero(trunc);
  const int deg = base * B * (A - B);
  Series s = Series::one(deg + 1);
  for (int j = 1; j <= B; ++j) s.mul_factor(Int(-1), 0, base * (A - B + j));
  for (int j = 1; j <= B; ++j) s.div_factor(Int(-1), 0, base * j);
  // s is a polynomial of degree deg; drop the truncation
  std::vector<XPoly> rows;
  for (int e = 0; e <= deg; ++e) rows.push_back(s.row(e));
  return Series::from_rows(0, std::move(rows), trunc);
}

std::string ProductExpr::str() const {
  std::ostringstream os;
  auto one = [&](const ProductFactor& f) {
    os << "(" << (f.sign < 0 ? "-" : "");
    if (f.x_exp) os << "x" << (f.x_exp != 1 ? "^" + std::to_string(f.x_exp) : "");
    if (f.q_exp || !f.x_exp) os << (f.x_exp ? "*" : "") << "q^" << f.q_exp;
    os << ";q^" << f.mod << ")";
  };
  for (auto& f : num) one(f);
  if (num.empty()) os << "1";
  if (!den.empty()) {
    os << " / ";
    for (auto& f : den) one(f);
  }
  return os.str();
}

Series product_expand(const ProductExpr& p, int trunc) {
  Series s = Series::one(trunc);
  for (const auto& f : p.num) mul_poch_inf(s, Monomial{f.sign, f.x_exp, f.q_exp}, f.mod);
  for (const auto& f : p.den) {
    if (f.q_exp < 1) throw SeriesError("product_expand: denominator factor is not a unit");
    div_poch_inf(s, Monomial{f.sign, f.x_exp, f.q_exp}, f.mod);
  }
  return s;
}

ProductExpr triple_product(int a, int m) {
  return ProductExpr{{{1, a, m}, {1, m - a, m}, {1, m, m}}, {}};
}

Series theta_series(int a, int m, int trunc) {
  std::vector<XPoly> rows(trunc);
  // for 0 <= a <= m the exponent increases as |j| grows in either direction
  for (int dir : {1, -1}) {
    for (long long j = (dir > 0 ? 0 : -1);; j += dir) {
      long long e = m * j * (j - 1) / 2 + a * j;
      if (e >= trunc) break;
      if (e < 0) throw SeriesError("theta_series: negative exponent");
      rows[e].add_term(0, Int(j % 2 == 0 ? 1 : -1));
    }
  }
  return Series::from_rows(0, std::move(rows), trunc);
}

}  // namespace rrs
