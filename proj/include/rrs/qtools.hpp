#pragma once
// q-Pochhammer symbols, infinite products, Gaussian binomials.

#include <string>
#include <vector>

#include "rrs/series.hpp"

namespace rrs {

// (a; q^base)_n, n >= 0. Exact when trunc is Series::kExact and no factor needs truncation.
Series poch_finite(Monomial a, int base, int n, int trunc = Series::kExact);
// (a; q^base)_inf, all factors with q-exponent < trunc
Series poch_infinite(Monomial a, int base, int trunc);

// In-place variants. n may be negative: (a;Q)_n = 1/(a Q^n; Q)_{-n}.
void mul_poch(Series& s, Monomial a, int base, int n);
void div_poch(Series& s, Monomial a, int base, int n);
void mul_poch_inf(Series& s, Monomial a, int base);
void div_poch_inf(Series& s, Monomial a, int base);

// [A, B] in q^base; zero unless 0 <= B <= A
Series gauss_binom(int A, int B, int base = 1, int trunc = Series::kExact);

struct ProductFactor {
  int sign = 1;  // term is sign * x^x_exp * q^q_exp
  int q_exp = 0;
  int mod = 1;
  int x_exp = 0;
};

// prod (num; q^mod)_inf / prod (den; q^mod)_inf
struct ProductExpr {
  std::vector<ProductFactor> num;
  std::vector<ProductFactor> den;
  std::string str() const;
};

Series product_expand(const ProductExpr& p, int trunc);

// (q^a, q^{m-a}, q^m; q^m)_inf
ProductExpr triple_product(int a, int m);
// sum_j (-1)^j q^{m j(j-1)/2 + a j}
Series theta_series(int a, int m, int trunc);

}  // namespace rrs
