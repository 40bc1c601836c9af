#pragma once
// The standard, Euler and Jackson-Slater multiparameter Bailey pairs and the
// limiting cases of the Bailey lemma.

#include <optional>
#include <string>
#include <vector>

#include "rrs/series.hpp"

namespace rrs {

enum class Family { S, E, JS };

struct MBPParams {
  Family family = Family::S;
  int d = 1, e = 1, k = 1;
};

std::string family_name(Family f);
Family parse_family(const std::string& s);

// q-exponent of the pair's base: alpha_n, beta_n are returned at (x^e, q^base)
inline int pair_base(const MBPParams& p) { return p.family == Family::JS ? 2 * p.e : p.e; }

// alpha_n at the dilated arguments, optionally twisted by (-1)^{n/d}
Series mbp_alpha(const MBPParams& p, int n, int trunc, bool twist = false);

// closed-form r-sum for beta_n
Series mbp_beta_closed(const MBPParams& p, int n, int trunc);

// beta_n = sum_r alpha_r / ((Q;Q)_{n-r} (X Q;Q)_{n+r}), X = x^x_exp, Q = q^q_base
Series beta_from_alpha(const std::vector<Series>& alpha, int n, int x_exp, int q_base, int trunc);

// beta_n via beta_from_alpha on mbp_alpha
Series mbp_beta(const MBPParams& p, int n, int trunc, bool twist = false);

enum class BLCase { W, T, S };
std::string case_name(BLCase c);
BLCase parse_case(const std::string& s);

// Value for the lemma's x. With formal = false, x := sign * lam^lam_exp where lam
// is the lemma's q.
struct XValue {
  bool formal = false;
  int sign = 1;
  int lam_exp = 0;
};

struct BLResult {
  Series lhs;  // weighted beta sum
  Series rhs;  // prefactor times weighted alpha sum
};

// The pair is taken at (x^e, q^{base}); the lemma variable lam is chosen so that the
// pair's base is lam (W, S) or lam^2 (T). W results are series in the pair's q,
// T and S results are series in lam.
BLResult bl_insert(BLCase c, const MBPParams& p, int trunc, XValue x, bool twist = false);

// Slater's x = q specialisation with the (-q;q)_n weight:
// 1/(1-q) sum q^{n(n+1)/2} (-q;q)_n beta_n(q,q) = (-q;q)_inf/(q;q)_inf sum q^{n(n+1)/2} alpha_n(q,q)
BLResult bl_insert_slater_xq(const MBPParams& p, int trunc, bool twist = false);

// replaces q^(g j) by q^j; throws if some exponent is not a multiple of g
Series q_compress(const Series& s, int g);

}  // namespace rrs
