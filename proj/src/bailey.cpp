#include "rrs/bailey.hpp"

#include <algorithm>

#include "rrs/qtools.hpp"

namespace rrs {

std::string family_name(Family f) {
  switch (f) {
    case Family::S: return "S";
    case Family::E: return "E";
    case Family::JS: return "JS";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "S" || s == "SMBP") return Family::S;
  if (s == "E" || s == "EMBP") return Family::E;
  if (s == "JS" || s == "JSMBP") return Family::JS;
  throw std::invalid_argument("unknown family: " + s);
}

std::string case_name(BLCase c) {
  switch (c) {
    case BLCase::W: return "W";
    case BLCase::T: return "T";
    case BLCase::S: return "S";
  }
  return "?";
}

BLCase parse_case(const std::string& s) {
  if (s == "W") return BLCase::W;
  if (s == "T") return BLCase::T;
  if (s == "S") return BLCase::S;
  throw std::invalid_argument("unknown Bailey lemma case: " + s);
}

namespace {

int sgn_pow(int m) { return m % 2 == 0 ? 1 : -1; }

// exact * unit, where the unit part is only known to finite order: raise the
// working order of the unit by the negative valuation of the exact part
template <class UnitFn>
Series exact_times_unit(const Series& exact_part, int trunc, UnitFn unit) {
  if (exact_part.is_zero()) return Series::zero(trunc);
  Series u = Series::one(trunc - std::min(0, exact_part.low()));
  unit(u);
  return mul(exact_part, u);
}

}  // namespace

Series mbp_alpha(const MBPParams& p, int n, int trunc, bool twist) {
  const int d = p.d, k = p.k;
  if (n % d != 0) return Series::zero(trunc);
  const int m = n / d;
  const int qs = p.family == Family::JS ? 2 : 1;

  // SMBP part at (x^e, q^{qs e})
  int sign = sgn_pow(m) * (twist ? sgn_pow(m) : 1);
  Series ex = Series::monomial(Int(sign), (k - d) * m, qs * ((k - d) * d * m * m + d * m * (m - 1) / 2));
  if (m >= 1) {
    ex.mul_factor(Int(-1), 1, qs * 2 * d * m);
    mul_poch(ex, Monomial{1, 1, qs * d}, qs * d, m - 1);
  }
  if (p.family == Family::E) {
    ex = ex.shifted(-m, d * m * (1 - m) / 2);
    mul_poch(ex, Monomial{-1, 1, 0}, d, m);
  } else if (p.family == Family::JS) {
    ex = ex.shifted(0, -d * m * m, Int(sgn_pow(m)));
    mul_poch(ex, Monomial{1, 0, d}, 2 * d, m);
  }
  const Family fam = p.family;
  return exact_times_unit(ex, trunc, [&](Series& u) {
    div_poch(u, Monomial{1, 0, qs * d}, qs * d, m);
    if (fam == Family::E) div_poch(u, Monomial{-1, 0, d}, d, m);
    if (fam == Family::JS) div_poch(u, Monomial{1, 1, d}, 2 * d, m);
  });
}

Series mbp_beta_closed(const MBPParams& p, int n, int trunc) {
  const int d = p.d, e = p.e, k = p.k;
  const bool js = p.family == Family::JS;
  const bool eu = p.family == Family::E;
  const int qs = js ? 2 : 1;
  const int Q = qs * e;  // pair base exponent
  Series total = Series::zero(trunc);
  for (int r = 0; r <= n / d; ++r) {
    // exact part: sign * x^a q^b * (well-poised factor) * (q^{-Qn}; q^Q)_{dr}
    long long two_b;
    int sign, xa;
    if (p.family == Family::S) {
      two_b = static_cast<long long>(1 + 2 * k - 2 * d - d * e) * d * r * r + static_cast<long long>(2 * e * n + e - 1) * d * r;
      sign = sgn_pow((d + 1) * r);
      xa = (k - d) * r;
    } else if (eu) {
      two_b = static_cast<long long>(2 * k - 2 * d - d * e) * d * r * r + static_cast<long long>(2 * e * n + e) * d * r;
      sign = sgn_pow((d + 1) * r);
      xa = (k - d - 1) * r;
    } else {
      two_b = 2 * (static_cast<long long>(2 * k - 2 * d - d * e) * d * r * r + static_cast<long long>(2 * e * n + e - 1) * d * r);
      sign = sgn_pow(d * r);
      xa = (k - d) * r;
    }
    if (two_b % 2 != 0) throw SeriesError("mbp_beta_closed: non-integral exponent");
    Series ex = Series::monomial(Int(sign), xa, static_cast<int>(two_b / 2));
    if (r >= 1) {
      if (eu) {
        // (x^2;q^{2d})_r / (1-x) = (1+x)(x^2 q^{2d};q^{2d})_{r-1}
        ex.mul_factor(Int(1), 1, 0);
        mul_poch(ex, Monomial{1, 2, 2 * d}, 2 * d, r - 1);
        ex.mul_factor(Int(-1), 1, 2 * d * r);
      } else {
        // (x;q^D)_r / (1-x) = (x q^D;q^D)_{r-1}
        mul_poch(ex, Monomial{1, 1, qs * d}, qs * d, r - 1);
        ex.mul_factor(Int(-1), 1, qs * 2 * d * r);
      }
      if (js) mul_poch(ex, Monomial{1, 0, d}, 2 * d, r);
    }
    mul_poch(ex, Monomial{1, 0, -Q * n}, Q, d * r);
    if (ex.is_zero()) continue;
    Series term = exact_times_unit(ex, trunc, [&](Series& u) {
      if (eu) div_poch(u, Monomial{1, 0, 2 * d}, 2 * d, r);
      else div_poch(u, Monomial{1, 0, qs * d}, qs * d, r);
      div_poch(u, Monomial{1, e, Q * (n + 1)}, Q, d * r);
      if (js) div_poch(u, Monomial{1, 1, d}, 2 * d, r);
    });
    total += term;
  }
  // JS111 is genuinely Laurent (q^{-n} at the doubled base); S and E are not once k >= d
  if (!js && p.k >= d && !total.is_zero() && total.low() < 0) throw SeriesError("mbp_beta_closed: Laurent residue at top level");
  div_poch(total, Monomial{1, 0, Q}, Q, n);
  div_poch(total, Monomial{1, e, Q}, Q, n);
  return total;
}

Series beta_from_alpha(const std::vector<Series>& alpha, int n, int x_exp, int q_base, int trunc) {
  Series total = Series::zero(trunc);
  for (int r = 0; r <= n; ++r) {
    const Series& a = alpha.at(r);
    if (a.is_zero()) continue;
    Series t = a.truncated(trunc);
    div_poch(t, Monomial{1, 0, q_base}, q_base, n - r);
    div_poch(t, Monomial{1, x_exp, q_base}, q_base, n + r);
    total += t;
  }
  return total;
}

Series mbp_beta(const MBPParams& p, int n, int trunc, bool twist) {
  std::vector<Series> alpha;
  for (int r = 0; r <= n; ++r) alpha.push_back(mbp_alpha(p, r, trunc, twist));
  return beta_from_alpha(alpha, n, p.e, pair_base(p), trunc);
}

Series q_compress(const Series& s, int g) {
  if (g == 1) return s;
  std::vector<XPoly> rows;
  int low = 0;
  if (!s.is_zero()) {
    if (s.low() % g != 0) throw SeriesError("q_compress: exponent not divisible");
    low = s.low() / g;
    for (int e = s.low(); e < s.high(); ++e) {
      if (e % g == 0) rows.push_back(s.row(e));
      else if (!s.row(e).is_zero()) throw SeriesError("q_compress: exponent not divisible");
    }
  }
  int t = s.exact() ? Series::kExact : (s.trunc() >= 0 ? (s.trunc() + g - 1) / g : -((-s.trunc()) / g));
  return Series::from_rows(low, std::move(rows), t);
}

namespace {

struct Lemma {
  int cc;  // q = w^cc
  int g;   // lam = w^g
};

Lemma lemma_scale(BLCase c, int s) {
  int t = c == BLCase::T ? 2 : 1;
  int cc = 1;
  while ((s * cc) % t) ++cc;
  return Lemma{cc, s * cc / t};
}

// pair-level series in (x, q) -> (x, w) with q = w^cc and x specialised
Series to_w(const Series& a, int cc, std::optional<Monomial> xset) { return substitute(a, cc, 0, xset); }

BLResult bl_once(BLCase c, const MBPParams& p, int Nw, XValue xv, bool twist, int margin) {
  const int s = pair_base(p);
  const Lemma L = lemma_scale(c, s);
  const int g = L.g, cc = L.cc;
  std::optional<Monomial> xset;
  int xw = 0;  // X = x^e = sign w^xw when not formal
  if (!xv.formal) {
    if ((g * xv.lam_exp) % p.e != 0) throw SeriesError("bl_insert: x value not reachable from x^e");
    if (xv.sign < 0 && p.e % 2 == 0) throw SeriesError("bl_insert: x^e = -1 with e even");
    xset = Monomial{xv.sign, 0, g * xv.lam_exp / p.e};
    xw = g * xv.lam_exp;
  }
  // t *= (1 + sgn X lam^j) or t /= (1 + sgn X lam^j)
  auto X_factor = [&](Series& t, int sgn, int j, bool divide) {
    Int cf(sgn);
    int xa = 0, qb = g * j;
    if (xv.formal) xa = p.e;
    else {
      qb += xw;
      if (xv.sign < 0) cf = -cf;
    }
    if (divide) t.div_factor(cf, xa, qb);
    else t.mul_factor(cf, xa, qb);
  };

  const int Pq = (Nw + cc - 1) / cc + margin;
  std::vector<Series> alpha;
  Series lhs = Series::zero(Nw), rhs = Series::zero(Nw);
  int zero_run = 0;
  for (int n = 0;; ++n) {
    long long wt = c == BLCase::S ? static_cast<long long>(g) * n * (n + 1) / 2 : static_cast<long long>(g) * n * n;
    if (wt >= Nw && zero_run > p.d) break;
    alpha.push_back(mbp_alpha(p, n, Pq, twist));
    Series beta = beta_from_alpha(alpha, n, p.e, s, Pq);
    // X^n lam^wt and the case weight, exact
    Series weight = xv.formal ? Series::monomial(Int(1), p.e * n, static_cast<int>(wt))
                              : Series::monomial(Int(xv.sign < 0 && n % 2 ? -1 : 1), 0, static_cast<int>(wt + static_cast<long long>(xw) * n));
    if (c == BLCase::T) mul_poch(weight, Monomial{-1, 0, g}, 2 * g, n);
    if (c == BLCase::S && n >= 1) {
      weight.scale(Int(2));
      mul_poch(weight, Monomial{-1, 0, g}, g, n - 1);
    }
    Series bt = mul(weight, to_w(beta, cc, xset));
    Series at = mul(weight, to_w(alpha[n], cc, xset));
    if (c == BLCase::T)
      for (int j = 0; j < n; ++j) X_factor(at, 1, 1 + 2 * j, true);
    if (c == BLCase::S)
      for (int j = 0; j < n; ++j) X_factor(at, 1, 1 + j, true);
    bool zero = (bt.is_zero() || bt.low() >= Nw) && (at.is_zero() || at.low() >= Nw);
    zero_run = zero ? zero_run + 1 : 0;
    lhs += bt;
    rhs += at;
  }
  auto inf_factor = [&](Series& t, int sgn, int j0, int step, bool divide) {
    for (int j = j0; g * j < t.trunc(); j += step) X_factor(t, sgn, j, divide);
  };
  switch (c) {
    case BLCase::W: inf_factor(rhs, -1, 1, 1, true); break;
    case BLCase::T:
      inf_factor(rhs, 1, 1, 2, false);
      inf_factor(rhs, -1, 2, 2, true);
      break;
    case BLCase::S:
      inf_factor(rhs, 1, 1, 1, false);
      inf_factor(rhs, -1, 1, 1, true);
      break;
  }
  return BLResult{lhs, rhs};
}

}  // namespace

BLResult bl_insert(BLCase c, const MBPParams& p, int trunc, XValue x, bool twist) {
  const Lemma L = lemma_scale(c, pair_base(p));
  // W stays in the pair's q (weight q^{s n^2}); T and S are read in the lemma variable
  const int out = c == BLCase::W ? L.cc : L.g;
  const int Nw = trunc * out;
  int margin = 0;
  for (int attempt = 0; attempt < 6; ++attempt) {
    BLResult r = bl_once(c, p, Nw, x, twist, margin);
    int got = std::min(r.lhs.trunc(), r.rhs.trunc());
    if (got >= Nw) {
      r.lhs.set_trunc(Nw);
      r.rhs.set_trunc(Nw);
      return BLResult{q_compress(r.lhs, out), q_compress(r.rhs, out)};
    }
    margin += (Nw - got + L.cc - 1) / L.cc + 1;
  }
  throw SeriesError("bl_insert: could not reach the requested order");
}

BLResult bl_insert_slater_xq(const MBPParams& p, int trunc, bool twist) {
  const int s = pair_base(p);
  const int Nq = trunc * s;
  const Monomial xset{1, 0, s / p.e};
  int margin = 0;
  for (int attempt = 0; attempt < 6; ++attempt) {
    const int P = Nq + margin;
    std::vector<Series> alpha;
    Series lhs = Series::zero(Nq), rhs = Series::zero(Nq);
    int zero_run = 0;
    for (int n = 0;; ++n) {
      const int wt = s * n * (n + 1) / 2;
      if (wt >= Nq && zero_run > p.d) break;
      alpha.push_back(mbp_alpha(p, n, P, twist));
      Series beta = beta_from_alpha(alpha, n, p.e, s, P);
      Series weight = Series::monomial(Int(1), 0, wt);
      Series bt = weight;
      mul_poch(bt, Monomial{-1, 0, s}, s, n);
      bt = mul(bt, substitute(beta, 1, 0, xset));
      Series at = mul(weight, substitute(alpha[n], 1, 0, xset));
      bool zero = (bt.is_zero() || bt.low() >= Nq) && (at.is_zero() || at.low() >= Nq);
      zero_run = zero ? zero_run + 1 : 0;
      lhs += bt;
      rhs += at;
    }
    div_poch(lhs, Monomial{1, 0, s}, s, 1);
    mul_poch_inf(rhs, Monomial{-1, 0, s}, s);
    div_poch_inf(rhs, Monomial{1, 0, s}, s);
    int got = std::min(lhs.trunc(), rhs.trunc());
    if (got >= Nq) {
      lhs.set_trunc(Nq);
      rhs.set_trunc(Nq);
      return BLResult{q_compress(lhs, s), q_compress(rhs, s)};
    }
    margin += Nq - got + 1;
  }
  throw SeriesError("bl_insert_slater_xq: could not reach the requested order");
}

}  // namespace rrs
