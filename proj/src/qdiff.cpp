#include "rrs/qdiff.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace rrs {

namespace {

int half(long long twice, const char* what) {
  if (twice % 2 != 0) throw SeriesError(std::string("h_function: non-integral exponent (") + what + ")");
  return static_cast<int>(twice / 2);
}

// exact * unit, with the unit computed far enough to cover the exact part's valuation
template <class UnitFn>
Series exact_times_unit(const Series& ex, int trunc, UnitFn unit) {
  if (ex.is_zero() || ex.low() >= trunc) return Series::zero(trunc);
  Series u = Series::one(trunc - ex.low());
  unit(u);
  return mul(ex, u);
}

// 1 + y + ... + y^{i-1} for i > 0, 0 for i = 0, -(y^{-1} + ... + y^{i}) for i < 0
Series geometric_quotient(int i, int xm) {
  Series s;
  if (i > 0)
    for (int j = 0; j < i; ++j) s += Series::monomial(Int(1), xm * j, 0);
  else
    for (int j = 1; j <= -i; ++j) s += Series::monomial(Int(-1), -xm * j, 0);
  return s;
}

}  // namespace

Series h_function(const HParams& p, HArg y, int trunc) {
  const int B = p.base, ym = y.x_mult, ys = y.q_shift;
  const bool has_a = p.a_qexp.has_value();
  const int aq = has_a ? *p.a_qexp : 0;
  if (B < 1 || ym < 1 || ys < 0) throw SeriesError("h_function: bad argument");
  if (has_a && p.k2 <= 0) throw SeriesError("h_function: k must be positive when a != 0");
  if (!has_a && p.k2 < 0) throw SeriesError("h_function: k must be nonnegative");
  if (ys == 0 && p.i2 % 2 != 0) throw SeriesError("h_function: half-integer i needs y = x q^s with s > 0");

  // lower bound c2 n^2 - L n - C for the q-valuation of the n-th term
  const double c2 = B * p.k2 / 2.0 + (has_a ? 0.0 : B / 2.0);
  const double L = std::abs(B * (2 - p.i2)) / 2.0 + ys * p.k2 / 2.0 + B / 2.0 + std::abs(aq) + std::abs(p.i2) * B;
  const double C = std::abs(ys * p.i2) / 2.0 + (aq > 0 ? static_cast<double>(aq) * (aq / B + 1) : 0.0);

  Series total = Series::zero(trunc);
  for (long long n = 0;; ++n) {
    if (n > 0 && c2 * n * n - L * n - C >= trunc) break;
    const int xe = half(static_cast<long long>(ym) * p.k2 * n, "x");
    long long qe2 = static_cast<long long>(ys) * p.k2 * n + static_cast<long long>(B) * (p.k2 * n * n + (2 - p.i2) * n);
    qe2 += has_a ? 2LL * aq * n : static_cast<long long>(B) * n * (n - 1);
    Series ex = Series::monomial(Int(!has_a && n % 2 ? -1 : 1), xe, half(qe2, "q"));
    if (n == 0 && ys == 0) {
      ex = mul(ex, geometric_quotient(p.i2 / 2, ym));
    } else {
      const int xi = half(static_cast<long long>(ym) * p.i2, "x^i");
      const int qi = half(static_cast<long long>(ys) * p.i2 + 2LL * n * p.i2 * B, "q^i");
      ex = ex - ex.shifted(xi, qi);
    }
    if (has_a) mul_poch(ex, Monomial{1, 0, -aq}, B, static_cast<int>(n));
    const int nn = static_cast<int>(n);
    Series term = exact_times_unit(ex, trunc, [&](Series& u) {
      // (y;Q)_n / (y;Q)_inf, with the (1 - y) of n = 0, ys = 0 already divided out
      div_poch_inf(u, Monomial{1, ym, ys + B * nn + (n == 0 && ys == 0 ? B : 0)}, B);
      div_poch(u, Monomial{1, 0, B}, B, nn);
      if (has_a) {
        const int s = aq + ys + B * (nn + 1);
        if (s < 0) throw SeriesError("h_function: a y q^{n+1} has negative q-exponent");
        mul_poch_inf(u, Monomial{1, ym, s}, B);
      }
    });
    total += term;
  }
  return total;
}

Series j_function(const HParams& p, HArg y, int trunc) {
  HArg yq{y.x_mult, y.q_shift + p.base};
  Series r = h_function(p, yq, trunc);
  if (p.a_qexp) {
    const int s = *p.a_qexp + yq.q_shift;
    HParams pm = p;
    pm.i2 -= 2;
    r -= h_function(pm, yq, trunc - s).shifted(y.x_mult, s);
  }
  return r;
}

Series q_member(const MBPParams& p, int i, int trunc) {
  const int d = p.d, e = p.e, K = family_size(p);
  HParams hp;
  HArg y;
  switch (p.family) {
    case Family::S: hp = HParams{2 * K, 2 * i, std::nullopt, d}; break;
    case Family::E:
      hp = HParams{K - 1, i, std::nullopt, 2 * d};
      y.x_mult = 2;
      break;
    case Family::JS: hp = HParams{2 * K, 2 * i, -d, 2 * d}; break;
  }
  Series J = j_function(hp, y, trunc);
  if (J.is_zero()) return Series::zero(trunc);
  Series pre = Series::one(trunc - std::min(0, J.low()));
  switch (p.family) {
    case Family::S:
      mul_poch_inf(pre, Monomial{1, 1, d}, d);
      div_poch_inf(pre, Monomial{1, e, e}, e);
      break;
    case Family::E:
      mul_poch_inf(pre, Monomial{1, 2, 2 * d}, 2 * d);
      div_poch_inf(pre, Monomial{1, e, e}, e);
      break;
    case Family::JS:
      mul_poch_inf(pre, Monomial{1, 1, 2 * d}, 2 * d);
      div_poch_inf(pre, Monomial{1, e, 2 * e}, 2 * e);
      div_poch_inf(pre, Monomial{1, 1, d}, 2 * d);
      break;
  }
  Series r = mul(J, pre);
  r.set_trunc(trunc);
  return r;
}

QFamily q_family(const MBPParams& p, int trunc) {
  QFamily f{p, trunc, {}};
  for (int i = 1; i <= family_size(p); ++i) f.members[i] = q_member(p, i, trunc);
  return f;
}

Series f_family(const MBPParams& p, int trunc) {
  const int w = p.family == Family::JS ? 2 : 1;
  Series total = Series::zero(trunc);
  int zero_run = 0;
  for (int n = 0;; ++n) {
    const long long wt = static_cast<long long>(w) * p.e * n * n;
    if (wt >= trunc && zero_run > p.d) break;
    const int t = static_cast<int>(trunc - std::min<long long>(wt, trunc));
    Series term = mbp_beta_closed(p, n, t).shifted(p.e * n, static_cast<int>(wt));
    term.set_trunc(trunc);
    zero_run = term.is_zero() ? zero_run + 1 : 0;
    total += term;
  }
  return total;
}

namespace {

// right-hand coefficient applied to the shifted partner(s) of equation i
struct System {
  MBPParams p;
  int K, sigma;

  Series den(Series t) const {
    const int d = p.d, e = p.e;
    if (p.family == Family::JS) {
      div_poch(t, Monomial{1, e, 2 * e}, 2 * e, d);
      t.div_factor(Int(-1), 1, d);
    } else {
      div_poch(t, Monomial{1, e, e}, e, d);
    }
    return t;
  }
  Series numfac(Series t, int i) const {
    const int d = p.d;
    switch (p.family) {
      case Family::S:
        t.mul_factor(Int(-1), 1, d);
        return t.shifted(i - 1, d * (i - 1));
      case Family::E:
        t.mul_factor(Int(-1), 2, 2 * d);
        return t.shifted(i - 2, d * (i - 2));
      case Family::JS:
        t.mul_factor(Int(-1), 1, 2 * d);
        return t.shifted(i - 1, 2 * d * (i - 1) - d);
    }
    return t;
  }
  // the bracket of equation i; for JS this is q^d A - B (the q^{-d} is in numfac)
  template <class Get>
  Series partner(int i, Get get) const {
    Series a = substitute(get(K - i + 1), 1, sigma);
    if (p.family != Family::JS) return a;
    return a.shifted(0, p.d) - substitute(get(K - i + 2), 1, sigma);
  }
  int step() const { return p.family == Family::E ? 2 : 1; }
};

System make_system(const MBPParams& p) {
  return System{p, family_size(p), p.family == Family::JS ? 2 * p.d : p.d};
}

}  // namespace

Series member_one_from_top(const MBPParams& p, const Series& top) {
  // the equation i = 1 with its boundary terms folded in
  const System sys = make_system(p);
  Series t = substitute(top, 1, sys.sigma);
  t.mul_factor(Int(-1), 1, p.family == Family::JS ? 2 * p.d : p.d);
  return sys.den(t);
}

QFamily derive_family(const MBPParams& p, const Series& top, int trunc) {
  const System sys = make_system(p);
  const int K = sys.K;
  QFamily f{p, trunc, {}};
  f.members[K] = top.truncated(trunc);
  if (K == 1) return f;
  for (int i = 1; i < K; ++i) f.members[i] = Series::one(trunc);
  auto get = [&](int j) -> const Series& { return f.members.at(j); };

  auto first = [&]() { return member_one_from_top(p, f.members[K]); };

  for (int iter = 0; iter <= trunc / sys.sigma + 2; ++iter) {
    bool changed = false;
    auto assign = [&](int j, Series v) {
      v.set_trunc(trunc);
      if (!(v == f.members[j])) {
        f.members[j] = std::move(v);
        changed = true;
      }
    };
    assign(1, first());
    for (int i = 2; i < K; ++i) {
      const int lower = i - sys.step();
      Series base = lower >= 1 ? get(lower) : Series::zero(trunc);
      assign(i, base + sys.den(sys.numfac(sys.partner(i, get), i)));
    }
    if (!changed) return f;
  }
  throw SeriesError("derive_family: fixed point not reached");
}

QDiffReport verify_qdiff(const QFamily& fam) {
  const MBPParams& p = fam.params;
  const System sys = make_system(p);
  const int K = sys.K, N = fam.trunc;
  QDiffReport rep{p, N, {}, true};
  std::map<int, Series> extra;
  auto get = [&](int j) -> const Series& {
    auto it = fam.members.find(j);
    if (it != fam.members.end()) return it->second;
    auto [e, inserted] = extra.try_emplace(j);
    if (inserted) e->second = q_member(p, j, N);
    return e->second;
  };
  for (int i = 1; i <= K; ++i) {
    Series lhs = get(i) - get(i - sys.step());
    Series rhs = sys.numfac(sys.partner(i, get), i);
    // multiply through by the denominator instead of dividing
    if (p.family == Family::JS) {
      mul_poch(lhs, Monomial{1, p.e, 2 * p.e}, 2 * p.e, p.d);
      lhs.mul_factor(Int(-1), 1, p.d);
    } else {
      mul_poch(lhs, Monomial{1, p.e, p.e}, p.e, p.d);
    }
    OrderReport r = equal_to_order(lhs, rhs);
    if (!r.ok()) rep.failures.push_back(QDiffFailure{i, *r.mismatch});
  }
  for (int i = 1; i <= K; ++i)
    if (!equal_to_order(get(i).x_coeff(0), Series::one(N)).ok()) rep.initial_conditions_ok = false;
  return rep;
}

std::string QDiffReport::str() const {
  std::ostringstream os;
  os << family_name(params.family) << "(" << params.d << "," << params.e << "," << params.k << ") trunc " << trunc;
  if (ok()) return os.str() + " ok";
  if (!initial_conditions_ok) os << " initial-conditions-fail";
  for (const auto& f : failures)
    os << " i=" << f.i << " at q^" << f.where.q_exp << " x^" << f.where.x_exp << " (" << f.where.lhs << " vs " << f.where.rhs << ")";
  return os.str();
}

ProductExpr q_product_expr(const MBPParams& p, int i) {
  const int d = p.d, e = p.e, k = p.k;
  ProductExpr r;
  switch (p.family) {
    case Family::S: {
      const int M = d * (2 * e * d - 2 * d + 2 * k + 1);
      r.num = {{1, d * i, M}, {1, M - d * i, M}, {1, M, M}};
      r.den = {{1, e, e}};
      break;
    }
    case Family::E: {
      const int M = 2 * d * (d * e - d + k);
      r.num = {{1, d * i, M}, {1, M - d * i, M}, {1, M, M}};
      r.den = {{1, e, e}};
      break;
    }
    case Family::JS: {
      const int M = 4 * d * (d * e - d + k);
      r.num = {{-1, d * (2 * i - 1), M}, {-1, M - d * (2 * i - 1), M}, {1, M, M}};
      r.den = {{1, 2 * e, 2 * e}};
      break;
    }
  }
  return r;
}

Series q_product_at_one(const MBPParams& p, int i, int trunc) {
  const ProductExpr pe = q_product_expr(p, i);
  for (const auto& f : pe.num)
    if (f.sign == 1 && f.q_exp % f.mod == 0 && f.q_exp <= 0) return Series::zero(trunc);
  return product_expand(pe, trunc);
}

}  // namespace rrs
