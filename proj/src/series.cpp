#include "rrs/series.hpp"

#include <algorithm>
#include <sstream>

namespace rrs {

SeriesConfig& series_config() {
  static SeriesConfig cfg;
  return cfg;
}

// ---- XPoly

Int XPoly::at(int xe) const {
  if (xe < lo() || xe > hi()) return Int(0);
  return c[xe - off];
}

void XPoly::trim() {
  size_t b = 0;
  while (b < c.size() && c[b].is_zero()) ++b;
  if (b == c.size()) {
    c.clear();
    off = 0;
    return;
  }
  size_t e = c.size();
  while (c[e - 1].is_zero()) --e;
  c.erase(c.begin() + e, c.end());
  c.erase(c.begin(), c.begin() + b);
  off += static_cast<int>(b);
}

void XPoly::add_scaled(const XPoly& p, const Int& s, int xs) {
  if (p.is_zero() || s.is_zero()) return;
  int plo = p.lo() + xs, phi = p.hi() + xs;
  if (is_zero()) {
    off = plo;
    c.assign(p.c.size(), Int(0));
  } else {
    int nlo = std::min(lo(), plo), nhi = std::max(hi(), phi);
    if (nlo < lo()) c.insert(c.begin(), lo() - nlo, Int(0));
    off = nlo;
    c.resize(nhi - nlo + 1);
  }
  for (size_t j = 0; j < p.c.size(); ++j) c[plo - off + j].addmul(p.c[j], s);
  trim();
}

void XPoly::add_term(int xe, const Int& v) {
  XPoly m;
  m.off = xe;
  m.c.push_back(v);
  add_scaled(m, Int(1), 0);
}

// ---- Series basics

Series Series::zero(int trunc) {
  Series s;
  s.trunc_ = trunc;
  return s;
}

Series Series::one(int trunc) { return monomial(Int(1), 0, 0, trunc); }

Series Series::constant(const Int& c, int trunc) { return monomial(c, 0, 0, trunc); }

Series Series::monomial(const Int& c, int xe, int qe, int trunc) {
  Series s;
  s.trunc_ = trunc;
  if (!c.is_zero() && qe < trunc) {
    s.low_ = qe;
    s.rows_.resize(1);
    s.rows_[0].off = xe;
    s.rows_[0].c.push_back(c);
  }
  return s;
}

Series Series::from_rows(int low, std::vector<XPoly> rows, int trunc) {
  Series s;
  s.low_ = low;
  s.rows_ = std::move(rows);
  s.trunc_ = trunc;
  for (auto& r : s.rows_) r.trim();
  s.normalize();
  return s;
}

const XPoly& Series::row(int qe) const {
  static const XPoly kZero;
  if (rows_.empty() || qe < low_ || qe >= high()) return kZero;
  return rows_[qe - low_];
}

int Series::x_min() const {
  int m = 0;
  bool first = true;
  for (const auto& r : rows_)
    if (!r.is_zero()) {
      m = first ? r.lo() : std::min(m, r.lo());
      first = false;
    }
  return m;
}

int Series::x_max() const {
  int m = 0;
  bool first = true;
  for (const auto& r : rows_)
    if (!r.is_zero()) {
      m = first ? r.hi() : std::max(m, r.hi());
      first = false;
    }
  return m;
}

XPoly& Series::row_mut(int qe) {
  if (rows_.empty()) {
    low_ = qe;
    rows_.resize(1);
  } else if (qe < low_) {
    rows_.insert(rows_.begin(), low_ - qe, XPoly{});
    low_ = qe;
  } else if (qe >= high()) {
    rows_.resize(qe - low_ + 1);
  }
  return rows_[qe - low_];
}

void Series::normalize() {
  while (!rows_.empty() && high() > trunc_) rows_.pop_back();
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
  size_t b = 0;
  while (b < rows_.size() && rows_[b].is_zero()) ++b;
  if (b) {
    rows_.erase(rows_.begin(), rows_.begin() + b);
    low_ += static_cast<int>(b);
  }
  if (rows_.empty()) low_ = 0;
}

void Series::check_cap() const {
  // Laurent series are measured from their lowest exponent
  const int cap = series_config().x_cap - std::min(0, low_);
  for (size_t i = 0; i < rows_.size(); ++i) {
    int e = low_ + static_cast<int>(i);
    if (e >= 0 && !rows_[i].is_zero() && rows_[i].hi() > e + cap)
      throw SeriesError("x-degree cap exceeded at q^" + std::to_string(e) + " (x^" +
                        std::to_string(rows_[i].hi()) + ")");
  }
}

Series& Series::set_trunc(int t) {
  if (t < trunc_) {
    trunc_ = t;
    normalize();
  }
  return *this;
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& row : r.rows_)
    for (auto& v : row.c) v = -v;
  return r;
}

Series& Series::operator+=(const Series& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  for (int e = o.low(); e < std::min(o.high(), trunc_); ++e) {
    const XPoly& p = o.row(e);
    if (!p.is_zero()) row_mut(e).add_scaled(p, Int(1), 0);
  }
  normalize();
  return *this;
}

Series& Series::operator-=(const Series& o) {
  trunc_ = std::min(trunc_, o.trunc_);
  for (int e = o.low(); e < std::min(o.high(), trunc_); ++e) {
    const XPoly& p = o.row(e);
    if (!p.is_zero()) row_mut(e).add_scaled(p, Int(-1), 0);
  }
  normalize();
  return *this;
}

Series& Series::scale(const Int& c) {
  if (c.is_zero()) {
    rows_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& row : rows_)
    for (auto& v : row.c) v = v * c;
  return *this;
}

Series Series::shifted(int xe, int qe, const Int& c) const {
  Series r = *this;
  r.low_ += qe;
  if (!r.exact()) r.trunc_ += qe;
  for (auto& row : r.rows_)
    if (!row.is_zero()) row.off += xe;
  if (!(c == Int(1))) r.scale(c);
  r.normalize();
  return r;
}

void Series::mul_factor(const Int& c, int xa, int qb) {
  if (qb < 0) throw SeriesError("mul_factor: negative q exponent");
  if (rows_.empty() || c.is_zero()) return;
  if (qb == 0) {
    for (auto& row : rows_) {
      XPoly old = row;
      row.add_scaled(old, c, xa);
    }
    normalize();
    check_cap();
    return;
  }
  int top = exact() ? high() + qb : std::min(trunc_, high() + qb);
  if (top > high()) rows_.resize(top - low_);
  for (int e = top - 1; e >= low_ + qb; --e) {
    const XPoly& src = rows_[e - qb - low_];
    if (!src.is_zero()) rows_[e - low_].add_scaled(src, c, xa);
  }
  normalize();
  check_cap();
}

void Series::div_factor(const Int& c, int xa, int qb) {
  if (qb < 1) throw SeriesError("div_factor: q exponent must be positive");
  if (rows_.empty() || c.is_zero()) return;
  if (exact()) throw SeriesError("div_factor: needs a finite truncation");
  if (trunc_ > high()) rows_.resize(trunc_ - low_);
  for (int e = low_ + qb; e < trunc_; ++e) {
    const XPoly& src = rows_[e - qb - low_];
    if (!src.is_zero()) rows_[e - low_].add_scaled(src, -c, xa);
  }
  normalize();
  check_cap();
}

Series Series::x_coeff(int xe) const {
  Series r;
  r.trunc_ = trunc_;
  for (int e = low(); e < high(); ++e) {
    Int v = row(e).at(xe);
    if (!v.is_zero()) r.row_mut(e).add_term(0, v);
  }
  r.normalize();
  return r;
}

namespace {
std::string xpoly_str(const XPoly& p) {
  std::ostringstream os;
  bool first = true;
  for (int j = p.lo(); j <= p.hi(); ++j) {
    Int v = p.at(j);
    if (v.is_zero()) continue;
    std::string s = v.str();
    bool neg = s[0] == '-';
    if (neg) s = s.substr(1);
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    if (j == 0) os << s;
    else {
      if (s != "1") os << s << "*";
      os << "x";
      if (j != 1) os << "^" << j;
    }
  }
  return os.str();
}
}  // namespace

std::string Series::str(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (int e = low(); e < high() && shown < max_terms; ++e) {
    const XPoly& p = row(e);
    if (p.is_zero()) continue;
    if (shown) os << " + ";
    bool single = p.c.size() == 1;
    std::string ps = xpoly_str(p);
    if (e == 0) os << (single ? ps : "(" + ps + ")");
    else {
      if (!(single && p.off == 0 && p.c[0] == Int(1))) os << (single ? ps : "(" + ps + ")") << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    ++shown;
  }
  if (!shown) os << "0";
  if (!exact()) os << " + O(q^" << trunc_ << ")";
  return os.str();
}

// ---- products

int mul_trunc(const Series& a, const Series& b) {
  if (a.exact() && b.exact()) return Series::kExact;
  // valuation of a truncated zero series is its truncation order
  auto val = [](const Series& s) -> long long { return s.is_zero() ? s.trunc() : s.low(); };
  long long t = Series::kExact;
  if (!a.exact()) t = std::min(t, a.trunc() + val(b));
  if (!b.exact()) t = std::min(t, b.trunc() + val(a));
  return static_cast<int>(t);
}

Series mul(const Series& a, const Series& b) {
  Series r;
  r.trunc_ = mul_trunc(a, b);
  if (a.is_zero() || b.is_zero()) return r;
  const int elo = a.low() + b.low();
  const int ehi = std::min(r.trunc_, a.high() + b.high() - 1);
  if (ehi <= elo) return r;
  const int nrows = ehi - elo;
  r.low_ = elo;
  r.rows_.resize(nrows);
#pragma omp parallel for schedule(dynamic, 1) if (nrows >= series_config().par_threshold)
  for (int idx = 0; idx < nrows; ++idx) {
    const int e = elo + idx;
    const int ilo = std::max(a.low(), e - (b.high() - 1));
    const int ihi = std::min(a.high() - 1, e - b.low());
    int xlo = 0, xhi = -1;
    bool any = false;
    for (int i = ilo; i <= ihi; ++i) {
      const XPoly& p = a.row(i);
      const XPoly& q = b.row(e - i);
      if (p.is_zero() || q.is_zero()) continue;
      int lo = p.lo() + q.lo(), hi = p.hi() + q.hi();
      if (!any) {
        xlo = lo;
        xhi = hi;
        any = true;
      } else {
        xlo = std::min(xlo, lo);
        xhi = std::max(xhi, hi);
      }
    }
    if (!any) continue;
    XPoly& out = r.rows_[idx];
    out.off = xlo;
    out.c.assign(xhi - xlo + 1, Int(0));
    for (int i = ilo; i <= ihi; ++i) {
      const XPoly& p = a.row(i);
      const XPoly& q = b.row(e - i);
      if (p.is_zero() || q.is_zero()) continue;
      const int base = p.off + q.off - xlo;
      for (size_t u = 0; u < p.c.size(); ++u) {
        if (p.c[u].is_zero()) continue;
        Int* dst = out.c.data() + base + u;
        for (size_t v = 0; v < q.c.size(); ++v) dst[v].addmul(p.c[u], q.c[v]);
      }
    }
    out.trim();
  }
  r.normalize();
  r.check_cap();
  return r;
}

Series mul_serial(const Series& a, const Series& b) {
  Series r;
  r.trunc_ = mul_trunc(a, b);
  for (int i = a.low(); i < a.high(); ++i) {
    const XPoly& p = a.row(i);
    if (p.is_zero()) continue;
    for (int j = b.low(); j < b.high() && i + j < r.trunc_; ++j) {
      const XPoly& q = b.row(j);
      if (q.is_zero()) continue;
      XPoly& out = r.row_mut(i + j);
      for (size_t u = 0; u < p.c.size(); ++u) out.add_scaled(q, p.c[u], p.off + static_cast<int>(u));
    }
  }
  r.normalize();
  r.check_cap();
  return r;
}

Series invert(const Series& a) {
  if (a.is_zero()) throw SeriesError("invert: zero series");
  const int L = a.low();
  const XPoly& lead = a.row(L);
  if (lead.c.size() != 1 || lead.off != 0 || !(lead.c[0] == Int(1) || lead.c[0] == Int(-1)))
    throw SeriesError("invert: leading term is not a unit");
  if (a.exact() && a.high() - L == 1) return Series::monomial(lead.c[0], 0, -L);
  if (a.exact()) throw SeriesError("invert: needs a finite truncation");
  const Int s = lead.c[0];
  const int n = a.trunc() - L;  // rows of u^{-1}
  Series r;
  r.trunc_ = a.trunc() - 2 * L;
  if (n <= 0) return r;
  std::vector<XPoly> b(n);
  b[0].c.push_back(s);
  for (int e = 1; e < n; ++e) {
    XPoly acc;
    for (int j = 1; j <= e; ++j) {
      const XPoly& u = a.row(L + j);
      if (u.is_zero() || b[e - j].is_zero()) continue;
      for (size_t t = 0; t < u.c.size(); ++t) acc.add_scaled(b[e - j], u.c[t], u.off + static_cast<int>(t));
    }
    for (auto& v : acc.c) v = s == Int(1) ? -v : v;
    b[e] = std::move(acc);
  }
  r.low_ = -L;
  r.rows_ = std::move(b);
  r.normalize();
  r.check_cap();
  return r;
}

Series substitute(const Series& a, int m, int s, std::optional<Monomial> x_set) {
  if (m < 1) throw SeriesError("substitute: q power must be positive");
  const bool ex = a.exact();
  const int amin = std::min(0, a.x_min());
  long long T = a.trunc();
  if (!ex) {
    T *= m;
    if (s < 0) throw SeriesError("substitute: x -> x q^s with s < 0 needs an exact series");
    T += static_cast<long long>(s) * amin;
    if (x_set) {
      if (x_set->q_exp < 0) throw SeriesError("substitute: x_set with negative q exponent needs an exact series");
      T += static_cast<long long>(x_set->q_exp) * amin;
    }
  }
  Series r;
  r.trunc_ = ex ? Series::kExact : static_cast<int>(T);
  for (int e = a.low(); e < a.high(); ++e) {
    const XPoly& p = a.row(e);
    for (int j = p.lo(); j <= p.hi() && !p.is_zero(); ++j) {
      Int v = p.at(j);
      if (v.is_zero()) continue;
      long long qe = static_cast<long long>(e) * m + static_cast<long long>(s) * j;
      int xe = j;
      if (x_set) {
        qe += static_cast<long long>(x_set->q_exp) * j;
        xe = x_set->x_exp * j;
        if (x_set->sign < 0 && (j % 2 != 0)) v = -v;
      }
      if (qe >= r.trunc_) continue;
      r.row_mut(static_cast<int>(qe)).add_term(xe, v);
    }
  }
  r.normalize();
  if (!r.exact() && r.trunc_ <= r.low()) throw SeriesError("substitute: empty truncation window");
  r.check_cap();
  return r;
}

OrderReport equal_to_order(const Series& a, const Series& b) {
  OrderReport rep;
  int M = std::min(a.trunc(), b.trunc());
  if (M >= Series::kExact) M = std::max(a.high(), b.high());
  for (int e = std::min(a.low(), b.low()); e < M; ++e) {
    const XPoly& p = a.row(e);
    const XPoly& q = b.row(e);
    if (p == q) continue;
    int lo = std::min(p.is_zero() ? q.lo() : p.lo(), q.is_zero() ? p.lo() : q.lo());
    int hi = std::max(p.is_zero() ? q.hi() : p.hi(), q.is_zero() ? p.hi() : q.hi());
    for (int j = lo; j <= hi; ++j)
      if (p.at(j) != q.at(j)) {
        rep.verified_order = e;
        rep.mismatch = Mismatch{e, j, p.at(j).str(), q.at(j).str()};
        return rep;
      }
  }
  rep.verified_order = M;
  return rep;
}

}  // namespace rrs
