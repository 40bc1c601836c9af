#pragma once
// Truncated series in q whose coefficients are Laurent polynomials in x.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrs/bigint.hpp"

namespace rrs {

struct SeriesError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial in x with an exponent offset: sum c[j] x^(off+j).
// Canonical: c empty (zero) or c.front(), c.back() nonzero.
struct XPoly {
  int off = 0;
  std::vector<Int> c;

  bool is_zero() const { return c.empty(); }
  int lo() const { return off; }
  int hi() const { return off + static_cast<int>(c.size()) - 1; }
  Int at(int xe) const;
  void trim();
  // this += s * x^xs * p
  void add_scaled(const XPoly& p, const Int& s, int xs);
  void add_term(int xe, const Int& v);
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.off == b.off && a.c == b.c; }
};

// Signed monomial s * x^x_exp * q^q_exp.
struct Monomial {
  int sign = 1;
  int x_exp = 0;
  int q_exp = 0;
};

struct SeriesConfig {
  int x_cap = 8;  // coefficient of q^e may have x-degree at most e + x_cap (e - low + x_cap when low < 0)
  int par_threshold = 24;  // rows below which mul stays serial
};
SeriesConfig& series_config();

class Series {
 public:
  static constexpr int kExact = 1 << 28;

  Series() = default;  // exact zero
  static Series zero(int trunc = kExact);
  static Series one(int trunc = kExact);
  static Series constant(const Int& c, int trunc = kExact);
  static Series monomial(const Int& c, int xe, int qe, int trunc = kExact);
  static Series from_rows(int low, std::vector<XPoly> rows, int trunc);

  int trunc() const { return trunc_; }
  bool exact() const { return trunc_ >= kExact; }
  // lowest stored q-exponent (0 for the zero series)
  int low() const { return rows_.empty() ? 0 : low_; }
  // one past the highest stored q-exponent
  int high() const { return low_ + static_cast<int>(rows_.size()); }
  bool is_zero() const { return rows_.empty(); }
  const XPoly& row(int qe) const;
  Int coeff(int qe, int xe) const { return row(qe).at(xe); }
  int x_min() const;
  int x_max() const;

  Series& set_trunc(int t);  // lower only
  Series truncated(int t) const { Series s = *this; s.set_trunc(t); return s; }

  Series operator-() const;
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  Series& scale(const Int& c);
  // multiply by c * x^xe * q^qe, exact monomial
  Series shifted(int xe, int qe, const Int& c = Int(1)) const;

  // in place: *= (1 + c x^xa q^qb), requires qb >= 0
  void mul_factor(const Int& c, int xa, int qb);
  // in place: /= (1 + c x^xa q^qb), requires qb >= 1
  void div_factor(const Int& c, int xa, int qb);

  // the x^0 column as a univariate series in q (x-exponents other than 0 dropped)
  Series x_coeff(int xe) const;

  std::string str(int max_terms = 12) const;
  friend bool operator==(const Series& a, const Series& b) {
    return a.trunc_ == b.trunc_ && a.low() == b.low() && a.rows_ == b.rows_;
  }

 private:
  friend Series mul(const Series&, const Series&);
  friend Series mul_serial(const Series&, const Series&);
  friend Series invert(const Series&);
  friend Series substitute(const Series&, int, int, std::optional<Monomial>);
  XPoly& row_mut(int qe);  // grows storage; qe must be < trunc
  void normalize();
  void check_cap() const;

  int low_ = 0;
  int trunc_ = kExact;
  std::vector<XPoly> rows_;
};

// truncation of a product: min(a.T + val(b), b.T + val(a)); never below
// min(a.T + min(0,b.low), b.T + min(0,a.low))
int mul_trunc(const Series& a, const Series& b);

// OpenMP kernel: one output row per iteration
Series mul(const Series& a, const Series& b);
// reference kernel: pairwise scatter
Series mul_serial(const Series& a, const Series& b);
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

// lowest term must be +-q^L x^0
Series invert(const Series& a);

// q -> q^m, then x -> x q^s, then optionally x -> x_set
Series substitute(const Series& a, int m, int s = 0, std::optional<Monomial> x_set = std::nullopt);
inline Series at_x(const Series& a, int sign, int xa, int qb) { return substitute(a, 1, 0, Monomial{sign, xa, qb}); }
inline Series at_x1(const Series& a) { return at_x(a, 1, 0, 0); }

struct Mismatch {
  int q_exp;
  int x_exp;
  std::string lhs;
  std::string rhs;
};
struct OrderReport {
  int verified_order = 0;
  std::optional<Mismatch> mismatch;
  bool ok() const { return !mismatch.has_value(); }
};
OrderReport equal_to_order(const Series& a, const Series& b);

}  // namespace rrs
