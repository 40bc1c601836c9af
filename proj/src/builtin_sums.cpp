#include "rrs/builtin_sums.hpp"

#include <stdexcept>

#include "rrs/qtools.hpp"

namespace rrs {

namespace {

constexpr int kSlack = 4;

Series mono(int T, int xe, long long qe) {
  if (qe >= T) return Series::zero(T);
  return Series::monomial(Int(1), xe, static_cast<int>(qe), T);
}
// (s q^a; q^b)_n into the numerator / denominator; xe gives an x power in the base point
void num(Series& t, int sign, int a, int b, int n, int xe = 0) { mul_poch(t, Monomial{sign, xe, a}, b, n); }
void den(Series& t, int sign, int a, int b, int n, int xe = 0) { div_poch(t, Monomial{sign, xe, a}, b, n); }

using Weight1 = std::function<long long(int)>;
using Term1 = std::function<Series(int, int)>;
using Weight2 = std::function<long long(int, int)>;
using Term2 = std::function<Series(int, int, int)>;

Series single_sum(int T, const Weight1& w, const Term1& term) {
  Series total = Series::zero(T);
  for (int n = 0; n < 3 || w(n) < T + kSlack; ++n) {
    if (w(n) >= T + kSlack) continue;
    Series t = term(n, T + kSlack);
    total += t.truncated(T);
  }
  return total.truncated(T);
}

// weights are nondecreasing in n (eventually) and in r along n = 0, 1
Series double_sum(int T, const Weight2& w, const Term2& term) {
  Series total = Series::zero(T);
  for (int r = 0; r < 3 || w(0, r) < T + kSlack || w(1, r) < T + kSlack; ++r) {
    for (int n = 0; n < 3 || w(n, r) < T + kSlack; ++n) {
      if (w(n, r) >= T + kSlack) continue;
      Series t = term(n, r, T + kSlack);
      total += t.truncated(T);
    }
  }
  return total.truncated(T);
}

BuiltinSum single(std::string key, std::string formula, Weight1 w, Term1 term, bool x_formal = false) {
  BuiltinSum b;
  b.key = std::move(key);
  b.formula = std::move(formula);
  b.x_formal = x_formal;
  b.term = [w, term](int n, int T) { return w(n) >= T + kSlack ? Series::zero(T) : term(n, T + kSlack).truncated(T); };
  b.eval = [w, term](int T) { return single_sum(T, w, term); };
  return b;
}

BuiltinSum twofold(std::string key, std::string formula, Weight2 w, Term2 term, bool x_formal = false) {
  BuiltinSum b;
  b.key = std::move(key);
  b.formula = std::move(formula);
  b.x_formal = x_formal;
  b.eval = [w, term](int T) { return double_sum(T, w, term); };
  return b;
}

long long sq(long long a) { return a * a; }

std::vector<BuiltinSum> make_all() {
  std::vector<BuiltinSum> v;

  // classical single sums
  v.push_back(single("euler1", "q^{n^2}/(q^2;q^2)_n", [](int n) { return sq(n); },
                     [](int n, int T) { Series t = mono(T, 0, sq(n)); den(t, 1, 2, 2, n); return t; }));
  v.push_back(single("euler2", "q^{n(n+1)}/(q^2;q^2)_n", [](int n) { return sq(n) + n; },
                     [](int n, int T) { Series t = mono(T, 0, sq(n) + n); den(t, 1, 2, 2, n); return t; }));
  v.push_back(single("eulerx", "x^n q^{n(n-1)/2}/(q;q)_n", [](int n) { return n * (n - 1LL) / 2; },
                     [](int n, int T) { Series t = mono(T, n, n * (n - 1LL) / 2); den(t, 1, 1, 1, n); return t; }, true));
  v.push_back(single("RR1", "q^{n^2}/(q;q)_n", [](int n) { return sq(n); },
                     [](int n, int T) { Series t = mono(T, 0, sq(n)); den(t, 1, 1, 1, n); return t; }));
  v.push_back(single("RR2", "q^{n(n+1)}/(q;q)_n", [](int n) { return sq(n) + n; },
                     [](int n, int T) { Series t = mono(T, 0, sq(n) + n); den(t, 1, 1, 1, n); return t; }));
  v.push_back(single("JS1", "q^{2n^2}/(q;q)_{2n}", [](int n) { return 2 * sq(n); },
                     [](int n, int T) { Series t = mono(T, 0, 2 * sq(n)); den(t, 1, 1, 1, 2 * n); return t; }));
  v.push_back(single("JS2", "q^{2n(n+1)}/(q;q)_{2n+1}", [](int n) { return 2 * sq(n) + 2 * n; },
                     [](int n, int T) { Series t = mono(T, 0, 2 * sq(n) + 2 * n); den(t, 1, 1, 1, 2 * n + 1); return t; }));
  v.push_back(single("GG1", "q^{n^2}(-q;q^2)_n/(q^2;q^2)_n", [](int n) { return sq(n); }, [](int n, int T) {
    Series t = mono(T, 0, sq(n));
    num(t, -1, 1, 2, n);
    den(t, 1, 2, 2, n);
    return t;
  }));
  v.push_back(single("GG2", "q^{n(n+2)}(-q;q^2)_n/(q^2;q^2)_n", [](int n) { return sq(n) + 2 * n; }, [](int n, int T) {
    Series t = mono(T, 0, sq(n) + 2 * n);
    num(t, -1, 1, 2, n);
    den(t, 1, 2, 2, n);
    return t;
  }));
  v.push_back(single("LJS50A", "q^{n^2}(-q;q^2)_n/(q;q)_{2n}", [](int n) { return sq(n); }, [](int n, int T) {
    Series t = mono(T, 0, sq(n));
    num(t, -1, 1, 2, n);
    den(t, 1, 1, 1, 2 * n);
    return t;
  }));
  v.push_back(single("MP70a", "q^{n^2}(-q^2;q^4)_n/((q;q)_{2n}(-q^2;q^2)_n)", [](int n) { return sq(n); }, [](int n, int T) {
    Series t = mono(T, 0, sq(n));
    num(t, -1, 2, 4, n);
    den(t, 1, 1, 1, 2 * n);
    den(t, -1, 2, 2, n);
    return t;
  }));

  // series sides used by the index-extraction relations
  v.push_back(single("SL4-sum", "(-1)^n q^{n^2}(-q;q^2)_n/(q^4;q^4)_n", [](int n) { return sq(n); }, [](int n, int T) {
    Series t = mono(T, 0, sq(n));
    if (n % 2) t = -t;
    num(t, -1, 1, 2, n);
    den(t, 1, 4, 4, n);
    return t;
  }));
  v.push_back(single("SL4-sum-unsigned", "q^{n^2}(-q;q^2)_n/(q^4;q^4)_n", [](int n) { return sq(n); }, [](int n, int T) {
    Series t = mono(T, 0, sq(n));
    num(t, -1, 1, 2, n);
    den(t, 1, 4, 4, n);
    return t;
  }));
  v.push_back(single("SL53-sum", "q^{4n^2}(q;q^2)_{2n}/(q^4;q^4)_{2n}", [](int n) { return 4 * sq(n); }, [](int n, int T) {
    Series t = mono(T, 0, 4 * sq(n));
    num(t, 1, 1, 2, 2 * n);
    den(t, 1, 4, 4, 2 * n);
    return t;
  }));
  v.push_back(single("SL20-sum", "q^{n^2}/(q^4;q^4)_n", [](int n) { return sq(n); },
                     [](int n, int T) { Series t = mono(T, 0, sq(n)); den(t, 1, 4, 4, n); return t; }));
  v.push_back(single("SL16-sum", "q^{n(n+2)}/(q^4;q^4)_n", [](int n) { return sq(n) + 2 * n; },
                     [](int n, int T) { Series t = mono(T, 0, sq(n) + 2 * n); den(t, 1, 4, 4, n); return t; }));
  v.push_back(single("SL94-sum", "q^{n(n+1)}/(q;q)_{2n+1}", [](int n) { return sq(n) + n; },
                     [](int n, int T) { Series t = mono(T, 0, sq(n) + n); den(t, 1, 1, 1, 2 * n + 1); return t; }));
  v.push_back(single("SL96-sum", "q^{n(n+2)}/(q;q)_{2n+1}", [](int n) { return sq(n) + 2 * n; },
                     [](int n, int T) { Series t = mono(T, 0, sq(n) + 2 * n); den(t, 1, 1, 1, 2 * n + 1); return t; }));
  v.push_back(single("SL98-sum", "q^{n^2}/(q;q)_{2n}", [](int n) { return sq(n); },
                     [](int n, int T) { Series t = mono(T, 0, sq(n)); den(t, 1, 1, 1, 2 * n); return t; }));
  v.push_back(single("SL99-sum", "q^{n(n+1)}/(q;q)_{2n}", [](int n) { return sq(n) + n; },
                     [](int n, int T) { Series t = mono(T, 0, sq(n) + n); den(t, 1, 1, 1, 2 * n); return t; }));
  v.push_back(single("mod24-N", "q^{2N^2}/(q^2;q^2)_{2N} sum_r q^{2r^2}[2N,2r]", [](int n) { return 2 * sq(n); }, [](int n, int T) {
    Series inner = Series::zero(T);
    for (int r = 0; r <= n; ++r) {
      if (2 * sq(r) >= T) break;
      inner += gauss_binom(2 * n, 2 * r, 1, T).shifted(0, static_cast<int>(2 * sq(r)));
    }
    Series t = inner.shifted(0, static_cast<int>(std::min<long long>(2 * sq(n), T)));
    t.set_trunc(T);
    den(t, 1, 2, 2, 2 * n);
    return t;
  }));

  // the (1,2,3) Euler family
  v.push_back(twofold("Ftilde1234",
                      "x^{2n+2r} q^{2n^2+4nr+r(5r+1)/2}(-x;q)_r/((-q;q)_{n+r}^2 (-xq;q)_{n+2r} (q;q)_r (q;q)_n)",
                      [](int n, int r) { return 2 * sq(n) + 4LL * n * r + r * (5LL * r + 1) / 2; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 2 * n + 2 * r, 2 * sq(n) + 4LL * n * r + r * (5LL * r + 1) / 2);
                        num(t, -1, 0, 1, r, 1);
                        den(t, -1, 1, 1, n + r);
                        den(t, -1, 1, 1, n + r);
                        den(t, -1, 1, 1, n + 2 * r, 1);
                        den(t, 1, 1, 1, r);
                        den(t, 1, 1, 1, n);
                        return t;
                      },
                      true));
  v.push_back(twofold("Ftilde1231",
                      "x^{2n+2r} q^{2n^2+4nr+2n+5r(r+1)/2}(-xq;q)_r/((-q;q)_{n+r}^2 (-xq;q)_{n+2r+1} (q;q)_r (q;q)_n)",
                      [](int n, int r) { return 2 * sq(n) + 4LL * n * r + 2 * n + 5LL * r * (r + 1) / 2; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 2 * n + 2 * r, 2 * sq(n) + 4LL * n * r + 2 * n + 5LL * r * (r + 1) / 2);
                        num(t, -1, 1, 1, r, 1);
                        den(t, -1, 1, 1, n + r);
                        den(t, -1, 1, 1, n + r);
                        den(t, -1, 1, 1, n + 2 * r + 1, 1);
                        den(t, 1, 1, 1, r);
                        den(t, 1, 1, 1, n);
                        return t;
                      },
                      true));
  v.push_back(twofold("Ftilde1232",
                      "x^{2n+2r} q^{2n^2+4nr+r(5r-1)/2}(-xq;q)_{r-1}/((-q;q)_{n+r}^2 (-xq;q)_{n+2r} (q;q)_r (q;q)_n)"
                      " (q^r(1+x) - (1+xq^r)(1+q^{n+r})^2(1-q^r))",
                      [](int n, int r) { return 2 * sq(n) + 4LL * n * r + r * (5LL * r - 1) / 2; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 2 * n + 2 * r, 2 * sq(n) + 4LL * n * r + r * (5LL * r - 1) / 2);
                        // at r = 0 the Pochhammer (-xq;q)_{-1} cancels the bracket
                        if (r > 0) {
                          num(t, -1, 1, 1, r - 1, 1);
                          Series c = Series::one();
                          c.mul_factor(Int(1), 1, r);
                          c.mul_factor(Int(1), 0, n + r);
                          c.mul_factor(Int(1), 0, n + r);
                          c.mul_factor(Int(-1), 0, r);
                          Series br = Series::monomial(Int(1), 0, r) + Series::monomial(Int(1), 1, r) - c;
                          t = t * br;
                        }
                        den(t, -1, 1, 1, n + r);
                        den(t, -1, 1, 1, n + r);
                        den(t, -1, 1, 1, n + 2 * r, 1);
                        den(t, 1, 1, 1, r);
                        den(t, 1, 1, 1, n);
                        return t;
                      },
                      true));
  // x = 1 only; (-1;q)_{n+2r} carries a factor 2, so this is twice the sum
  v.push_back(twofold("Ftilde1233-x1-doubled",
                      "2 q^{2n^2+4nr-2n+5r(r-1)/2}(-1;q)_{r-1}/((-q;q)_{n+r}^2 (-1;q)_{n+2r} (q;q)_r (q;q)_n)"
                      " (q^r(1+q^{-1}) - (1+q^{r-1})(1+q^{n+r})^2(1-q^r))",
                      [](int n, int r) { return 2 * sq(n) + 4LL * n * r - 2 * n + 5LL * r * (r - 1) / 2; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 2 * sq(n) + 4LL * n * r - 2 * n + 5LL * r * (r - 1) / 2);
                        const int m = n + 2 * r;
                        if (r == 0) {
                          if (m == 0) t.scale(Int(2));
                        } else {
                          num(t, -1, 0, 1, r - 1);
                          Series c = Series::one();
                          c.mul_factor(Int(1), 0, r - 1);
                          c.mul_factor(Int(1), 0, n + r);
                          c.mul_factor(Int(1), 0, n + r);
                          c.mul_factor(Int(-1), 0, r);
                          Series br = Series::monomial(Int(1), 0, r) + Series::monomial(Int(1), 0, r - 1) - c;
                          t = t * br;
                        }
                        // 2/(-1;q)_m = 1/(-q;q)_{m-1} for m >= 1
                        if (m >= 1) den(t, -1, 1, 1, m - 1);
                        den(t, -1, 1, 1, n + r);
                        den(t, -1, 1, 1, n + r);
                        den(t, 1, 1, 1, r);
                        den(t, 1, 1, 1, n);
                        return t;
                      }));

  // double sums from the new identities
  v.push_back(twofold("ex1", "q^{n^2+2nr+2r^2}(-q;q^2)_r/((q;q)_{2r}(q;q)_n)",
                      [](int n, int r) { return sq(n) + 2LL * n * r + 2 * sq(r); },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, sq(n) + 2LL * n * r + 2 * sq(r));
                        num(t, -1, 1, 2, r);
                        den(t, 1, 1, 1, 2 * r);
                        den(t, 1, 1, 1, n);
                        return t;
                      }));
  v.push_back(twofold("ex2", "q^{4n^2+8r^2+8nr}(-q;q^2)_{2r}/((q^4;q^4)_{2r}(q^4;q^4)_n)",
                      [](int n, int r) { return 4 * sq(n) + 8 * sq(r) + 8LL * n * r; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 4 * sq(n) + 8 * sq(r) + 8LL * n * r);
                        num(t, -1, 1, 2, 2 * r);
                        den(t, 1, 4, 4, 2 * r);
                        den(t, 1, 4, 4, n);
                        return t;
                      }));
  v.push_back(twofold("ex3", "q^{2n^2+3r^2+4nr}(-q;q^2)_r/((-q;q)_{2n+2r}(q;q)_{2r}(q^2;q^2)_n)",
                      [](int n, int r) { return 2 * sq(n) + 3 * sq(r) + 4LL * n * r; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 2 * sq(n) + 3 * sq(r) + 4LL * n * r);
                        num(t, -1, 1, 2, r);
                        den(t, -1, 1, 1, 2 * n + 2 * r);
                        den(t, 1, 1, 1, 2 * r);
                        den(t, 1, 2, 2, n);
                        return t;
                      }));
  v.push_back(twofold("S124W", "q^{2n^2+4nr+4r^2}(q;q^2)_r/((q^2;q^2)_r(-q;q)_{2r}(q^2;q^2)_n)",
                      [](int n, int r) { return 2 * sq(n) + 4LL * n * r + 4 * sq(r); },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 2 * sq(n) + 4LL * n * r + 4 * sq(r));
                        num(t, 1, 1, 2, r);
                        den(t, 1, 2, 2, r);
                        den(t, -1, 1, 1, 2 * r);
                        den(t, 1, 2, 2, n);
                        return t;
                      }));
  v.push_back(twofold("JS123T", "q^{2n^2+4r^2+4nr}(-q^2;q^4)_{n+r}/((-q^2;q^2)_{2n+2r}(q;q)_{2r}(q^4;q^4)_n)",
                      [](int n, int r) { return 2 * sq(n) + 4 * sq(r) + 4LL * n * r; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 2 * sq(n) + 4 * sq(r) + 4LL * n * r);
                        num(t, -1, 2, 4, n + r);
                        den(t, -1, 2, 2, 2 * n + 2 * r);
                        den(t, 1, 1, 1, 2 * r);
                        den(t, 1, 4, 4, n);
                        return t;
                      }));
  // the printed token (-q^2;q^4;n+r) is read as (-q^2;q^4)_{n+r}
  v.push_back(twofold("E123T",
                      "q^{r+2n^2+3r^2+4nr}(-q^2;q^4)_{n+r}(-1;q^2)_r/((-q^2;q^2)_{n+r}^2(-q^2;q^2)_{n+2r}(q^2;q^2)_r(q^2;q^2)_n)",
                      [](int n, int r) { return r + 2 * sq(n) + 3 * sq(r) + 4LL * n * r; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, r + 2 * sq(n) + 3 * sq(r) + 4LL * n * r);
                        num(t, -1, 2, 4, n + r);
                        num(t, -1, 0, 2, r);
                        den(t, -1, 2, 2, n + r);
                        den(t, -1, 2, 2, n + r);
                        den(t, -1, 2, 2, n + 2 * r);
                        den(t, 1, 2, 2, r);
                        den(t, 1, 2, 2, n);
                        return t;
                      }));
  v.push_back(twofold("E164T",
                      "q^{3n^2+6nr+5r^2}(-q^3;q^6)_{n+r}(q;q^2)_r(q^2;q^2)_{3n+2r}/((q^6;q^6)_{2n+2r}(q^2;q^2)_r(-q;q)_{2r}(q^6;q^6)_n)",
                      [](int n, int r) { return 3 * sq(n) + 6LL * n * r + 5 * sq(r); },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 3 * sq(n) + 6LL * n * r + 5 * sq(r));
                        num(t, -1, 3, 6, n + r);
                        num(t, 1, 1, 2, r);
                        num(t, 1, 2, 2, 3 * n + 2 * r);
                        den(t, 1, 6, 6, 2 * n + 2 * r);
                        den(t, 1, 2, 2, r);
                        den(t, -1, 1, 1, 2 * r);
                        den(t, 1, 6, 6, n);
                        return t;
                      }));
  // 1/(q;q)_{n-2r} vanishes for 2r > n
  v.push_back(twofold("mod16", "q^{n^2+2r^2}/((q;q^2)_n(q;q)_{2r}(q;q)_{n-2r})",
                      [](int n, int r) { return sq(n) + 2 * sq(r); },
                      [](int n, int r, int T) {
                        if (2 * r > n) return Series::zero(T);
                        Series t = mono(T, 0, sq(n) + 2 * sq(r));
                        den(t, 1, 1, 2, n);
                        den(t, 1, 1, 1, 2 * r);
                        den(t, 1, 1, 1, n - 2 * r);
                        return t;
                      }));
  v.push_back(twofold("JS123W", "q^{4n^2+6r^2+8nr}/((-q^2;q^2)_{2n+2r}(q;q)_{2r}(q^4;q^4)_n)",
                      [](int n, int r) { return 4 * sq(n) + 6 * sq(r) + 8LL * n * r; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 4 * sq(n) + 6 * sq(r) + 8LL * n * r);
                        den(t, -1, 2, 2, 2 * n + 2 * r);
                        den(t, 1, 1, 1, 2 * r);
                        den(t, 1, 4, 4, n);
                        return t;
                      }));
  v.push_back(twofold("JS124T", "q^{2n^2+4nr+6r^2}(-q^2;q^4)_{n+r}(-q;q^2)_{2r}/((q^4;q^4)_{2r}(q^4;q^4)_n)",
                      [](int n, int r) { return 2 * sq(n) + 4LL * n * r + 6 * sq(r); },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 2 * sq(n) + 4LL * n * r + 6 * sq(r));
                        num(t, -1, 2, 4, n + r);
                        num(t, -1, 1, 2, 2 * r);
                        den(t, 1, 4, 4, 2 * r);
                        den(t, 1, 4, 4, n);
                        return t;
                      }));
  v.push_back(twofold("E214W", "q^{n^2+2nr+r(3r+1)/2}(-1;q^2)_r/((-q;q)_{n+r}(q;q)_r(q;q)_n(q;q^2)_r)",
                      [](int n, int r) { return sq(n) + 2LL * n * r + r * (3LL * r + 1) / 2; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, sq(n) + 2LL * n * r + r * (3LL * r + 1) / 2);
                        num(t, -1, 0, 2, r);
                        den(t, -1, 1, 1, n + r);
                        den(t, 1, 1, 1, r);
                        den(t, 1, 1, 1, n);
                        den(t, 1, 1, 2, r);
                        return t;
                      }));
  v.push_back(twofold("E224T", "q^{n^2+2nr+3r^2}(q^2;q^2)_{n+r}/((q;q)_{2n+2r}(q^4;q^4)_r(q^4;q^4)_n)",
                      [](int n, int r) { return sq(n) + 2LL * n * r + 3 * sq(r); },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, sq(n) + 2LL * n * r + 3 * sq(r));
                        num(t, 1, 2, 2, n + r);
                        den(t, 1, 1, 1, 2 * n + 2 * r);
                        den(t, 1, 4, 4, r);
                        den(t, 1, 4, 4, n);
                        return t;
                      }));
  v.push_back(twofold("E124T", "q^{2n^2+4nr+6r^2}(-q^2;q^4)_{n+r}(q^2;q^4)_r/((-q^2;q^2)_{2r}(q^4;q^4)_r(q^4;q^4)_n)",
                      [](int n, int r) { return 2 * sq(n) + 4LL * n * r + 6 * sq(r); },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 2 * sq(n) + 4LL * n * r + 6 * sq(r));
                        num(t, -1, 2, 4, n + r);
                        num(t, 1, 2, 4, r);
                        den(t, -1, 2, 2, 2 * r);
                        den(t, 1, 4, 4, r);
                        den(t, 1, 4, 4, n);
                        return t;
                      }));
  v.push_back(twofold("E164W",
                      "q^{6n^2+12nr+8r^2}(q;q^2)_r(q^2;q^2)_{3n+2r}/((q^6;q^6)_{2n+2r}(q^2;q^2)_r(-q;q)_{2r}(q^6;q^6)_n)",
                      [](int n, int r) { return 6 * sq(n) + 12LL * n * r + 8 * sq(r); },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 6 * sq(n) + 12LL * n * r + 8 * sq(r));
                        num(t, 1, 1, 2, r);
                        num(t, 1, 2, 2, 3 * n + 2 * r);
                        den(t, 1, 6, 6, 2 * n + 2 * r);
                        den(t, 1, 2, 2, r);
                        den(t, -1, 1, 1, 2 * r);
                        den(t, 1, 6, 6, n);
                        return t;
                      }));
  v.push_back(twofold("JS215W", "q^{n^2}/(q;q)_n (1 + sum_{r>=1} q^{2r^2+2nr}(-q;q)_{r-1}/((q;q)_r(q;q^2)_r))",
                      [](int n, int r) { return sq(n) + 2 * sq(r) + 2LL * n * r; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, sq(n) + 2 * sq(r) + 2LL * n * r);
                        den(t, 1, 1, 1, n);
                        if (r > 0) {
                          num(t, -1, 1, 1, r - 1);
                          den(t, 1, 1, 1, r);
                          den(t, 1, 1, 2, r);
                        }
                        return t;
                      }));
  v.push_back(twofold("E225T", "q^{n^2+2r^2+2nr}(-q;q^2)_{n+r}(-q;q^2)_r/((-q;q)_{2n+2r}(q;q)_{2r}(q^2;q^2)_n)",
                      [](int n, int r) { return sq(n) + 2 * sq(r) + 2LL * n * r; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, sq(n) + 2 * sq(r) + 2LL * n * r);
                        num(t, -1, 1, 2, n + r);
                        num(t, -1, 1, 2, r);
                        den(t, -1, 1, 1, 2 * n + 2 * r);
                        den(t, 1, 1, 1, 2 * r);
                        den(t, 1, 2, 2, n);
                        return t;
                      }));
  v.push_back(twofold("JS214T", "q^{n^2+4r^2}(-q;q^2)_n/((q^2;q^4)_n(q^2;q^2)_{2r}(q^2;q^2)_{n-2r})",
                      [](int n, int r) { return sq(n) + 4 * sq(r); },
                      [](int n, int r, int T) {
                        if (2 * r > n) return Series::zero(T);
                        Series t = mono(T, 0, sq(n) + 4 * sq(r));
                        num(t, -1, 1, 2, n);
                        den(t, 1, 2, 4, n);
                        den(t, 1, 2, 2, 2 * r);
                        den(t, 1, 2, 2, n - 2 * r);
                        return t;
                      }));
  v.push_back(twofold("mod24", "q^{2n^2+4nr+4r^2}/((q;q)_{2n}(q;q)_{2r}(-q;q)_{2n+2r})",
                      [](int n, int r) { return 2 * sq(n) + 4LL * n * r + 4 * sq(r); },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 2 * sq(n) + 4LL * n * r + 4 * sq(r));
                        den(t, 1, 1, 1, 2 * n);
                        den(t, 1, 1, 1, 2 * r);
                        den(t, -1, 1, 1, 2 * n + 2 * r);
                        return t;
                      }));
  v.push_back(twofold("E224W", "q^{2n^2+4nr+4r^2}(q^4;q^4)_{n+r}/((q^2;q^2)_{2n+2r}(q^4;q^4)_r(q^4;q^4)_n)",
                      [](int n, int r) { return 2 * sq(n) + 4LL * n * r + 4 * sq(r); },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 2 * sq(n) + 4LL * n * r + 4 * sq(r));
                        num(t, 1, 4, 4, n + r);
                        den(t, 1, 2, 2, 2 * n + 2 * r);
                        den(t, 1, 4, 4, r);
                        den(t, 1, 4, 4, n);
                        return t;
                      }));
  v.push_back(twofold("E214T",
                      "q^{n^2+2nr+2r^2+r}(-q;q^2)_{n+r}(-1;q^4)_r/((-q^2;q^2)_{n+r}(q^2;q^2)_r(q^2;q^2)_n(q^2;q^4)_r)",
                      [](int n, int r) { return sq(n) + 2LL * n * r + 2 * sq(r) + r; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, sq(n) + 2LL * n * r + 2 * sq(r) + r);
                        num(t, -1, 1, 2, n + r);
                        num(t, -1, 0, 4, r);
                        den(t, -1, 2, 2, n + r);
                        den(t, 1, 2, 2, r);
                        den(t, 1, 2, 2, n);
                        den(t, 1, 2, 4, r);
                        return t;
                      }));
  v.push_back(twofold("JS225W",
                      "q^{2n^2}/(q^2;q^2)_n (1/(-q;q)_{2n} + sum_{r>=1} q^{3r^2+4nr}(-q;q)_{r-1}/((q;q)_r(q;q^2)_r(-q;q)_{2n+2r}))",
                      [](int n, int r) { return 2 * sq(n) + 3 * sq(r) + 4LL * n * r; },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, 2 * sq(n) + 3 * sq(r) + 4LL * n * r);
                        den(t, 1, 2, 2, n);
                        den(t, -1, 1, 1, 2 * n + 2 * r);
                        if (r > 0) {
                          num(t, -1, 1, 1, r - 1);
                          den(t, 1, 1, 1, r);
                          den(t, 1, 1, 2, r);
                        }
                        return t;
                      }));
  v.push_back(twofold("E215T", "q^{n^2+2nr+3r^2}(-q;q^2)_{n+r}(-q^2;q^4)_r/((q^2;q^2)_{2r}(q^2;q^2)_n)",
                      [](int n, int r) { return sq(n) + 2LL * n * r + 3 * sq(r); },
                      [](int n, int r, int T) {
                        Series t = mono(T, 0, sq(n) + 2LL * n * r + 3 * sq(r));
                        num(t, -1, 1, 2, n + r);
                        num(t, -1, 2, 4, r);
                        den(t, 1, 2, 2, 2 * r);
                        den(t, 1, 2, 2, n);
                        return t;
                      }));
  return v;
}

}  // namespace

const std::vector<BuiltinSum>& builtin_sums() {
  static const std::vector<BuiltinSum> all = make_all();
  return all;
}

const BuiltinSum* find_builtin(const std::string& key) {
  for (const auto& b : builtin_sums())
    if (b.key == key) return &b;
  return nullptr;
}

Series eval_builtin(const std::string& key, int trunc) {
  const BuiltinSum* b = find_builtin(key);
  if (!b) throw std::invalid_argument("unknown builtin sum: " + key);
  return b->eval(trunc);
}

Series eval_builtin_parity(const std::string& key, int parity, int trunc) {
  const BuiltinSum* b = find_builtin(key);
  if (!b) throw std::invalid_argument("unknown builtin sum: " + key);
  if (!b->term) throw std::invalid_argument("builtin sum has no indexed terms: " + key);
  Series total = Series::zero(trunc);
  int zeros = 0;
  // weights grow quadratically, so a run of empty terms ends the sum
  for (int n = parity; zeros < 4; n += 2) {
    Series t = b->term(n, trunc);
    zeros = t.is_zero() ? zeros + 1 : 0;
    total += t;
  }
  return total;
}

}  // namespace rrs
