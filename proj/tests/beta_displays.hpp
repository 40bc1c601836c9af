#pragma once
// Closed-form beta_n evaluations transcribed as displayed. Each returns beta_n at
// the engine's dilated arguments: (x^e, q^e) for S and E, (x^e, q^{2e}) for JS
// (so a displayed sqrt(q) becomes q and every displayed q becomes q^2).

#include <functional>
#include <string>
#include <vector>

#include "rrs/bailey.hpp"
#include "rrs/qtools.hpp"

namespace displays {

using rrs::Int;
using rrs::Monomial;
using rrs::Series;

struct BetaDisplay {
  std::string label;
  rrs::MBPParams p;
  std::function<Series(int n, int trunc)> beta;
};

// (s x^xa q^qa; q^base)_n as a factor list applied to t
inline void P(Series& t, int s, int xa, int qa, int base, int n) { rrs::mul_poch(t, Monomial{s, xa, qa}, base, n); }
inline void D(Series& t, int s, int xa, int qa, int base, int n) { rrs::div_poch(t, Monomial{s, xa, qa}, base, n); }
inline Series mono(int c, int xe, int qe) { return Series::monomial(Int(c), xe, qe); }

// (x; q^a)_n / (x; q^b)_n with the common (1-x) removed
inline void x_ratio(Series& t, int a, int b, int n) {
  if (n == 0) return;
  P(t, 1, 1, a, a, n - 1);
  D(t, 1, 1, b, b, n - 1);
}

inline std::vector<BetaDisplay> all() {
  using rrs::Family;
  std::vector<BetaDisplay> v;
  auto S = [](int d, int e, int k) { return rrs::MBPParams{Family::S, d, e, k}; };
  auto E = [](int d, int e, int k) { return rrs::MBPParams{Family::E, d, e, k}; };
  auto J = [](int d, int e, int k) { return rrs::MBPParams{Family::JS, d, e, k}; };

  // SMBP
  v.push_back({"S112", S(1, 1, 2), [](int n, int N) { Series t = Series::one(N); D(t, 1, 0, 1, 1, n); return t; }});
  v.push_back({"S121", S(1, 2, 1), [](int n, int N) {
                 Series t = Series::monomial(Int(n % 2 ? -1 : 1), 0, n * n, N);
                 D(t, 1, 0, 2, 2, n); D(t, -1, 1, 1, 1, 2 * n); return t; }});
  v.push_back({"S122", S(1, 2, 2), [](int n, int N) { Series t = Series::one(N); D(t, 1, 0, 2, 2, n); D(t, -1, 1, 1, 1, 2 * n); return t; }});
  v.push_back({"S132", S(1, 3, 2), [](int n, int N) {
                 Series t = Series::one(N); P(t, 1, 1, 1, 1, 3 * n); D(t, 1, 0, 3, 3, n); D(t, 1, 3, 3, 3, 2 * n); return t; }});
  v.push_back({"S212", S(2, 1, 2), [](int n, int N) {
                 Series t = Series::monomial(Int(1), 0, n * (n - 1) / 2, N); D(t, 1, 0, 1, 1, n); D(t, 1, 1, 1, 2, n); return t; }});
  v.push_back({"S213", S(2, 1, 3), [](int n, int N) { Series t = Series::one(N); D(t, 1, 0, 1, 1, n); D(t, 1, 1, 1, 2, n); return t; }});
  v.push_back({"S314", S(3, 1, 4), [](int n, int N) {
                 // (x;q^3)_n / (x;q)_{2n}
                 Series t = Series::one(N); D(t, 1, 0, 1, 1, n);
                 if (n >= 1) { P(t, 1, 1, 3, 3, n - 1); D(t, 1, 1, 1, 1, 2 * n - 1); }
                 return t; }});
  v.push_back({"S111", S(1, 1, 1), [](int n, int N) { return n == 0 ? Series::one(N) : Series::zero(N); }});

  // EMBP
  v.push_back({"E111", E(1, 1, 1), [](int n, int N) {
                 Series t = Series::monomial(Int(n % 2 ? -1 : 1), -n, 0, N); D(t, 1, 0, 2, 2, n); return t; }});
  v.push_back({"E112", E(1, 1, 2), [](int n, int N) { Series t = Series::one(N); D(t, 1, 0, 2, 2, n); return t; }});
  v.push_back({"E122", E(1, 2, 2), [](int n, int N) {
                 Series t = Series::one(N); P(t, 1, 0, 1, 2, n); D(t, 1, 0, 2, 2, n); D(t, -1, 1, 1, 1, 2 * n); return t; }});
  v.push_back({"E123", E(1, 2, 3), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), 0, r * (r + 1) / 2, N);
                   P(u, -1, 1, 0, 1, r); D(u, 1, 0, 1, 1, r); D(u, -1, 1, 1, 1, n + r); D(u, 1, 0, 1, 1, n - r);
                   t += u;
                 }
                 D(t, -1, 0, 1, 1, n); D(t, -1, 0, 1, 1, n); return t; }});
  v.push_back({"E124", E(1, 2, 4), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), 2 * r, 2 * r * r, N);
                   P(u, 1, 0, 1, 2, r); D(u, 1, 0, 2, 2, r); D(u, -1, 1, 1, 1, 2 * r); D(u, 1, 0, 2, 2, n - r);
                   t += u;
                 }
                 return t; }});
  v.push_back({"E164", E(1, 6, 4), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), 2 * r, 2 * r * r, N);
                   P(u, 1, 0, 1, 2, r); P(u, 1, 2, 2, 2, 3 * n - r);
                   D(u, 1, 0, 2, 2, r); D(u, -1, 1, 1, 1, 2 * r); D(u, 1, 0, 6, 6, n - r);
                   t += u;
                 }
                 D(t, 1, 0, 6, 6, 2 * n); return t; }});
  v.push_back({"E213", E(2, 1, 3), [](int n, int N) {
                 Series t = Series::one(N); P(t, -1, 0, 1, 2, n); D(t, 1, 0, 2, 2, n); D(t, 1, 1, 1, 2, n); return t; }});
  v.push_back({"E214", E(2, 1, 4), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), 0, r * (r + 1) / 2, N);
                   P(u, -1, 1, 0, 2, r); D(u, 1, 0, 1, 1, r); D(u, 1, 1, 1, 2, r); D(u, 1, 0, 1, 1, n - r);
                   t += u;
                 }
                 D(t, -1, 0, 1, 1, n); return t; }});
  v.push_back({"E215", E(2, 1, 5), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), 0, r * r, N);
                   P(u, -1, 0, 1, 2, r); D(u, 1, 0, 2, 2, r); D(u, 1, 1, 1, 2, r); D(u, 1, 0, 1, 1, n - r);
                   t += u;
                 }
                 return t; }});
  v.push_back({"E224", E(2, 2, 4), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), 0, 2 * r * r, N);
                   D(u, 1, 0, 4, 4, r); D(u, 1, 0, 4, 4, n - r);
                   t += u;
                 }
                 P(t, 1, 1, 2, 2, n); P(t, -1, 0, 2, 2, n); D(t, 1, 2, 2, 2, 2 * n); return t; }});
  v.push_back({"E225", E(2, 2, 5), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), r, r * r, N);
                   P(u, -1, 0, 1, 2, r); D(u, 1, 0, 2, 2, r); D(u, 1, 2, 2, 2, r); D(u, 1, 0, 2, 2, n - r);
                   t += u;
                 }
                 D(t, -1, 1, 1, 1, 2 * n); return t; }});

  // JSMBP, displayed q replaced by q^2
  v.push_back({"JS111", J(1, 1, 1), [](int n, int N) {
                 Series t = Series::monomial(Int(1), 0, -n, N + n); D(t, 1, 0, 2, 2, n); D(t, 1, 1, 1, 2, n); return t; }});
  v.push_back({"JS112", J(1, 1, 2), [](int n, int N) { Series t = Series::one(N); D(t, 1, 0, 2, 2, n); D(t, 1, 1, 1, 2, n); return t; }});
  v.push_back({"JS122", J(1, 2, 2), [](int n, int N) {
                 Series t = Series::one(N);
                 P(t, -1, 1, 1, 2, 2 * n); D(t, 1, 0, 4, 4, n); D(t, -1, 1, 2, 2, 2 * n); D(t, 1, 2, 2, 4, n); return t; }});
  v.push_back({"JS123", J(1, 2, 3), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), r, 2 * r * r, N);
                   D(u, 1, 0, 2, 2, r); D(u, 1, 1, 1, 2, r); D(u, 1, 0, 4, 4, n - r);
                   t += u;
                 }
                 D(t, -1, 1, 2, 2, 2 * n); return t; }});
  v.push_back({"JS124", J(1, 2, 4), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), 2 * r, 4 * r * r, N);
                   P(u, -1, 1, 1, 2, 2 * r); D(u, -1, 1, 2, 2, 2 * r); D(u, 1, 2, 2, 4, r); D(u, 1, 0, 4, 4, r); D(u, 1, 0, 4, 4, n - r);
                   t += u;
                 }
                 return t; }});
  v.push_back({"JS213", J(2, 1, 3), [](int n, int N) {
                 Series t = Series::one(N);
                 t.mul_factor(Int(-1), 1, 2 * n);
                 x_ratio(t, 4, 2, n);
                 D(t, 1, 0, 2, 2, n); D(t, 1, 1, 2, 4, n); return t; }});
  v.push_back({"JS214", J(2, 1, 4), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; 2 * r <= n; ++r) {
                   Series u = Series::monomial(Int(1), r, 4 * r * r, N);
                   D(u, 1, 0, 2, 2, n - 2 * r); D(u, 1, 1, 2, 4, r); D(u, 1, 0, 4, 4, r);
                   t += u;
                 }
                 D(t, 1, 1, 2, 4, n); return t; }});
  v.push_back({"JS215", J(2, 1, 5), [](int, int N) {
                 // printed without any n-dependence: an unrestricted r-sum
                 Series t = Series::zero(N);
                 for (int r = 0; 2 * r * r < N; ++r) {
                   Series u = Series::monomial(Int(1), r, 2 * r * r, N);
                   x_ratio(u, 4, 2, r); D(u, 1, 0, 2, 2, r); D(u, 1, 1, 2, 4, r);
                   t += u;
                 }
                 return t; }});
  v.push_back({"JS224", J(2, 2, 4), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), r, 4 * r * r, N);
                   D(u, 1, 0, 4, 4, n - r); D(u, 1, 1, 2, 4, n - r); D(u, 1, 1, 2, 4, r); D(u, 1, 0, 4, 4, r);
                   t += u;
                 }
                 D(t, -1, 1, 2, 2, 2 * n); return t; }});
  v.push_back({"JS225", J(2, 2, 5), [](int n, int N) {
                 Series t = Series::zero(N);
                 for (int r = 0; r <= n; ++r) {
                   Series u = Series::monomial(Int(1), r, 2 * r * r, N);
                   x_ratio(u, 4, 2, r); D(u, 1, 0, 2, 2, r); D(u, 1, 1, 2, 4, r); D(u, 1, 0, 4, 4, n - r);
                   t += u;
                 }
                 D(t, -1, 1, 2, 2, 2 * n); return t; }});
  return v;
}

}  // namespace displays
