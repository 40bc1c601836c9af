#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rrs/qtools.hpp"
#include "rrs/series.hpp"

using namespace rrs;

namespace {

Series uni(const std::vector<long long>& c, int trunc) {
  Series s = Series::zero(trunc);
  for (size_t i = 0; i < c.size(); ++i) s += Series::monomial(Int(c[i]), 0, static_cast<int>(i));
  return s;
}

Series random_series(std::mt19937& rng, int trunc, bool unit) {
  std::uniform_int_distribution<int> coef(-5, 5), xdeg(0, 3);
  Series s = Series::zero(trunc);
  for (int e = unit ? 1 : 0; e < trunc; ++e)
    for (int j = 0; j <= std::min(xdeg(rng), e); ++j) s += Series::monomial(Int(coef(rng)), j, e);
  if (unit) s += Series::one();
  return s;
}

}  // namespace

TEST_CASE("mul: telescoping and small products") {
  Series geo = uni(std::vector<long long>(20, 1), 20);
  Series r = mul(uni({1, -1}, Series::kExact), geo);
  CHECK(equal_to_order(r, Series::one(20)).ok());
  CHECK(r.trunc() == 20);

  // (1-q)(1-q^2)(1-q^3) expanded by the oracle
  std::vector<long long> p = oracle::poly_mul(oracle::poly_mul({1, -1}, {1, 0, -1}, 7), {1, 0, 0, -1}, 7);
  Series f = mul(mul(uni({1, -1}, Series::kExact), uni({1, 0, -1}, Series::kExact)), uni({1, 0, 0, -1}, Series::kExact));
  CHECK(f.exact());
  CHECK(f == uni(p, Series::kExact));
  CHECK(f == uni({1, -1, -1, 0, 1, 1, -1}, Series::kExact));

  Series a = uni({3, 1, 4, 1, 5}, 9);
  CHECK(mul(a, Series::one()) == a);
}

TEST_CASE("mul: big coefficients leave the int64 range exactly") {
  Series a = Series::constant(Int(1LL << 40), Series::kExact) + Series::monomial(Int(1LL << 40), 1, 1);
  Series b = mul(mul(a, a), a);
  CHECK(b.coeff(0, 0).str() == "1329227995784915872903807060280344576");
  CHECK(b.coeff(2, 2).str() == "3987683987354747618711421180841033728");
}

TEST_CASE("mul kernels agree") {
  std::mt19937 rng(7);
  for (int it = 0; it < 20; ++it) {
    Series a = random_series(rng, 40, false), b = random_series(rng, 35, false);
    a = a.shifted(0, it % 3 - 1);
    CHECK(mul(a, b) == mul_serial(a, b));
  }
}

TEST_CASE("invert") {
  int N = 30;
  Series euler = poch_infinite(Monomial{1, 0, 1}, 1, N);
  Series p = invert(euler);
  for (int n = 0; n < N; ++n) CHECK(p.coeff(n, 0) == Int(oracle::count_partitions(n, [](auto&) { return true; })));
  CHECK(invert(Series::one()) == Series::one());
  Series g = invert(uni({1, -1}, 15));
  for (int n = 0; n < 15; ++n) CHECK(g.coeff(n, 0) == Int(1));
  CHECK_THROWS_AS(invert(uni({2, 1}, 10)), SeriesError);
}

TEST_CASE("substitute") {
  int N = 20;
  Series s = Series::zero(N);
  for (int n = 0; n < N; ++n) s += Series::monomial(Int(1), n, n);
  Series t = substitute(s, 1, 1);
  Series want = Series::zero(N);
  for (int n = 0; 2 * n < N; ++n) want += Series::monomial(Int(1), n, 2 * n);
  CHECK(equal_to_order(t, want).ok());
  CHECK(t.trunc() >= N);

  Series xq = Series::monomial(Int(1), 1, 1);
  CHECK(substitute(xq, 2, 0, Monomial{1, 0, 0}) == Series::monomial(Int(1), 0, 2));

  // sum x^n q^{n^2}/(q;q)_n at x = 1 counts partitions with parts differing by at least 2
  N = 30;
  Series f = Series::zero(N);
  for (int n = 0; n * n < N; ++n) {
    Series term = Series::monomial(Int(1), n, n * n, N);
    div_poch(term, Monomial{1, 0, 1}, 1, n);
    f += term;
  }
  Series f1 = at_x1(f);
  for (int n = 0; n < N; ++n) {
    long long c = oracle::count_partitions(n, [](const std::vector<int>& p) {
      for (size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] - p[i + 1] < 2) return false;
      return true;
    });
    CHECK(f1.coeff(n, 0) == Int(c));
  }
}

TEST_CASE("equal_to_order reports the first mismatch") {
  Series a = uni({1, 1}, 10);
  CHECK(equal_to_order(a, a).verified_order == 10);
  Series b = uni({1, 1, 0, 0, 0, 1}, 10);
  OrderReport r = equal_to_order(a, b);
  REQUIRE_FALSE(r.ok());
  CHECK(r.mismatch->q_exp == 5);
  CHECK(r.mismatch->x_exp == 0);
  CHECK(r.mismatch->lhs == "0");
  CHECK(r.mismatch->rhs == "1");
}

TEST_CASE("ring axioms on random truncated series") {
  std::mt19937 rng(11);
  for (int it = 0; it < 10; ++it) {
    Series a = random_series(rng, 30, false), b = random_series(rng, 30, false), c = random_series(rng, 30, false);
    CHECK(equal_to_order(mul(mul(a, b), c), mul(a, mul(b, c))).ok());
    CHECK(equal_to_order(mul(a, b + c), mul(a, b) + mul(a, c)).ok());
    CHECK(mul(a, b) == mul(b, a));
  }
}

TEST_CASE("mul(a, invert(a)) = 1 for random units") {
  std::mt19937 rng(13);
  for (int it = 0; it < 100; ++it) {
    Series a = random_series(rng, 25, true);
    if (it % 2) a = -a;
    OrderReport r = equal_to_order(mul(a, invert(a)), Series::one());
    CHECK(r.ok());
    CHECK(r.verified_order == 25);
  }
}

TEST_CASE("substitute composes on q powers") {
  std::mt19937 rng(17);
  Series a = random_series(rng, 20, false);
  CHECK(substitute(substitute(a, 2), 3) == substitute(a, 6));
}

TEST_CASE("truncation monotonicity") {
  std::mt19937 rng(19);
  Series a = random_series(rng, 40, true), b = random_series(rng, 40, true);
  Series lo = mul(invert(a.truncated(20)), b.truncated(20));
  Series hi = mul(invert(a), b);
  CHECK(equal_to_order(lo, hi).verified_order == 20);
  CHECK(equal_to_order(lo, hi).ok());
}

TEST_CASE("x-degree cap") {
  Series a = Series::monomial(Int(1), 10, 0);
  CHECK_THROWS_AS(mul(a, Series::one()), SeriesError);
  series_config().x_cap = 12;
  CHECK_NOTHROW(mul(a, Series::one()));
  series_config().x_cap = 8;
}

TEST_CASE("empty window") {
  CHECK_THROWS_AS(substitute(Series::zero(0), 2), SeriesError);
  CHECK_THROWS_AS(substitute(Series::monomial(Int(1), 1, 1, 5), 1, -1), SeriesError);
}
