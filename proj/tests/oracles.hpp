#pragma once
// Independent reference computations used only by the tests.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

// dense univariate polynomial product, coefficients as int64
inline std::vector<long long> poly_mul(const std::vector<long long>& a, const std::vector<long long>& b, size_t n) {
  std::vector<long long> r(n, 0);
  for (size_t i = 0; i < a.size() && i < n; ++i)
    for (size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  return r;
}

// visit every partition of n as a nonincreasing vector of parts
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      f(parts);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      parts.push_back(p);
      rec(rest - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
}

inline long long count_partitions(int n, const std::function<bool(const std::vector<int>&)>& pred) {
  long long c = 0;
  for_each_partition(n, [&](const std::vector<int>& p) { c += pred(p) ? 1 : 0; });
  return c;
}

}  // namespace oracle
