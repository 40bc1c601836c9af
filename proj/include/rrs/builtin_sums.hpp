#pragma once
// Code-registered multi-sums for catalog identities that are not a plain pair insertion.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rrs/series.hpp"

namespace rrs {

struct BuiltinSum {
  std::string key;
  std::string formula;  // human-readable summand
  bool x_formal = false;  // series carries x (otherwise x-free)
  // single sums expose their n-th summand for parity extraction
  std::function<Series(int n, int trunc)> term;
  std::function<Series(int trunc)> eval;
};

const std::vector<BuiltinSum>& builtin_sums();
const BuiltinSum* find_builtin(const std::string& key);

Series eval_builtin(const std::string& key, int trunc);
// sum over even (parity 0) or odd (parity 1) indices n only; single sums only
Series eval_builtin_parity(const std::string& key, int parity, int trunc);

}  // namespace rrs
