#include "rrs/partitions.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rrs/qdiff.hpp"

namespace rrs {

int Partition::weight() const {
  int w = 0;
  for (int p : parts) w += p;
  return w;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  std::set<int> seen;
  for (size_t j = 0; j < parts.size(); ++j) {
    if (j) os << ",";
    os << parts[j];
    if (overlined.count(parts[j]) && seen.insert(parts[j]).second) os << "bar";
  }
  os << ")";
  return os.str();
}

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> mult(n + 1, 0);
  // assign multiplicities from the largest part size down
  std::function<void(int, int)> rec = [&](int r, int rest) {
    if (rest == 0) {
      fn(mult);
      return;
    }
    if (r == 1) {
      mult[1] = rest;
      fn(mult);
      mult[1] = 0;
      return;
    }
    for (int m = rest / r; m >= 0; --m) {
      mult[r] = m;
      rec(r - 1, rest - m * r);
    }
    mult[r] = 0;
  };
  if (n == 0) {
    fn(mult);
    return;
  }
  rec(n, n);
}

std::vector<int> mult_to_parts(const std::vector<int>& mult) {
  std::vector<int> parts;
  for (int r = static_cast<int>(mult.size()) - 1; r >= 1; --r)
    for (int j = 0; j < mult[r]; ++j) parts.push_back(r);
  return parts;
}

namespace {

int pmod(int a, int m) { return ((a % m) + m) % m; }

struct Eval {
  const std::vector<int>& m;
  std::vector<int> sorted;
  bool have_sorted = false;

  int get(int r) const { return r >= 1 && r < static_cast<int>(m.size()) ? m[r] : 0; }
  int top() const { return static_cast<int>(m.size()) - 1; }
  const std::vector<int>& parts() {
    if (!have_sorted) {
      sorted = mult_to_parts(m);
      have_sorted = true;
    }
    return sorted;
  }

  bool operator()(const clause::MultBound& c) { return get(c.r) <= c.c; }
  bool operator()(const clause::WindowSum& c) {
    for (int j = 1; c.a + c.b * j <= top(); ++j) {
      int r = c.a + c.b * j;
      if (r >= 1 && get(r) + get(r + c.delta) > c.c) return false;
    }
    return true;
  }
  bool operator()(const clause::GapDifference& c) {
    const auto& p = parts();
    for (size_t j = 0; j + c.span < p.size(); ++j)
      if (p[j] - p[j + c.span] < c.min_gap) return false;
    return true;
  }
  bool operator()(const clause::GapParity& c) {
    const auto& p = parts();
    for (size_t j = 0; j + c.span < p.size(); ++j) {
      if (p[j] - p[j + c.span] > 1) continue;
      long long s = 0;
      for (int h = 0; h <= c.span; ++h) s += p[j + h];
      if (pmod(static_cast<int>(s % 2), 2) != pmod(c.residue, 2)) return false;
    }
    return true;
  }
  bool operator()(const clause::OnlyIf& c) {
    for (int j = 1; c.a + c.b * j <= top(); ++j) {
      int r = c.a + c.b * j;
      if (r < 1 || get(r) == 0) continue;
      int lo = r - c.lo;
      int mhat = lo == 0 ? c.zeros : get(lo);
      if (mhat + get(r + c.hi) != c.c) return false;
    }
    return true;
  }
  bool operator()(const clause::Divisible& c) {
    for (int j = 1; c.a + c.b * j <= top(); ++j) {
      int r = c.a + c.b * j;
      if (r >= 1 && get(r) % c.div != 0) return false;
    }
    return true;
  }
  bool operator()(const clause::PartFilter& c) {
    for (int r = 1; r <= top(); ++r)
      if (m[r] && !c.allowed.count(r % c.mod)) return false;
    return true;
  }
  bool operator()(const clause::DistinctClass& c) {
    for (int r = 1; r <= top(); ++r)
      if (m[r] > 1 && c.res.count(r % c.mod)) return false;
    return true;
  }
  bool operator()(const clause::NotBoth& c) {
    for (int j = 0; c.mod * j + std::min(c.a, c.b) <= top(); ++j)
      if (get(c.mod * j + c.a) > 0 && get(c.mod * j + c.b) > 0) return false;
    return true;
  }
};

bool all_hold(const std::vector<Clause>& cs, const std::vector<int>& m) {
  Eval ev{m, {}, false};
  for (const auto& c : cs)
    if (!std::visit(ev, c)) return false;
  return true;
}

}  // namespace

bool PartitionConstraint::accepts(const std::vector<int>& mult) const {
  if (!all_hold(outer, mult)) return false;
  if (inner.empty()) return true;
  if (d == 1) return all_hold(inner, mult);
  const int top = static_cast<int>(mult.size()) - 1;
  std::vector<int> sub(top / d + 1, 0);
  for (int r = 1; r * d <= top; ++r) sub[r] = mult[r * d];
  return all_hold(inner, sub);
}

std::uint64_t count_constrained(int n, const PartitionConstraint& c) {
  std::uint64_t cnt = 0;
  for_each_partition(n, [&](const std::vector<int>& m) {
    if (c.accepts(m)) ++cnt;
  });
  return cnt;
}

std::vector<Partition> list_constrained(int n, const PartitionConstraint& c, std::size_t limit) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& m) {
    if (out.size() < limit && c.accepts(m)) out.push_back(Partition{mult_to_parts(m), {}});
  });
  return out;
}

OverpartitionSpec OverpartitionSpec::all() { return OverpartitionSpec{1, {0}, {0}}; }

std::uint64_t count_overpartitions(int n, const OverpartitionSpec& s) {
  std::uint64_t total = 0;
  for_each_partition(n, [&](const std::vector<int>& m) {
    std::uint64_t ways = 1;
    for (int v = 1; v <= n && ways; ++v) {
      if (!m[v]) continue;
      const bool plain = s.plain.count(v % s.mod) > 0;
      const bool over = s.overlined.count(v % s.mod) > 0;
      ways *= (plain ? 1 : 0) + (over && (m[v] == 1 || plain) ? 1 : 0);
    }
    total += ways;
  });
  return total;
}

std::vector<Partition> list_overpartitions(int n, const OverpartitionSpec& s, std::size_t limit) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const std::vector<int>& m) {
    std::vector<int> parts = mult_to_parts(m);
    std::vector<int> vals;
    for (int v = n; v >= 1; --v)
      if (m[v]) vals.push_back(v);
    // every subset of distinct values to overline
    for (std::uint64_t mask = 0; mask < (1ULL << vals.size()) && out.size() < limit; ++mask) {
      bool good = true;
      Partition p{parts, {}};
      for (size_t j = 0; j < vals.size() && good; ++j) {
        const int v = vals[j];
        const bool plain = s.plain.count(v % s.mod) > 0;
        const bool over = s.overlined.count(v % s.mod) > 0;
        if (mask >> j & 1) {
          good = over && (m[v] == 1 || plain);
          p.overlined.insert(v);
        } else {
          good = plain;
        }
      }
      if (good) out.push_back(std::move(p));
    }
  });
  return out;
}

namespace {

std::set<int> residues_except(int mod, std::initializer_list<int> drop) {
  std::set<int> s;
  for (int r = 0; r < mod; ++r) s.insert(r);
  for (int r : drop) s.erase(pmod(r, mod));
  return s;
}

std::set<int> even_nonzero(int mod) {
  std::set<int> s;
  for (int r = 2; r < mod; r += 2) s.insert(r);
  return s;
}

void need(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

PartitionConstraint gordon(int k, int i) {
  need(1 <= i && i <= k, "gordon: need 1 <= i <= k");
  return PartitionConstraint{{clause::MultBound{1, i - 1}, clause::GapDifference{k - 1, 2}}, 1, {}};
}

PartitionConstraint gordon_multiplicity(int k, int i) {
  need(1 <= i && i <= k, "gordon: need 1 <= i <= k");
  return PartitionConstraint{{clause::MultBound{1, i - 1}, clause::WindowSum{0, 1, 1, k - 1}}, 1, {}};
}

PartitionConstraint gordon_congruence(int k, int i) {
  const int M = 2 * k + 1;
  return PartitionConstraint{{clause::PartFilter{M, residues_except(M, {0, i, -i})}}, 1, {}};
}

PartitionConstraint bressoud(int k, int i) {
  need(k >= 2 && 1 <= i && i <= k, "bressoud: need k >= 2 and 1 <= i <= k");
  return PartitionConstraint{
      {clause::MultBound{1, i - 1}, clause::GapDifference{k - 1, 2}, clause::GapParity{k - 2, i - 1}}, 1, {}};
}

PartitionConstraint bressoud_congruence(int k, int i) {
  need(k >= 2 && 1 <= i && i <= k, "bressoud: need k >= 2 and 1 <= i <= k");
  if (i < k) return PartitionConstraint{{clause::PartFilter{2 * k, residues_except(2 * k, {0, i, -i})}}, 1, {}};
  if (k == 2) return PartitionConstraint{{clause::PartFilter{2, {1}}, clause::DistinctClass{2, {1}}}, 1, {}};
  return PartitionConstraint{{clause::PartFilter{k, residues_except(k, {0})}, clause::NotBoth{k, 1, k - 1}}, 1, {}};
}

PartitionConstraint andrews_santos(int k, int i) {
  need(1 <= i && i <= k, "andrews-santos: need 1 <= i <= k");
  return PartitionConstraint{
      {clause::MultBound{2, i - 1}, clause::WindowSum{0, 2, 2, k - 1}, clause::OnlyIf{-1, 2, 1, 1, k - 1, k - i}}, 1, {}};
}

PartitionConstraint andrews_santos_congruence(int k, int i) {
  const int M = 4 * k;
  std::set<int> allowed = even_nonzero(M);
  std::set<int> odd{pmod(2 * i - 1, M), pmod(-(2 * i - 1), M)};
  allowed.insert(odd.begin(), odd.end());
  return PartitionConstraint{{clause::PartFilter{M, allowed}, clause::DistinctClass{M, odd}}, 1, {}};
}

PartitionConstraint dilate(const PartitionConstraint& c, int d) {
  need(c.d == 1 && c.inner.empty(), "dilate: constraint is already dilated");
  return PartitionConstraint{{}, d, c.outer};
}

std::string theorem_name(Theorem t) {
  switch (t) {
    case Theorem::Gordon: return "gordon";
    case Theorem::GordonMultiplicity: return "gordon-multiplicity";
    case Theorem::Bressoud: return "bressoud";
    case Theorem::AndrewsSantos: return "andrews-santos";
    case Theorem::DilatedGordon: return "dilated-gordon";
    case Theorem::DilatedGordonPrinted: return "dilated-gordon-printed";
    case Theorem::DilatedBressoud: return "dilated-bressoud";
    case Theorem::DilatedAndrewsSantos: return "dilated-andrews-santos";
    case Theorem::DilatedAndrewsSantosLiteral: return "dilated-andrews-santos-literal";
  }
  return "?";
}

Theorem parse_theorem(const std::string& s) {
  for (Theorem t : {Theorem::Gordon, Theorem::GordonMultiplicity, Theorem::Bressoud, Theorem::AndrewsSantos,
                    Theorem::DilatedGordon, Theorem::DilatedGordonPrinted, Theorem::DilatedBressoud,
                    Theorem::DilatedAndrewsSantos, Theorem::DilatedAndrewsSantosLiteral})
    if (theorem_name(t) == s) return t;
  throw std::invalid_argument("unknown theorem: " + s);
}

namespace {

using Side = std::variant<PartitionConstraint, OverpartitionSpec>;

bool dilated(Theorem t) {
  return t == Theorem::DilatedGordon || t == Theorem::DilatedGordonPrinted || t == Theorem::DilatedBressoud ||
         t == Theorem::DilatedAndrewsSantos || t == Theorem::DilatedAndrewsSantosLiteral;
}

std::pair<Side, Side> sides(Theorem t, const TheoremParams& p) {
  const int k = p.k, i = p.i, d = dilated(t) ? p.d : 1;
  need(d >= 1, "d must be positive");
  switch (t) {
    case Theorem::Gordon: return {gordon(k, i), gordon_congruence(k, i)};
    case Theorem::GordonMultiplicity: return {gordon_multiplicity(k, i), gordon(k, i)};
    case Theorem::Bressoud: return {bressoud(k, i), bressoud_congruence(k, i)};
    case Theorem::AndrewsSantos: return {andrews_santos(k, i), andrews_santos_congruence(k, i)};
    case Theorem::DilatedGordon: {
      const int M = d * (2 * k + 1);
      return {dilate(gordon_multiplicity(k, i), d),
              PartitionConstraint{{clause::PartFilter{M, residues_except(M, {0, d * i, -d * i})}}, 1, {}}};
    }
    case Theorem::DilatedGordonPrinted: {
      const int M = 2 * d * (k + 1);
      return {dilate(gordon_multiplicity(k, i), d),
              PartitionConstraint{{clause::PartFilter{M, residues_except(M, {0, d * i, -d * i})}}, 1, {}}};
    }
    case Theorem::DilatedBressoud: return {dilate(bressoud(k, i), d), dilate(bressoud_congruence(k, i), d)};
    case Theorem::DilatedAndrewsSantos:
    case Theorem::DilatedAndrewsSantosLiteral: {
      PartitionConstraint lhs = dilate(andrews_santos(k, i), d);
      const int M = 4 * d * k;
      std::set<int> odd{pmod(d * (2 * i - 1), M), pmod(-d * (2 * i - 1), M)};
      if (d % 2 == 0) {
        lhs.outer.push_back(clause::Divisible{-1, 2, d});
        return {lhs, OverpartitionSpec{M, odd, even_nonzero(M)}};
      }
      if (t == Theorem::DilatedAndrewsSantos) {
        // odd parts that are not multiples of d never occur on the product side
        std::set<int> allowed;
        for (int r = 0; r < 2 * d; ++r)
          if (r % 2 == 0 || r % d == 0) allowed.insert(r);
        lhs.outer.push_back(clause::PartFilter{2 * d, allowed});
      }
      std::set<int> allowed = even_nonzero(M);
      allowed.insert(odd.begin(), odd.end());
      return {lhs, PartitionConstraint{{clause::PartFilter{M, allowed}, clause::DistinctClass{M, odd}}, 1, {}}};
    }
  }
  throw std::invalid_argument("unknown theorem");
}

std::uint64_t count_side(int n, const Side& s) {
  if (auto* c = std::get_if<PartitionConstraint>(&s)) return count_constrained(n, *c);
  return count_overpartitions(n, std::get<OverpartitionSpec>(s));
}

std::vector<std::string> witness(int n, const Side& s, std::size_t limit) {
  std::vector<Partition> ps;
  if (auto* c = std::get_if<PartitionConstraint>(&s)) ps = list_constrained(n, *c, limit);
  else ps = list_overpartitions(n, std::get<OverpartitionSpec>(s), limit);
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

}  // namespace

ProductExpr theorem_product(Theorem t, const TheoremParams& p) {
  const int d = dilated(t) ? p.d : 1;
  switch (t) {
    case Theorem::Gordon:
    case Theorem::GordonMultiplicity:
    case Theorem::DilatedGordon: return q_product_expr({Family::S, d, 1, p.k}, p.i);
    case Theorem::Bressoud:
    case Theorem::DilatedBressoud: return q_product_expr({Family::E, d, 1, p.k}, p.i);
    case Theorem::AndrewsSantos:
    case Theorem::DilatedAndrewsSantos:
    case Theorem::DilatedAndrewsSantosLiteral: return q_product_expr({Family::JS, d, 1, p.k}, p.i);
    case Theorem::DilatedGordonPrinted: {
      // the generating function of the printed congruence side
      const int M = 2 * d * (p.k + 1);
      ProductExpr e;
      for (int r : residues_except(M, {0, d * p.i, -d * p.i})) e.den.push_back({1, r, M});
      return e;
    }
  }
  throw std::invalid_argument("unknown theorem");
}

PartitionReport verify_partition_theorem(Theorem t, const TheoremParams& p, int n_max) {
  auto [lhs_side, rhs_side] = sides(t, p);
  PartitionReport rep{t, p, n_max, std::vector<std::uint64_t>(n_max + 1), std::vector<std::uint64_t>(n_max + 1), true, std::nullopt};
#pragma omp parallel for schedule(dynamic, 1)
  for (int n = n_max; n >= 0; --n) {
    rep.lhs[n] = count_side(n, lhs_side);
    rep.rhs[n] = count_side(n, rhs_side);
  }
  for (int n = 0; n <= n_max; ++n) {
    if (rep.lhs[n] != rep.rhs[n]) {
      rep.counterexample = PartitionCertificate{n, rep.lhs[n], rep.rhs[n], witness(n, lhs_side, 40), witness(n, rhs_side, 40)};
      break;
    }
  }
  Series prod = product_expand(theorem_product(t, p), n_max + 1);
  for (int n = 0; n <= n_max; ++n)
    if (prod.coeff(n, 0) != Int(static_cast<long long>(rep.rhs[n]))) rep.product_ok = false;
  return rep;
}

std::string PartitionReport::str() const {
  std::ostringstream os;
  os << theorem_name(theorem) << " k=" << params.k << " i=" << params.i;
  if (dilated(theorem)) os << " d=" << params.d;
  os << " n<=" << n_max << ": ";
  if (ok()) return os.str() + "ok";
  if (!product_ok) os << "congruence side differs from the product; ";
  if (counterexample) {
    const auto& c = *counterexample;
    os << "n=" << c.n << " lhs=" << c.lhs << " rhs=" << c.rhs;
  }
  return os.str();
}

}  // namespace rrs
