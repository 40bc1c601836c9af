#pragma once
// Brute-force partition and overpartition counting for the Gordon / Bressoud /
// Andrews-Santos families and their dilations.

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rrs/qtools.hpp"

namespace rrs {

struct Partition {
  std::vector<int> parts;     // nonincreasing
  std::set<int> overlined;    // values whose first occurrence is overlined
  int weight() const;
  std::string str() const;
};

// Clauses read multiplicities m_r; "for j >= 1, r = a + b j" ranges are written {a, b}.
namespace clause {
struct MultBound { int r, c; };                       // m_r <= c
struct WindowSum { int a, b, delta, c; };             // m_r + m_{r+delta} <= c
struct GapDifference { int span, min_gap; };          // pi_j - pi_{j+span} >= min_gap
struct GapParity { int span, residue; };              // pi_j - pi_{j+span} <= 1 => sum_{h<=span} pi_{j+h} = residue mod 2
struct OnlyIf { int a, b, lo, hi, c, zeros; };        // m_r > 0 only if m^_{r-lo} + m_{r+hi} = c, m^_0 = zeros
struct Divisible { int a, b, div; };                  // div | m_r
struct PartFilter { int mod; std::set<int> allowed; };  // every part has an allowed residue
struct DistinctClass { int mod; std::set<int> res; };   // parts in these classes are distinct
struct NotBoth { int mod, a, b; };                    // mod j + a and mod j + b are not both parts
}  // namespace clause

using Clause = std::variant<clause::MultBound, clause::WindowSum, clause::GapDifference, clause::GapParity,
                            clause::OnlyIf, clause::Divisible, clause::PartFilter, clause::DistinctClass,
                            clause::NotBoth>;

// outer clauses see the whole partition; inner clauses see the parts divisible by d, divided by d
struct PartitionConstraint {
  std::vector<Clause> outer;
  int d = 1;
  std::vector<Clause> inner;
  bool accepts(const std::vector<int>& mult) const;  // mult[r] = m_r, r = 0..n
};

void for_each_partition(int n, const std::function<void(const std::vector<int>& mult)>& fn);
std::vector<int> mult_to_parts(const std::vector<int>& mult);

std::uint64_t count_constrained(int n, const PartitionConstraint& c);
std::vector<Partition> list_constrained(int n, const PartitionConstraint& c, std::size_t limit);

// a value v may be overlined once when v mod M is in overlined; every other copy needs plain
struct OverpartitionSpec {
  int mod = 1;
  std::set<int> overlined;
  std::set<int> plain;
  static OverpartitionSpec all();
};
std::uint64_t count_overpartitions(int n, const OverpartitionSpec& s);
std::vector<Partition> list_overpartitions(int n, const OverpartitionSpec& s, std::size_t limit);

// theorem-shaped constraints
PartitionConstraint gordon(int k, int i);            // difference form
PartitionConstraint gordon_multiplicity(int k, int i);
PartitionConstraint gordon_congruence(int k, int i);  // parts != 0, +-i mod 2k+1
PartitionConstraint bressoud(int k, int i);          // 1 <= i <= k
PartitionConstraint bressoud_congruence(int k, int i);  // i = k uses the Andrews-Lewis reading
PartitionConstraint andrews_santos(int k, int i);
PartitionConstraint andrews_santos_congruence(int k, int i);
PartitionConstraint dilate(const PartitionConstraint& c, int d);  // nonmultiples of d free

enum class Theorem {
  Gordon,
  GordonMultiplicity,
  Bressoud,
  AndrewsSantos,
  DilatedGordon,
  DilatedGordonPrinted,
  DilatedBressoud,
  DilatedAndrewsSantos,
  DilatedAndrewsSantosLiteral,
};
std::string theorem_name(Theorem t);
Theorem parse_theorem(const std::string& s);

struct TheoremParams {
  int k = 2, i = 1, d = 1;
};

struct PartitionCertificate {
  int n;
  std::uint64_t lhs, rhs;
  std::vector<std::string> lhs_witness, rhs_witness;
};

struct PartitionReport {
  Theorem theorem;
  TheoremParams params;
  int n_max = 0;
  std::vector<std::uint64_t> lhs, rhs;  // counts for n = 0..n_max
  bool product_ok = true;               // rhs counts equal the product coefficients
  std::optional<PartitionCertificate> counterexample;
  bool ok() const { return product_ok && !counterexample; }
  std::string str() const;
};

// the product whose coefficients the congruence side should reproduce
ProductExpr theorem_product(Theorem t, const TheoremParams& p);

PartitionReport verify_partition_theorem(Theorem t, const TheoremParams& p, int n_max);

}  // namespace rrs
