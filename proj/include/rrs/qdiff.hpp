#pragma once
// Andrews' H/J functions, the Q / Qtilde / Qbar families and their q-difference systems.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rrs/bailey.hpp"
#include "rrs/qtools.hpp"

namespace rrs {

// k and i are stored doubled so the half indices of the E family stay integral.
// a = 0 when a_qexp is empty, otherwise a = q^{a_qexp}.
struct HParams {
  int k2 = 2;
  int i2 = 2;
  std::optional<int> a_qexp;
  int base = 1;
};

// the H argument y = x^x_mult q^q_shift (x_mult = 2 is the x -> x^2 mode)
struct HArg {
  int x_mult = 1;
  int q_shift = 0;
};

// H_{k,i}(a; y; q^base). With q_shift = 0 the n = 0 term needs (1 - y^i)/(1 - y) to be a
// Laurent polynomial, which fails for half-integer i in x^2 mode.
Series h_function(const HParams& p, HArg y, int trunc);
// J_{k,i}(a; y; q^base) = H_{k,i}(a; y q^base) - a y q^base H_{k,i-1}(a; y q^base)
Series j_function(const HParams& p, HArg y, int trunc);

inline int family_size(const MBPParams& p) { return p.d * (p.e - 1) + p.k; }

struct QFamily {
  MBPParams params;
  int trunc = 0;
  std::map<int, Series> members;  // i = 1..K
};

// Q_i straight from the J definition; i may lie outside 1..K (boundary values)
Series q_member(const MBPParams& p, int i, int trunc);
QFamily q_family(const MBPParams& p, int trunc);

// the top member from beta sums (F, Ftilde, Fbar)
Series f_family(const MBPParams& p, int trunc);

// Q_1 from Q_K alone (also used for twisted pairs, which have no system of their own)
Series member_one_from_top(const MBPParams& p, const Series& top);

// members 1..K solved from the top member with the q-difference system and Q_i(0) = 1
QFamily derive_family(const MBPParams& p, const Series& top, int trunc);

struct QDiffFailure {
  int i = 0;
  Mismatch where;
};
struct QDiffReport {
  MBPParams params;
  int trunc = 0;
  std::vector<QDiffFailure> failures;
  bool initial_conditions_ok = true;
  bool ok() const { return failures.empty() && initial_conditions_ok; }
  std::string str() const;
};
// checks every equation i = 1..K of the kind's system against the direct members
QDiffReport verify_qdiff(const QFamily& fam);

// the x = 1 product of the lemma
ProductExpr q_product_expr(const MBPParams& p, int i);
Series q_product_at_one(const MBPParams& p, int i, int trunc);

}  // namespace rrs
