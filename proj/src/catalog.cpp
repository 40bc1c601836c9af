#include "rrs/catalog.hpp"

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"
#include "rrs/builtin_sums.hpp"
#include "rrs/qdiff.hpp"

namespace rrs {

using nlohmann::json;

namespace {

// extra q-order computed on each side before comparing
constexpr int kPad = 8;

const std::map<std::string, RelationKind>& kind_names() {
  static const std::map<std::string, RelationKind> m = {
      {"sign_variant", RelationKind::SignVariant},
      {"q_dilation", RelationKind::QDilation},
      {"parity_even", RelationKind::ParityEven},
      {"parity_odd", RelationKind::ParityOdd},
      {"average_of_sign_variants", RelationKind::AverageOfSignVariants},
      {"linear_combination", RelationKind::LinearCombination},
  };
  return m;
}

template <class T>
T get_or(const json& j, const char* key, T def) {
  auto it = j.find(key);
  return it == j.end() || it->is_null() ? def : it->get<T>();
}

ProductSide parse_product(const json& j) {
  ProductSide p;
  auto factors = [](const json& arr, std::vector<ProductFactor>& out) {
    for (const auto& f : arr) {
      ProductFactor pf;
      pf.sign = f.at("sign").get<int>();
      pf.q_exp = f.at("a").get<int>();
      pf.mod = f.at("m").get<int>();
      pf.x_exp = get_or(f, "x", 0);
      if (pf.sign != 1 && pf.sign != -1) throw CatalogError("factor sign must be +-1");
      if (pf.mod < 1) throw CatalogError("factor modulus must be positive");
      out.push_back(pf);
    }
  };
  factors(j.at("num"), p.expr.num);
  factors(j.at("den"), p.expr.den);
  for (const auto& f : p.expr.den)
    if (f.q_exp < 1) throw CatalogError("denominator factor needs a >= 1");
  p.scale = get_or(j, "scale", 1LL);
  return p;
}

MbpInsertion parse_mbp(const json& j) {
  MbpInsertion m;
  m.pair.family = parse_family(j.at("family").get<std::string>());
  m.pair.d = j.at("d").get<int>();
  m.pair.e = j.at("e").get<int>();
  m.pair.k = j.at("k").get<int>();
  if (m.pair.d < 1 || m.pair.e < 1 || m.pair.k < 1) throw CatalogError("d, e, k must be positive");
  m.bl = parse_case(j.at("case").get<std::string>());
  if (j.contains("i") && !j["i"].is_null()) {
    int i = j["i"].get<int>();
    if (i < 1 || i > family_size(m.pair)) throw CatalogError("member index out of range");
    m.member = i;
  }
  if (j.contains("x")) {
    m.x.sign = get_or(j["x"], "sign", 1);
    m.x.lam_exp = get_or(j["x"], "lam", 0);
  }
  m.twist = get_or(j, "twist", false);
  std::string variant = get_or<std::string>(j, "variant", "plain");
  if (variant == "xq")
    m.xq = true;
  else if (variant != "plain")
    throw CatalogError("unknown variant " + variant);
  m.q_negate = get_or(j, "q_negate", false);
  if (m.bl == BLCase::W && !m.member) throw CatalogError("W insertion needs a member index");
  return m;
}

RelationTarget parse_target(const json& j) {
  RelationTarget t;
  if (j.contains("record")) {
    t.record = j["record"].get<std::string>();
    std::string side = get_or<std::string>(j, "side", "rhs");
    if (side != "lhs" && side != "rhs") throw CatalogError("target side must be lhs or rhs");
    t.use_rhs = side == "rhs";
  } else if (j.contains("builtin")) {
    t.builtin = j["builtin"].get<std::string>();
    if (!find_builtin(t.builtin)) throw CatalogError("unknown builtin " + t.builtin);
  } else if (j.contains("product")) {
    t.product = parse_product(j["product"]);
  } else {
    throw CatalogError("target needs record, builtin or product");
  }
  t.q_negate = get_or(j, "q_negate", false);
  t.q_dilation = get_or(j, "q_dilation", 1);
  t.shift = get_or(j, "shift", 0);
  t.scale = get_or(j, "scale", 1LL);
  if (t.q_dilation < 1 || t.shift < 0) throw CatalogError("bad target transform");
  return t;
}

Record parse_record(const json& j) {
  Record r;
  r.id = j.at("id").get<std::string>();
  try {
    const json& s = j.at("source");
    r.source.kind = s.at("kind").get<std::string>();
    r.source.label = get_or<std::string>(s, "label", "");
    if (r.source.kind != "slater" && r.source.kind != "paper_new" && r.source.kind != "classical")
      throw CatalogError("unknown source kind " + r.source.kind);
    r.order = get_or(j, "order", 100);
    r.notes = get_or<std::string>(j, "notes", "");
    r.skip = get_or<std::string>(j, "skip", "");
    if (j.contains("relation")) {
      const json& rj = j["relation"];
      Relation rel;
      rel.kind = parse_relation_kind(rj.at("kind").get<std::string>());
      rel.operands = rj.at("operands").get<std::vector<std::string>>();
      if (rel.operands.empty()) throw CatalogError("relation without operands");
      rel.coeffs = get_or(rj, "coeffs", std::vector<long long>(rel.operands.size(), 1));
      if (rel.coeffs.size() != rel.operands.size()) throw CatalogError("coeffs and operands differ in length");
      rel.m = get_or(rj, "m", 1);
      rel.alpha_twist = get_or(rj, "alpha_twist", false);
      if (j.contains("target")) rel.target = parse_target(j["target"]);
      if (!rel.target && r.skip.empty()) throw CatalogError("relation without target must be skipped");
      r.relation = rel;
    } else {
      const json& l = j.at("lhs");
      std::string type = l.at("type").get<std::string>();
      if (type == "mbp") {
        r.mbp = parse_mbp(l);
      } else if (type == "builtin") {
        BuiltinRef b;
        b.key = l.at("key").get<std::string>();
        const BuiltinSum* bs = find_builtin(b.key);
        if (!bs) throw CatalogError("unknown builtin " + b.key);
        std::string x = get_or<std::string>(l, "x", "");
        if (x == "formal")
          b.x = BuiltinRef::X::Formal;
        else if (x == "one")
          b.x = BuiltinRef::X::One;
        else if (!x.empty())
          throw CatalogError("builtin x must be formal or one");
        if (bs->x_formal && b.x == BuiltinRef::X::None) throw CatalogError("builtin carries x; say formal or one");
        r.builtin = b;
      } else {
        throw CatalogError("unknown lhs type " + type);
      }
      if (j.contains("rhs")) r.rhs = parse_product(j["rhs"]);
      if (!r.rhs && r.skip.empty()) throw CatalogError("identity without rhs must be skipped");
    }
  } catch (const json::exception& e) {
    throw CatalogError("record " + r.id + ": " + e.what());
  } catch (const CatalogError& e) {
    throw CatalogError("record " + r.id + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CatalogError("record " + r.id + ": " + e.what());
  }
  return r;
}

Series eval_mbp(const MbpInsertion& m, int N) {
  const XValue formal{true, 1, 0};
  Series s;
  if (m.xq) {
    s = bl_insert_slater_xq(m.pair, N, m.twist).lhs;
    s.mul_factor(Int(-1), 0, 1);
  } else if (m.bl == BLCase::W) {
    const int K = family_size(m.pair);
    const int i = *m.member;
    if (i == K) {
      s = bl_insert(BLCase::W, m.pair, N, XValue{false, 1, 0}, m.twist).lhs;
    } else {
      Series top = bl_insert(BLCase::W, m.pair, N, formal, m.twist).lhs;
      if (i == 1)
        s = at_x1(member_one_from_top(m.pair, top));
      else
        s = at_x1(derive_family(m.pair, top, N).members.at(i));
    }
  } else {
    s = bl_insert(m.bl, m.pair, N, m.x, m.twist).lhs;
  }
  return m.q_negate ? q_negate(s) : s;
}

Series eval_product(const ProductSide& p, int N) {
  Series s = product_expand(p.expr, N);
  if (p.scale != 1) s.scale(Int(p.scale));
  return s;
}

const Record& operand(const Catalog& cat, const std::string& id) {
  const Record* r = cat.find(id);
  if (!r) throw CatalogError("unknown operand " + id);
  return *r;
}

Series relation_lhs(const Catalog& cat, const Relation& rel, int N) {
  const Record& op0 = operand(cat, rel.operands[0]);
  switch (rel.kind) {
    case RelationKind::SignVariant:
      if (rel.alpha_twist) {
        if (!op0.mbp) throw CatalogError("alpha twist needs an mbp operand");
        MbpInsertion m = *op0.mbp;
        m.twist = !m.twist;
        return eval_mbp(m, N);
      }
      return q_negate(record_lhs(cat, op0, N));
    case RelationKind::QDilation:
      return substitute(record_lhs(cat, op0, (N + rel.m - 1) / rel.m + 1), rel.m).truncated(N);
    case RelationKind::ParityEven:
    case RelationKind::ParityOdd: {
      if (!op0.builtin) throw CatalogError("parity extraction needs a builtin single sum");
      return eval_builtin_parity(op0.builtin->key, rel.kind == RelationKind::ParityOdd ? 1 : 0, N);
    }
    case RelationKind::AverageOfSignVariants: {
      Series a = record_lhs(cat, op0, N);
      return a + q_negate(a);
    }
    case RelationKind::LinearCombination: {
      Series s = Series::zero(N);
      for (size_t j = 0; j < rel.operands.size(); ++j) {
        Series t = record_lhs(cat, operand(cat, rel.operands[j]), N);
        s += t.scale(Int(rel.coeffs[j]));
      }
      return s;
    }
  }
  throw CatalogError("unhandled relation kind");
}

Series relation_target(const Catalog& cat, const RelationTarget& t, int N) {
  const int M = (N + t.q_dilation - 1) / t.q_dilation + 1;
  Series s;
  if (!t.record.empty()) {
    const Record& r = operand(cat, t.record);
    if (t.use_rhs) {
      if (!r.rhs) throw CatalogError("target record has no rhs");
      s = eval_product(*r.rhs, M);
    } else {
      s = record_lhs(cat, r, M);
    }
  } else if (!t.builtin.empty()) {
    s = eval_builtin(t.builtin, M);
  } else {
    s = eval_product(*t.product, M);
  }
  if (t.q_negate) s = q_negate(s);
  if (t.q_dilation != 1) s = substitute(s, t.q_dilation);
  if (t.shift) s = s.shifted(0, t.shift);
  if (t.scale != 1) s.scale(Int(t.scale));
  return s.truncated(N);
}

std::string witness(const Mismatch& m) {
  std::ostringstream os;
  os << "q^" << m.q_exp;
  if (m.x_exp) os << " x^" << m.x_exp;
  os << ": lhs " << m.lhs << ", rhs " << m.rhs;
  return os.str();
}

RecordResult compare(const std::string& id, const Series& lhs, const Series& rhs, int order) {
  RecordResult res;
  res.id = id;
  if (lhs.low() < 0 || rhs.low() < 0) {
    res.status = "fail";
    res.witness = "negative q-exponent in a top-level series";
    return res;
  }
  OrderReport rep = equal_to_order(lhs.truncated(order), rhs.truncated(order));
  res.verified_order = rep.verified_order;
  if (!rep.ok()) {
    res.status = "fail";
    res.witness = witness(*rep.mismatch);
  } else if (rep.verified_order < order) {
    res.status = "fail";
    res.witness = "agreement only to order " + std::to_string(rep.verified_order);
  } else {
    res.status = "pass";
  }
  return res;
}

template <class F>
RecordResult timed(const Record& r, F body) {
  auto t0 = std::chrono::steady_clock::now();
  RecordResult res;
  if (!r.skip.empty()) {
    res.id = r.id;
    res.status = "skip";
    res.reason = r.skip;
  } else {
    try {
      res = body();
    } catch (const std::exception& e) {
      res = RecordResult{};
      res.id = r.id;
      res.status = "fail";
      res.reason = e.what();
      res.witness = std::string("evaluation error: ") + e.what();
    }
  }
  res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace

std::string relation_kind_name(RelationKind k) {
  for (const auto& [n, v] : kind_names())
    if (v == k) return n;
  return "?";
}

RelationKind parse_relation_kind(const std::string& s) {
  auto it = kind_names().find(s);
  if (it == kind_names().end()) throw CatalogError("unknown relation kind " + s);
  return it->second;
}

Series q_negate(const Series& s) {
  if (s.is_zero()) return s;
  std::vector<XPoly> rows;
  for (int e = s.low(); e < s.high(); ++e) {
    XPoly p = s.row(e);
    if (e % 2)
      for (auto& c : p.c) c = -c;
    rows.push_back(std::move(p));
  }
  return Series::from_rows(s.low(), std::move(rows), s.trunc());
}

Catalog Catalog::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw CatalogError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw CatalogError("catalog must be a JSON array");
  Catalog c;
  for (const auto& rj : j) c.records_.push_back(parse_record(rj));
  std::map<std::string, int> seen;
  for (const auto& r : c.records_)
    if (seen[r.id]++) throw CatalogError("duplicate id " + r.id);
  for (const auto& r : c.records_) {
    if (!r.relation) continue;
    for (const auto& o : r.relation->operands)
      if (!seen.count(o)) throw CatalogError("record " + r.id + ": operand " + o + " does not resolve");
    const auto& t = r.relation->target;
    if (t && !t->record.empty() && !seen.count(t->record))
      throw CatalogError("record " + r.id + ": target " + t->record + " does not resolve");
  }
  return c;
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot read catalog " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const Record* Catalog::find(const std::string& id) const {
  for (const auto& r : records_)
    if (r.id == id) return &r;
  return nullptr;
}

std::string default_catalog_path() {
  if (const char* e = std::getenv("RRS_CATALOG"); e && *e) return e;
  return RRS_DEFAULT_CATALOG;
}

Series record_lhs(const Catalog& cat, const Record& r, int order) {
  if (!r.skip.empty()) throw CatalogError("record " + r.id + " is skipped");
  if (r.relation) return relation_lhs(cat, *r.relation, order);
  if (r.mbp) return eval_mbp(*r.mbp, order + kPad).truncated(order);
  Series s = eval_builtin(r.builtin->key, order);
  return r.builtin->x == BuiltinRef::X::One ? at_x1(s) : s;
}

RecordResult verify_identity(const Catalog& cat, const Record& r, int order) {
  return timed(r, [&] {
    if (r.relation) throw CatalogError("not an identity record");
    return compare(r.id, record_lhs(cat, r, order), eval_product(*r.rhs, order), order);
  });
}

RecordResult verify_relation(const Catalog& cat, const Record& r, int order) {
  return timed(r, [&] {
    if (!r.relation) throw CatalogError("not a relation record");
    for (const auto& o : r.relation->operands)
      if (!operand(cat, o).skip.empty()) throw CatalogError("operand " + o + " is skipped");
    return compare(r.id, relation_lhs(cat, *r.relation, order), relation_target(cat, *r.relation->target, order), order);
  });
}

RecordResult verify_record(const Catalog& cat, const Record& r, int order) {
  return r.relation ? verify_relation(cat, r, order) : verify_identity(cat, r, order);
}

CatalogReport run_all(const Catalog& cat, int order, int jobs, const std::vector<std::string>& ids) {
  std::vector<const Record*> todo;
  if (ids.empty()) {
    for (const auto& r : cat.records()) todo.push_back(&r);
  } else {
    for (const auto& id : ids) {
      const Record* r = cat.find(id);
      if (!r) throw CatalogError("unknown id " + id);
      todo.push_back(r);
    }
  }
  CatalogReport rep;
  rep.order = order;
  rep.results.resize(todo.size());
  const int n = static_cast<int>(todo.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (int j = 0; j < n; ++j) rep.results[j] = verify_record(cat, *todo[j], order);
  return rep;
}

int CatalogReport::passed() const {
  int c = 0;
  for (const auto& r : results) c += r.status == "pass";
  return c;
}
int CatalogReport::failed() const {
  int c = 0;
  for (const auto& r : results) c += r.status == "fail";
  return c;
}
int CatalogReport::skipped() const {
  int c = 0;
  for (const auto& r : results) c += r.status == "skip";
  return c;
}

std::string CatalogReport::json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["order"] = order;
  j["results"] = nlohmann::ordered_json::array();
  double total_ms = 0;
  for (const auto& r : results) {
    nlohmann::ordered_json e;
    e["id"] = r.id;
    e["status"] = r.status;
    e["verified_order"] = r.verified_order;
    if (r.witness) e["witness"] = *r.witness;
    if (!r.reason.empty()) e["reason"] = r.reason;
    if (with_timing) e["ms"] = std::round(r.ms * 1000) / 1000;
    total_ms += r.ms;
    j["results"].push_back(e);
  }
  nlohmann::ordered_json s;
  s["total"] = static_cast<int>(results.size());
  s["pass"] = passed();
  s["fail"] = failed();
  s["skip"] = skipped();
  if (with_timing) s["ms"] = std::round(total_ms);
  j["summary"] = s;
  return j.dump(1) + "\n";
}

}  // namespace rrs
