#pragma once
// Identity and relation records loaded from catalog.json, with a batch verifier.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrs/bailey.hpp"
#include "rrs/qtools.hpp"

namespace rrs {

struct CatalogError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SourceTag {
  std::string kind;  // slater | paper_new | classical
  std::string label;
};

struct MbpInsertion {
  MBPParams pair;
  BLCase bl = BLCase::W;
  std::optional<int> member;  // the pair table's "i"; may be blank
  XValue x;                   // never formal here
  bool twist = false;
  bool xq = false;  // x = q with the (-q;q)_n weight, 1/(1-q) cleared
  bool q_negate = false;
};

struct BuiltinRef {
  std::string key;
  enum class X { None, Formal, One } x = X::None;
};

struct ProductSide {
  ProductExpr expr;
  long long scale = 1;
};

enum class RelationKind { SignVariant, QDilation, ParityEven, ParityOdd, AverageOfSignVariants, LinearCombination };
std::string relation_kind_name(RelationKind k);
RelationKind parse_relation_kind(const std::string& s);

struct RelationTarget {
  std::string record;  // with side
  bool use_rhs = true;
  std::string builtin;
  std::optional<ProductSide> product;
  bool q_negate = false;
  int q_dilation = 1;
  int shift = 0;
  long long scale = 1;
};

struct Relation {
  RelationKind kind = RelationKind::LinearCombination;
  std::vector<std::string> operands;
  std::vector<long long> coeffs;  // linear_combination; defaults to all 1
  int m = 1;                      // q_dilation
  bool alpha_twist = false;       // sign_variant by (-1)^(n/d) on alpha_n rather than q -> -q
  std::optional<RelationTarget> target;
};

struct Record {
  std::string id;
  SourceTag source;
  int order = 100;
  std::string notes;
  std::string skip;  // nonempty: explicit skip reason
  // exactly one of lhs/relation form is used
  std::optional<MbpInsertion> mbp;
  std::optional<BuiltinRef> builtin;
  std::optional<ProductSide> rhs;
  std::optional<Relation> relation;

  bool is_relation() const { return relation.has_value(); }
};

class Catalog {
 public:
  static Catalog parse(const std::string& json_text);
  static Catalog load(const std::string& path);  // CatalogError on I/O or schema problems

  const std::vector<Record>& records() const { return records_; }
  const Record* find(const std::string& id) const;

 private:
  std::vector<Record> records_;
};

// default catalog path: $RRS_CATALOG, else the build-time data/catalog.json
std::string default_catalog_path();

struct RecordResult {
  std::string id;
  std::string status;  // pass | fail | skip
  int verified_order = 0;
  std::optional<std::string> witness;
  std::string reason;  // skip reason or evaluation error
  double ms = 0;
};

struct CatalogReport {
  int order = 0;
  std::vector<RecordResult> results;
  int passed() const;
  int failed() const;
  int skipped() const;
  bool ok() const { return failed() == 0; }
  // timing fields are left out when with_timing is false
  std::string json(bool with_timing = true) const;
};

// LHS series of an identity record at the given order
Series record_lhs(const Catalog& cat, const Record& r, int order);

RecordResult verify_identity(const Catalog& cat, const Record& r, int order);
RecordResult verify_relation(const Catalog& cat, const Record& r, int order);
RecordResult verify_record(const Catalog& cat, const Record& r, int order);

// ids empty: every record; results keep catalog order regardless of jobs
CatalogReport run_all(const Catalog& cat, int order, int jobs, const std::vector<std::string>& ids = {});

// q -> -q
Series q_negate(const Series& s);

}  // namespace rrs
