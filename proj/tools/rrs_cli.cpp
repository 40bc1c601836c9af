// rrs: verify catalog records, derive identity families, check partition theorems.

#include <cstdio>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "rrs/catalog.hpp"
#include "rrs/partitions.hpp"
#include "rrs/qdiff.hpp"

using namespace rrs;
using nlohmann::ordered_json;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kIO = 3 };

struct CliConfig {
  int order = 100;
  int jobs = 1;
  std::string output = "text";
  std::string catalog_path;
  bool full = false;
};

int cmd_verify(const CliConfig& cfg, const std::vector<std::string>& ids, bool all, bool timing) {
  if (all == !ids.empty()) {
    std::cerr << "verify: give either --id or --all\n";
    return kUsage;
  }
  Catalog cat;
  try {
    cat = Catalog::load(cfg.catalog_path.empty() ? default_catalog_path() : cfg.catalog_path);
  } catch (const CatalogError& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return kIO;
  }
  for (const auto& id : ids)
    if (!cat.find(id)) {
      std::cerr << "verify: unknown id " << id << "\n";
      return kUsage;
    }
  CatalogReport rep = run_all(cat, cfg.order, cfg.jobs, ids);
  if (cfg.output == "json") {
    std::cout << rep.json(timing) << "\n";
  } else {
    for (const auto& r : rep.results) {
      std::printf("%-24s %-4s %4d", r.id.c_str(), r.status.c_str(), r.verified_order);
      if (r.witness) std::printf("  %s", r.witness->c_str());
      if (!r.reason.empty()) std::printf("  (%s)", r.reason.c_str());
      if (timing) std::printf("  %.1f ms", r.ms);
      std::printf("\n");
    }
    std::printf("order %d: %d pass, %d fail, %d skip\n", rep.order, rep.passed(), rep.failed(), rep.skipped());
  }
  return rep.ok() ? kPass : kFail;
}

int cmd_derive(const CliConfig& cfg, const std::string& fam_name, int d, int e, int k) {
  MBPParams p;
  try {
    p.family = parse_family(fam_name);
  } catch (const std::exception& ex) {
    std::cerr << "derive: " << ex.what() << "\n";
    return kUsage;
  }
  p.d = d, p.e = e, p.k = k;
  if (d < 1 || e < 1 || k < 1) {
    std::cerr << "derive: d, e, k must be >= 1\n";
    return kUsage;
  }
  const int N = cfg.order;
  QFamily fam;
  QDiffReport rec;
  try {
    fam = q_family(p, N);
    rec = verify_qdiff(fam);
  } catch (const std::exception& ex) {
    std::cerr << "derive: " << family_name(p.family) << "(" << d << "," << e << "," << k
              << ") not supported: " << ex.what() << "\n";
    return kUsage;
  }
  const int K = family_size(p);
  const int terms = cfg.full ? 1 << 20 : 12;
  bool all_ok = rec.ok();
  ordered_json js;
  js["family"] = family_name(p.family);
  js["d"] = d, js["e"] = e, js["k"] = k, js["order"] = N;
  js["members"] = ordered_json::array();
  if (cfg.output != "json")
    std::printf("%s(%d,%d,%d): %d members, order %d\n", family_name(p.family).c_str(), d, e, k, K, N);
  for (int i = 1; i <= K; ++i) {
    Series at1 = at_x1(fam.members.at(i));
    ProductExpr pe = q_product_expr(p, i);
    OrderReport cmp = equal_to_order(at1, product_expand(pe, N));
    bool ok = cmp.ok() && cmp.verified_order >= N;
    all_ok = all_ok && ok;
    if (cfg.output == "json") {
      js["members"].push_back(
          {{"i", i}, {"head", at1.str(terms)}, {"product", pe.str()}, {"product_ok", ok}});
    } else {
      std::printf("  i=%d  %s\n", i, at1.str(terms).c_str());
      std::printf("       = %s  [%s]\n", pe.str().c_str(), ok ? "ok" : "MISMATCH");
    }
  }
  if (cfg.output == "json") {
    js["recursion_ok"] = rec.ok();
    std::cout << js.dump(1) << "\n";
  } else {
    std::printf("recursion: %s\n", rec.ok() ? "ok" : rec.str().c_str());
  }
  return all_ok ? kPass : kFail;
}

int cmd_partitions(const CliConfig& cfg, std::string name, TheoremParams tp, int n_max, bool extended) {
  if (name == "santos") name = "andrews-santos";
  if (tp.d > 1 && name.rfind("dilated-", 0) != 0) name = "dilated-" + name;
  Theorem t;
  try {
    t = parse_theorem(name);
  } catch (const std::exception& ex) {
    std::cerr << "partitions: " << ex.what() << "\n";
    return kUsage;
  }
  bool bress = t == Theorem::Bressoud || t == Theorem::DilatedBressoud;
  if (tp.k < 1 || tp.i < 1 || tp.i > tp.k || n_max < 0 || tp.d < 1) {
    std::cerr << "partitions: need 1 <= i <= k, d >= 1, nmax >= 0\n";
    return kUsage;
  }
  if (bress && tp.i == tp.k && !extended) {
    std::cerr << "partitions: bressoud with i = k needs --extended\n";
    return kUsage;
  }
  PartitionReport rep;
  try {
    rep = verify_partition_theorem(t, tp, n_max);
  } catch (const std::exception& ex) {
    std::cerr << "partitions: " << ex.what() << "\n";
    return kUsage;
  }
  if (cfg.output == "json") {
    ordered_json js;
    js["theorem"] = theorem_name(t);
    js["k"] = tp.k, js["i"] = tp.i, js["d"] = tp.d, js["nmax"] = n_max;
    js["lhs"] = rep.lhs;
    js["rhs"] = rep.rhs;
    js["product_ok"] = rep.product_ok;
    js["ok"] = rep.ok();
    std::cout << js.dump(1) << "\n";
  } else {
    std::printf("%s k=%d i=%d d=%d\n%4s %10s %10s\n", theorem_name(t).c_str(), tp.k, tp.i, tp.d, "n", "lhs", "rhs");
    bool good = true;
    for (int n = 0; n <= n_max; ++n) {
      good = good && rep.lhs[n] == rep.rhs[n];
      std::printf("%4d %10llu %10llu  %s\n", n, (unsigned long long)rep.lhs[n], (unsigned long long)rep.rhs[n],
                  good ? "=" : "DIFFERS");
    }
    if (!rep.product_ok) std::printf("product coefficients disagree with the rhs counts\n");
    std::printf("%s\n", rep.ok() ? "all equal" : rep.str().c_str());
  }
  return rep.ok() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rogers-Ramanujan type identity checker"};
  app.require_subcommand(1);
  CliConfig cfg;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());

  auto common = [&](CLI::App* s) {
    s->add_option("--order", cfg.order, "q-order")->check(CLI::PositiveNumber);
    s->add_option("--output", cfg.output)->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify = app.add_subcommand("verify", "verify catalog records");
  std::vector<std::string> ids;
  bool all = false, timing = false;
  verify->add_option("--id", ids, "record id (repeatable)");
  verify->add_flag("--all", all);
  verify->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--catalog", cfg.catalog_path);
  verify->add_flag("--timing", timing, "per-record times");
  common(verify);

  auto* derive = app.add_subcommand("derive", "derive the family of a pair");
  std::string fam;
  int d = 1, e = 1, k = 1;
  derive->add_option("--family", fam)->required();
  derive->add_option("--d", d)->required();
  derive->add_option("--e", e)->required();
  derive->add_option("--k", k)->required();
  derive->add_flag("--full", cfg.full, "print whole series");
  common(derive);

  auto* parts = app.add_subcommand("partitions", "compare partition counts");
  std::string thm;
  TheoremParams tp;
  int n_max = 30;
  bool extended = false;
  parts->add_option("theorem", thm, "gordon | bressoud | santos | dilated-... | gordon-multiplicity")->required();
  parts->add_option("--k", tp.k)->required();
  parts->add_option("--i", tp.i)->required();
  parts->add_option("--d", tp.d);
  parts->add_option("--nmax", n_max);
  parts->add_flag("--extended", extended, "allow i = k for bressoud");
  parts->add_option("--output", cfg.output)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int rc = app.exit(ex);
    return rc == 0 ? kPass : kUsage;
  }
  if (*verify) return cmd_verify(cfg, ids, all, timing);
  if (*derive) return cmd_derive(cfg, fam, d, e, k);
  return cmd_partitions(cfg, thm, tp, n_max, extended);
}
