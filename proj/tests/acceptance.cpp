// Acceptance run: one PASS/FAIL line per criterion, thresholds fixed below.
// usage: acceptance <path-to-rrs-binary>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <thread>

#include "beta_displays.hpp"
#include "rrs/builtin_sums.hpp"
#include "rrs/catalog.hpp"
#include "rrs/partitions.hpp"
#include "rrs/qdiff.hpp"

using namespace rrs;

namespace {

constexpr int kClassicalOrder = 300;
constexpr double kClassicalSeconds = 30;
constexpr int kCatalogOrder = 100;
constexpr double kCatalogSeconds = 600;
constexpr int kBetaN = 12;
constexpr int kBetaOrder = 80;
constexpr int kGridMax = 3;
constexpr int kQDiffOrder = 40;
constexpr int kProductOrder = 100;
constexpr int kPartK = 5;
constexpr int kPartD = 3;
constexpr int kPartN = 40;
constexpr double kPartSeconds = 300;
constexpr int kRelationOrder = 100;
constexpr int kTripleCount = 20;
constexpr int kTripleOrder = 200;
constexpr int kDeterminismOrder = 100;

struct Verdict {
  bool pass;
  std::string detail;
};

int jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string tag(const MBPParams& p) {
  return family_name(p.family) + "(" + std::to_string(p.d) + "," + std::to_string(p.e) + "," + std::to_string(p.k) + ")";
}

std::vector<MBPParams> grid() {
  std::vector<MBPParams> g;
  for (Family f : {Family::S, Family::E, Family::JS})
    for (int d = 1; d <= kGridMax; ++d)
      for (int e = 1; e <= kGridMax; ++e)
        for (int k = 1; k <= kGridMax; ++k) g.push_back({f, d, e, k});
  return g;
}

const Catalog& cat() {
  static const Catalog c = Catalog::load(default_catalog_path());
  return c;
}

std::string join(const std::vector<std::string>& v, std::size_t max = 8) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < max; ++i) s += (i ? " " : "") + v[i];
  if (v.size() > max) s += " ...";
  return s;
}

Verdict records(const std::vector<std::string>& ids, int order) {
  CatalogReport rep = run_all(cat(), order, jobs(), ids);
  std::vector<std::string> bad;
  for (const auto& r : rep.results)
    if (r.status != "pass") bad.push_back(r.id + ":" + r.status);
  return {bad.empty(), std::to_string(rep.passed()) + "/" + std::to_string(ids.size()) + " pass" +
                           (bad.empty() ? "" : "; " + join(bad))};
}

// 1
Verdict classical() {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v = records({"euler1", "euler2", "eulerx", "RR1", "RR2", "JS1", "JS2", "GG1", "GG2"}, kClassicalOrder);
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  v.pass = v.pass && s < kClassicalSeconds;
  v.detail += ", " + std::to_string(s).substr(0, 5) + " s";
  return v;
}

// 2: every identity record; skipped identity rows count as not reproduced
Verdict catalog() {
  auto t0 = std::chrono::steady_clock::now();
  CatalogReport rep = run_all(cat(), kCatalogOrder, jobs());
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::vector<std::string> bad, unreproduced;
  int identities = 0;
  for (std::size_t j = 0; j < rep.results.size(); ++j) {
    const Record& rec = cat().records()[j];
    const RecordResult& r = rep.results[j];
    if (r.status == "fail") bad.push_back(r.id);
    if (rec.is_relation()) continue;
    ++identities;
    if (r.status == "skip") unreproduced.push_back(r.id);
  }
  std::string d = std::to_string(identities - (int)unreproduced.size()) + "/" + std::to_string(identities) +
                  " identities, " + std::to_string(rep.failed()) + " fail, " + std::to_string(s).substr(0, 5) + " s";
  if (!bad.empty()) d += "; failing " + join(bad);
  if (!unreproduced.empty()) d += "; not reproduced " + join(unreproduced);
  return {bad.empty() && unreproduced.empty() && s < kCatalogSeconds, d};
}

// 3
Verdict beta_displays() {
  auto all = displays::all();
  std::vector<std::string> bad;
  std::vector<char> ok(all.size(), 1);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t j = 0; j < all.size(); ++j) {
    const auto& d = all[j];
    for (int n = 0; n <= kBetaN && ok[j]; ++n) {
      Series want = d.beta(n, kBetaOrder);
      Series closed = mbp_beta_closed(d.p, n, kBetaOrder);
      Series recon = mbp_beta(d.p, n, kBetaOrder);
      if (!equal_to_order(closed, recon).ok() || !equal_to_order(want, closed).ok()) ok[j] = 0;
    }
  }
  for (std::size_t j = 0; j < all.size(); ++j)
    if (!ok[j]) bad.push_back(all[j].label);
  return {bad.empty(), std::to_string(all.size() - bad.size()) + "/" + std::to_string(all.size()) + " displays" +
                           (bad.empty() ? "" : "; disagree: " + join(bad, 30))};
}

// 4
Verdict qdiff() {
  auto g = grid();
  std::vector<std::string> why(g.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t j = 0; j < g.size(); ++j) {
    const MBPParams& p = g[j];
    try {
      QFamily fam = q_family(p, kQDiffOrder);
      if (!equal_to_order(f_family(p, kQDiffOrder), fam.members.at(family_size(p))).ok()) why[j] = tag(p) + ":F";
      QDiffReport r = verify_qdiff(fam);
      if (!r.failures.empty()) why[j] = tag(p) + ":recursion";
      else if (!r.initial_conditions_ok) why[j] = tag(p) + ":initial";
    } catch (const std::exception& ex) {
      why[j] = tag(p) + ":" + ex.what();
    }
  }
  std::vector<std::string> bad;
  for (const auto& w : why)
    if (!w.empty()) bad.push_back(w);
  // worked example
  MBPParams ex{Family::E, 1, 2, 3};
  QFamily fam = q_family(ex, kQDiffOrder);
  Series m3 = at_x1(fam.members.at(3));
  m3.scale(Int(2));
  bool worked = equal_to_order(eval_builtin("Ftilde1231", kQDiffOrder), fam.members.at(1)).ok() &&
                equal_to_order(eval_builtin("Ftilde1232", kQDiffOrder), fam.members.at(2)).ok() &&
                equal_to_order(eval_builtin("Ftilde1233-x1-doubled", kQDiffOrder), m3).ok() &&
                equal_to_order(eval_builtin("Ftilde1234", kQDiffOrder), fam.members.at(4)).ok();
  if (!worked) bad.push_back("E(1,2,3) worked example");
  return {bad.empty(), std::to_string(g.size() - bad.size() + (worked ? 0 : 1)) + "/" + std::to_string(g.size()) +
                           " tuples" + (bad.empty() ? "" : "; " + join(bad, 30))};
}

// 5
Verdict products() {
  auto g = grid();
  std::vector<std::string> why(g.size());
  std::vector<int> members(g.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t j = 0; j < g.size(); ++j) {
    const MBPParams& p = g[j];
    QFamily fam = q_family(p, kProductOrder);
    for (int i = 1; i <= family_size(p); ++i) {
      ++members[j];
      if (!equal_to_order(at_x1(fam.members.at(i)), q_product_at_one(p, i, kProductOrder)).ok())
        why[j] += (why[j].empty() ? tag(p) + ":" : ",") + std::to_string(i);
    }
  }
  std::vector<std::string> bad;
  int total = 0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    total += members[j];
    if (!why[j].empty()) bad.push_back(why[j]);
  }
  return {bad.empty(), std::to_string(total) + " members over " + std::to_string(g.size()) + " tuples" +
                           (bad.empty() ? "" : "; " + join(bad, 30))};
}

// 6
Verdict partitions() {
  auto t0 = std::chrono::steady_clock::now();
  struct Job {
    Theorem t;
    TheoremParams p;
  };
  std::vector<Job> todo;
  for (int d = 1; d <= kPartD; ++d)
    for (int k = 1; k <= kPartK; ++k)
      for (int i = 1; i <= k; ++i) {
        auto ts = d == 1 ? std::vector<Theorem>{Theorem::Gordon, Theorem::Bressoud, Theorem::AndrewsSantos}
                         : std::vector<Theorem>{Theorem::DilatedGordon, Theorem::DilatedBressoud,
                                                Theorem::DilatedAndrewsSantos};
        for (Theorem t : ts) {
          bool bress = t == Theorem::Bressoud || t == Theorem::DilatedBressoud;
          if (bress && k == 1) continue;  // Bressoud starts at k = 2
          todo.push_back({t, {k, i, d}});
        }
      }
  std::vector<std::string> why(todo.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t j = 0; j < todo.size(); ++j) {
    const Job& jb = todo[j];
    std::string t = theorem_name(jb.t) + "(k=" + std::to_string(jb.p.k) + ",i=" + std::to_string(jb.p.i) +
                    ",d=" + std::to_string(jb.p.d) + ")";
    try {
      if (!verify_partition_theorem(jb.t, jb.p, kPartN).ok()) why[j] = t;
    } catch (const std::exception& ex) {
      why[j] = t + ":" + ex.what();
    }
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::vector<std::string> bad;
  for (const auto& w : why)
    if (!w.empty()) bad.push_back(w);
  return {bad.empty() && s < kPartSeconds, std::to_string(todo.size() - bad.size()) + "/" +
                                               std::to_string(todo.size()) + " cases, " +
                                               std::to_string(s).substr(0, 5) + " s" +
                                               (bad.empty() ? "" : "; " + join(bad))};
}

// 7
Verdict relations() {
  return records({"splitSL53half-N", "splitSL53", "SL53-sum-row53", "splitSL4", "splitSL4-even", "SL4-sum-row4",
                  "split20-even", "split20-odd", "split16-even", "split16-odd"},
                 kRelationOrder);
}

// 8: sum_n (-1)^n q^{m n(n-1)/2 + a n}, dense
std::vector<long long> theta(int a, int m, int N) {
  std::vector<long long> c(N, 0);
  for (long long n = -2 * N; n <= 2 * N; ++n) {
    long long e = m * n * (n - 1) / 2 + a * n;
    if (e >= 0 && e < N) c[e] += (n % 2 ? -1 : 1);
  }
  return c;
}

Verdict triple() {
  std::mt19937 rng(20240501);
  std::vector<std::string> bad;
  for (int it = 0; it < kTripleCount; ++it) {
    int m = std::uniform_int_distribution<int>(2, 40)(rng);
    int a = std::uniform_int_distribution<int>(1, m - 1)(rng);
    Series p = product_expand(triple_product(a, m), kTripleOrder);
    auto want = theta(a, m, kTripleOrder);
    bool ok = p.trunc() >= kTripleOrder;
    for (int e = 0; e < kTripleOrder && ok; ++e) ok = p.coeff(e, 0) == Int(want[e]);
    if (!ok) bad.push_back("(" + std::to_string(a) + "," + std::to_string(m) + ")");
  }
  return {bad.empty(), std::to_string(kTripleCount - bad.size()) + "/" + std::to_string(kTripleCount) + " pairs" +
                           (bad.empty() ? "" : "; " + join(bad))};
}

// 9
std::string capture(const std::string& cmd, int& rc) {
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    rc = -1;
    return "";
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  rc = pclose(p);
  return out;
}

Verdict determinism(const std::string& bin) {
  if (bin.empty()) return {false, "no rrs binary given"};
  std::string base = bin + " verify --all --output json --order " + std::to_string(kDeterminismOrder) + " --jobs ";
  int rc1 = 0, rc2 = 0;
  std::string a = capture(base + "1", rc1);
  std::string b = capture(base + std::to_string(std::max(2, jobs())), rc2);
  bool same = !a.empty() && a == b;
  return {same, std::string(same ? "identical" : "differ") + ", " + std::to_string(a.size()) + " bytes"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string bin = argc > 1 ? argv[1] : "";
  std::vector<std::pair<std::string, std::function<Verdict()>>> crits = {
      {"classical identities to order 300", classical},
      {"catalog to order 100", catalog},
      {"beta displays n<=12, order 80", beta_displays},
      {"q-difference grid d,e,k<=3, order 40", qdiff},
      {"product lemma on the grid, order 100", products},
      {"partition theorems k<=5, d<=3, n<=40", partitions},
      {"index-extraction relations, order 100", relations},
      {"triple product, 20 random (a,m), order 200", triple},
      {"determinism of verify --all across --jobs", [&] { return determinism(bin); }},
  };
  int failed = 0;
  for (std::size_t c = 0; c < crits.size(); ++c) {
    auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = crits[c].second();
    } catch (const std::exception& ex) {
      v = {false, std::string("error: ") + ex.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failed;
    std::printf("[%s] %zu %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", c + 1, crits[c].first.c_str(),
                v.detail.c_str(), s);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", crits.size() - failed, crits.size());
  return failed ? 1 : 0;
}
