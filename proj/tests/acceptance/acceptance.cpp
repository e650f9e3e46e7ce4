// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "../support/properties.hpp"
#include "constaspec/codes.hpp"
#include "constaspec/consta.hpp"
#include "constaspec/grid.hpp"
#include "constaspec/numtheory.hpp"
#include "constaspec/tables.hpp"

using namespace constaspec;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

struct Row {
  std::uint64_t r;
  std::uint64_t total;
  std::uint64_t symmetric;
};

/// Recomputes a preset and compares against the expected (total, symmetric) per r.
Verdict table_check(const char* preset, const std::vector<Row>& expected) {
  Verdict v;
  const auto rows = reproduce_table(table_preset(preset));
  std::ostringstream bad;
  std::size_t matched = 0;
  for (const auto& want : expected) {
    bool found = false;
    for (const auto& row : rows) {
      if (row.printed.r != want.r) continue;
      found = true;
      if (row.report.total_factors == want.total && row.report.symmetric_factors == want.symmetric) {
        ++matched;
      } else {
        bad << " r=" << want.r << ": got (" << row.report.total_factors << ","
            << row.report.symmetric_factors << ") expected (" << want.total << ","
            << want.symmetric << ");";
      }
    }
    if (!found) bad << " r=" << want.r << " missing;";
  }
  v.pass = matched == expected.size();
  v.detail = std::to_string(matched) + "/" + std::to_string(expected.size()) + " rows match" +
             (v.pass ? "" : ";" + bad.str());
  return v;
}

Verdict criterion1() {
  return table_check("table1", {{1, 7, 1}, {2, 7, 1}, {3, 1, 0}, {6, 1, 0}});
}

Verdict criterion2() {
  Verdict v = table_check("table2", {{1, 27, 3}, {2, 18, 0}, {3, 9, 0}, {6, 6, 0}, {9, 3, 0}, {18, 2, 0}});
  const auto params = euclidean_params(19, 36, LambdaOrder{1});
  const auto factors = oracle::factor_list(params, 0);
  std::uint64_t sr = 0;
  for (const auto& f : factors) sr += oracle::reciprocal_by_reversal(f) == f;
  v.detail += "; oracle factorization of x^36 - 1: " + std::to_string(factors.size()) +
              " factors, " + std::to_string(sr) + " SR (printed N2 = 4)";
  v.pass = v.pass && factors.size() == 27 && sr == 3;
  return v;
}

Verdict criterion3() {
  return table_check("table3", {{1, 7, 1}, {3, 1, 0}, {5, 7, 0}, {15, 1, 0}});
}

Verdict criterion4() {
  Verdict v = table_check("table4", {{1, 20, 2}, {2, 20, 0}, {3, 4, 0}, {4, 10, 0},
                                     {6, 4, 0}, {8, 6, 0}, {12, 2, 0}, {24, 1, 0}});
  if (!v.pass) {
    // Independent confirmation that the recomputed values are the field's actual counts.
    std::ostringstream s;
    s << " oracle factorization over GF(625):";
    for (std::uint64_t r : {4, 8, 12, 24}) {
      s << " r=" << r << " -> " << oracle::factor_list(hermitian_params(25, 36, LambdaOrder{r}), 0).size();
    }
    s << " factors; printed M1 is not reproducible";
    v.detail += s.str();
  }
  return v;
}

Verdict grid_check(const std::vector<GridInstance>& grid) {
  Verdict v;
  const auto outcomes = run_grid(grid, 0, 1);
  std::size_t bad = 0;
  std::string first;
  for (const auto& o : outcomes) {
    if (o.agree && !o.error) continue;
    if (bad++ == 0) first = describe(o.instance) + (o.error ? " " + *o.error : "");
  }
  v.pass = bad == 0 && !outcomes.empty();
  v.detail = std::to_string(outcomes.size()) + " instances, " + std::to_string(bad) +
             " mismatches" + (bad ? " (first: " + first + ")" : "");
  return v;
}

Verdict criterion5() { return grid_check(euclidean_grid(32, 40)); }
Verdict criterion6() { return grid_check(hermitian_grid(8, 24)); }

Verdict criterion7() {
  Verdict v;
  std::size_t instances = 0;
  std::size_t bad = 0;
  std::string first;
  auto run = [&](const std::vector<GridInstance>& grid) {
    for (const auto& inst : grid) {
      const auto params = instance_params(inst);
      const auto formula = count_factors(params);
      if (formula.total_factors > 12) continue;
      ++instances;
      const auto factors = oracle::factor_list(params, 0);
      const auto exhaustive = oracle::count_lcd_exhaustive(params, params.mode, factors);
      const auto counted = count_lcd(params, params.mode);
      const auto listed = enumerate_lcd(params, params.mode, 0).size();
      if (counted.count != exhaustive || listed != exhaustive) {
        if (bad++ == 0) first = describe(inst);
      }
    }
  };
  run(euclidean_grid(32, 40));
  run(hermitian_grid(8, 24));
  const auto gf2 = count_lcd(euclidean_params(2, 3, LambdaOrder{1}), Mode::euclidean);
  v.pass = bad == 0 && gf2.count == 4;
  v.detail = std::to_string(instances) + " instances with N1 <= 12, " + std::to_string(bad) +
             " mismatches" + (bad ? " (first: " + first + ")" : "") +
             "; GF(2), n=3 count = " + gf2.count.str();
  return v;
}

struct SelfDualTally {
  std::size_t instances = 0;
  std::size_t bad = 0;
  std::size_t existing = 0;
  std::string first;
};

/// Compares self_dual_existence (predicate, structural, count) with exhaustive search.
void self_dual_check(const ConstaParams& params, bool need_predicate, SelfDualTally& t) {
  const Mode kind = params.mode;
  const auto sd = self_dual_existence(params, kind);
  const auto factors = oracle::factor_list(params, 0);
  const auto found = oracle::count_self_dual_exhaustive(params, kind, factors);
  bool ok = sd.consistent && sd.count == found && sd.exists == (found > 0);
  if (need_predicate) ok = ok && sd.theorem_predicate.has_value() && *sd.theorem_predicate == (found > 0);
  if (factors.size() <= 14) ok = ok && oracle::count_self_dual_brute(params, kind, factors) == found;
  ++t.instances;
  t.existing += found > 0;
  if (!ok && t.bad++ == 0) t.first = props::where(params);
}

Verdict criterion8() {
  SelfDualTally neg, cyc, herm, rest;
  for (const std::uint64_t q : {3, 5, 7, 9, 11, 13}) {
    for (std::uint64_t n = 2; n <= 20; n += 2) {
      if (gcd(n, q) != 1) continue;
      self_dual_check(euclidean_params(q, n, LambdaOrder{2}), true, neg);
    }
  }
  for (const auto& inst : euclidean_grid(32, 40)) {
    const auto params = instance_params(inst);
    if (inst.r == 1) {
      self_dual_check(params, true, cyc);
    } else if (inst.r != 2 || inst.q % 2 == 0 || inst.q > 13 || inst.n % 2 == 1) {
      self_dual_check(params, false, rest);
    }
  }
  for (const auto& inst : hermitian_grid(8, 24)) {
    const auto params = instance_params(inst);
    const bool in_scope = (inst.q + 1) % inst.r == 0 && inst.n % 2 == 0;
    self_dual_check(params, in_scope, in_scope ? herm : rest);
  }
  Verdict v;
  v.pass = neg.bad == 0 && cyc.bad == 0 && herm.bad == 0 && rest.bad == 0 && cyc.existing == 0;
  std::ostringstream s;
  s << "negacyclic " << neg.instances << " (" << neg.existing << " with self-dual codes, "
    << neg.bad << " disagree); cyclic " << cyc.instances << " (" << cyc.existing
    << " with self-dual codes); hermitian r | q0+1, n even " << herm.instances << " ("
    << herm.existing << " with self-dual codes, " << herm.bad << " disagree); structural-only "
    << rest.instances << " (" << rest.bad << " disagree)";
  for (const auto* t : {&neg, &cyc, &herm, &rest}) {
    if (t->bad) s << "; first failure " << t->first;
  }
  v.detail = s.str();
  return v;
}

Verdict criterion9() {
  Verdict v;
  std::ostringstream s;
  int min_cases = 1 << 30;
  for (const auto& r : props::all(20240601)) {
    min_cases = std::min(min_cases, r.cases);
    if (!r.passed()) {
      v.pass = false;
      s << " FAILED " << r.name << " (" << r.failures << "/" << r.cases << ", first " << r.first_failure << ");";
    }
  }
  v.detail = "11 properties, at least " + std::to_string(min_cases) + " cases each" + s.str();
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;  // 0: no runtime bound
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Table 1 (q=7, n=27)", 1.0, criterion1},
      {2, "Table 2 (q=19, n=36) with N2=3 for r=1", 1.0, criterion2},
      {3, "Table 3 (q0=16, GF(256), n=27)", 5.0, criterion3},
      {4, "Table 4 (q0=25, GF(625), n=36)", 10.0, criterion4},
      {5, "euclidean oracle grid q<=32, n<=40", 300.0, criterion5},
      {6, "hermitian oracle grid q0<=8, n<=24", 300.0, criterion6},
      {7, "LCD counts vs exhaustive is_lcd", 0.0, criterion7},
      {8, "self-dual existence vs exhaustive search", 0.0, criterion8},
      {9, "property suites", 0.0, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      v.pass = false;
      v.detail += "; too slow";
    }
    failures += !v.pass;
    std::printf("%s [%d] %s: %s (%.3f s%s)\n", v.pass ? "PASS" : "FAIL", c.id, c.title,
                v.detail.c_str(), secs,
                c.limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(c.limit_s)) + " s").c_str() : "");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
