// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Criterion 12 execs the installed CLI (path in $FFHYP_CLI)
// twice and byte-compares the JSON reports.

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "ffhyp/modular.hpp"
#include "ffhyp/theorems.hpp"

using namespace ffh;

namespace {

int failures_total = 0;

void criterion(int num, const std::string& name,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << num << ". " << name;
    if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures_total;
}

GaussTable make_table(long q) {
    auto [p, k] = factor_prime_power(q);
    static std::vector<FieldCtx*> keep;  // tables reference their field
    keep.push_back(new FieldCtx(p, k));
    return GaussTable(*keep.back());
}

bool all_ok(const std::vector<TheoremReport>& reps, std::string& detail) {
    for (const auto& r : reps) {
        if (r.skipped) {
            detail = r.theorem_id + " q=" + std::to_string(r.q) + " skipped: " +
                     r.skip_reason;
            return false;
        }
        if (!r.ok()) {
            detail = r.theorem_id + " q=" + std::to_string(r.q) + ": " +
                     std::to_string(r.failures.size()) + " failures, first at (";
            for (size_t i = 0; i < r.failures[0].tuple.size(); ++i)
                detail += (i ? "," : "") + std::to_string(r.failures[0].tuple[i]);
            detail += ") lhs=" + r.failures[0].lhs + " rhs=" + r.failures[0].rhs;
            return false;
        }
        if (r.tuples_tested == 0) {
            detail = r.theorem_id + " q=" + std::to_string(r.q) + ": empty sweep";
            return false;
        }
    }
    return true;
}

std::vector<TheoremReport> run_over(const Verifier& v,
                                    const std::vector<long>& qs,
                                    const SweepPlan& plan) {
    std::vector<TheoremReport> out;
    for (long q : qs) {
        GaussTable t = make_table(q);
        out.push_back(v(t, plan));
    }
    return out;
}

const std::vector<long> kAllQ{3, 4, 5, 7, 8, 9, 11, 13};
const std::vector<long> kOddQ{3, 5, 7, 9, 11, 13};

std::string run_cli(const std::string& cmd, int& rc) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        rc = -1;
        return out;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    rc = pclose(pipe);
    return out;
}

}  // namespace

int main() {
    criterion(1, "four-Gauss-sum product identity, exhaustive odd q <= 13",
              [](std::string& d) {
                  return all_ok(run_over(verify_hp, kOddQ,
                                         SweepPlan::exhaustive()), d);
              });

    criterion(2, "Gauss summation analogue, exhaustive q in {3..13}",
              [](std::string& d) {
                  return all_ok(run_over(verify_gauss_analogue, kAllQ,
                                         SweepPlan::exhaustive()), d);
              });

    criterion(3, "Kummer summation analogue with square/nonsquare branches",
              [](std::string& d) {
                  return all_ok(run_over(verify_kummer, kOddQ,
                                         SweepPlan::exhaustive()), d);
              });

    criterion(4, "Dixon summation analogue, six-branch table, odd q",
              [](std::string& d) {
                  std::vector<long> qs{5, 7, 9, 11, 13};
                  auto reps = run_over(verify_dixon, qs, SweepPlan::exhaustive());
                  if (!all_ok(reps, d)) return false;
                  std::set<std::string> seen;
                  for (const auto& r : reps)
                      for (const auto& [b, c] : r.branches)
                          if (c > 0) seen.insert(b);
                  for (const char* b : {"nonsquare", "all-trivial", "eps-phi-phi",
                                        "eps-bc-phi", "minus-q-plus-3", "sum"})
                      if (!seen.count(b)) {
                          d = std::string("branch never hit: ") + b;
                          return false;
                      }
                  // constant branches at q = 5: frozen polynomial values
                  GaussTable t = make_table(5);
                  const FieldCtx& F = t.field();
                  MultChar e = t.eps(), phi = MultChar::phi(F);
                  CycNum v1 = f_star(t, {e, e, e}, {e, e}, F.one());
                  if (v1 != CycNum::from_int(F.conductor(), -94)) {
                      d = "all-trivial value is " + v1.to_string();
                      return false;
                  }
                  CycNum v2 = f_star(t, {e, phi, phi}, {phi, phi}, F.one());
                  if (v2 != CycNum::from_rational(F.conductor(),
                                                  mpq_class(-14, 5))) {
                      d = "eps-phi-phi value is " + v2.to_string();
                      return false;
                  }
                  return true;
              });

    criterion(5, "well-poised 4F3 reduction incl. delta term and eps/phi case",
              [](std::string& d) {
                  auto reps = run_over(verify_whipple_4f3, {5, 7},
                                       SweepPlan::exhaustive());
                  auto sampled = run_over(verify_whipple_4f3, {9, 11, 13},
                                          SweepPlan::sampled(500, 42));
                  reps.insert(reps.end(), sampled.begin(), sampled.end());
                  auto remark = run_over(verify_remark_4f3, kOddQ,
                                         SweepPlan::sampled(500, 42));
                  reps.insert(reps.end(), remark.begin(), remark.end());
                  return all_ok(reps, d);
              });

    criterion(6, "well-poised 5F4 reduction",
              [](std::string& d) {
                  auto reps = run_over(verify_whipple_5f4, {5, 7},
                                       SweepPlan::exhaustive());
                  auto sampled = run_over(verify_whipple_5f4, {9, 11, 13},
                                          SweepPlan::sampled(500, 42));
                  reps.insert(reps.end(), sampled.begin(), sampled.end());
                  return all_ok(reps, d);
              });

    criterion(7, "index-lowering recursion, n in {2,3,4}, plus Katz form",
              [](std::string& d) {
                  std::vector<TheoremReport> reps;
                  {
                      GaussTable t = make_table(5);
                      reps.push_back(
                          verify_recursion(t, 4, SweepPlan::exhaustive()));
                  }
                  for (long q : {7L, 9L, 11L, 13L}) {
                      GaussTable t = make_table(q);
                      reps.push_back(
                          verify_recursion(t, 4, SweepPlan::sampled(500, 42)));
                  }
                  auto katz = run_over(verify_katz_recursion, kOddQ,
                                       SweepPlan::sampled(500, 42));
                  reps.insert(reps.end(), katz.begin(), katz.end());
                  return all_ok(reps, d);
              });

    criterion(8, "vanishing for non-square leading character, n up to 5",
              [](std::string& d) {
                  std::vector<TheoremReport> reps;
                  for (long q : kOddQ) {
                      GaussTable t = make_table(q);
                      reps.push_back(
                          verify_vanishing(t, 5, SweepPlan::sampled(300, 42)));
                  }
                  return all_ok(reps, d);
              });

    criterion(9, "variant relations: star/Greene, star/Katz, Greene forms",
              [](std::string& d) {
                  std::vector<long> qs{3, 4, 5, 7, 8, 9};
                  std::vector<TheoremReport> reps;
                  for (const Verifier& v :
                       {Verifier(verify_star_greene), Verifier(verify_star_katz),
                        Verifier(verify_greene_gauss)}) {
                      auto part = run_over(v, qs, SweepPlan::sampled(200, 42));
                      reps.insert(reps.end(), part.begin(), part.end());
                  }
                  auto g437 = run_over(verify_greene_437, {3, 5, 7, 9},
                                       SweepPlan::sampled(200, 42));
                  reps.insert(reps.end(), g437.begin(), g437.end());
                  if (!all_ok(reps, d)) return false;
                  // the direct lattice-sum cross-check must have fired
                  for (long q : {3L, 5L}) {
                      GaussTable t = make_table(q);
                      auto r = verify_star_katz(t, SweepPlan::exhaustive());
                      if (!r.ok()) {
                          d = "star-katz q=" + std::to_string(q);
                          return false;
                      }
                      auto it = r.branches.find("vsum");
                      if (it == r.branches.end() || it->second == 0) {
                          d = "lattice cross-check missing at q=" +
                              std::to_string(q);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(10, "eta-product Fourier coefficients match the 4F3 values",
              [](std::string& d) {
                  for (long p : {3L, 5L, 7L, 11L, 13L}) {
                      AoResult res = verify_ao(p);
                      if (!res.rational || !res.match) {
                          d = "p=" + std::to_string(p) + " value=" + res.value +
                              " expected=" + res.expected.get_str();
                          return false;
                      }
                  }
                  return true;
              });

    criterion(11, "orthogonality, conjugation and Jacobi invariants, q <= 13",
              [](std::string& d) {
                  return all_ok(run_over(verify_invariants, kAllQ,
                                         SweepPlan::exhaustive()), d);
              });

    criterion(12, "byte-identical JSON reports across two seeded suite runs",
              [](std::string& d) {
                  const char* cli = std::getenv("FFHYP_CLI");
                  if (!cli) {
                      d = "FFHYP_CLI not set";
                      return false;
                  }
                  std::string cmd = std::string(cli) +
                      " suite --q 3,5,7,11 --plan sample:500:42 --format json";
                  int rc1 = 0, rc2 = 0;
                  std::string a = run_cli(cmd, rc1);
                  std::string b = run_cli(cmd, rc2);
                  if (rc1 != 0 || rc2 != 0) {
                      d = "cli exit codes " + std::to_string(rc1) + ", " +
                          std::to_string(rc2);
                      return false;
                  }
                  if (a.empty() || a != b) {
                      d = "outputs differ or empty";
                      return false;
                  }
                  return true;
              });

    std::cout << (failures_total == 0 ? "ALL CRITERIA PASSED"
                                      : "CRITERIA FAILED: " +
                                            std::to_string(failures_total))
              << std::endl;
    return failures_total == 0 ? 0 : 1;
}
