// Acceptance gate: one line per criterion, each with its wall-clock budget.
// Residual thresholds are pinned inside the verification suites; this binary
// pins the budgets and the exact knobs (seed 1, degree 6, eps 1e-3, 20000
// steps) and exits nonzero if any line fails.

#include "kzcbh/checks.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace kzcbh;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool report(int number, const std::string& label, const std::vector<CheckRecord>& records,
            double elapsed, double budget)
{
    bool ok = elapsed < budget;
    for (const auto& r : records)
        ok = ok && r.passed;
    std::printf("criterion %d: %s  [%6.2fs / %3.0fs budget]  %s\n", number,
                ok ? "PASS" : "FAIL", elapsed, budget, label.c_str());
    for (const auto& r : records) {
        if (!r.passed)
            std::printf("    failed check %s: residual %.3e vs threshold %.3e (%s)\n",
                        r.name.c_str(), r.residual, r.threshold, r.detail.c_str());
    }
    if (elapsed >= budget)
        std::printf("    over budget: %.2fs >= %.2fs\n", elapsed, budget);
    return ok;
}

std::vector<CheckRecord> named(const std::vector<CheckRecord>& records,
                               std::initializer_list<const char*> names)
{
    std::vector<CheckRecord> out;
    for (const auto& r : records)
        for (const char* n : names)
            if (r.name == n)
                out.push_back(r);
    return out;
}

} // namespace

int main()
{
    bool all_ok = true;

    // Criteria 1 and 3 share one suite run; the combined elapsed time is an
    // upper bound for each, so charging it to both budgets is conservative.
    auto t0 = Clock::now();
    auto prop1 = check_prop1(1, 6);
    double prop1_elapsed = seconds_since(t0);
    all_ok &= report(1, "exp-log roundtrip over 50 seeded rational Lie elements",
                     named(prop1, {"prop1-roundtrip"}), prop1_elapsed, 60.0);

    t0 = Clock::now();
    auto pn = check_pn_cbh();
    all_ok &= report(2, "three projection routes agree on all 62 short binary words",
                     pn, seconds_since(t0), 30.0);

    all_ok &= report(3, "group-like coproduct test passes on exp, fails with a spurious term",
                     named(prop1, {"prop1-grouplike-exp", "prop1-grouplike-spurious"}),
                     prop1_elapsed, 10.0);

    t0 = Clock::now();
    auto mzv = check_mzv_cross();
    all_ok &= report(4, "quadrature vs signed nested-sum word integrals, degree <= 4",
                     mzv, seconds_since(t0), 30.0);

    t0 = Clock::now();
    auto ode = check_lm_vs_ode(1e-3, 20000);
    all_ok &= report(5, "extrapolated transport matches the degree-3 expansion",
                     named(ode, {"lm-vs-ode-coefficients", "lm-vs-ode-degree2"}),
                     seconds_since(t0), 120.0);

    t0 = Clock::now();
    auto corollary = check_corollary();
    all_ok &= report(6, "symbolic log identity exact to degree 5, numeric shadow at degree 4",
                     corollary, seconds_since(t0), 60.0);

    t0 = Clock::now();
    auto lemma = check_lemma_holonomy(1);
    all_ok &= report(7, "holonomy logarithm vs exact CBH / transport / fixed point",
                     lemma, seconds_since(t0), 120.0);

    t0 = Clock::now();
    auto witt = check_witt();
    all_ok &= report(8, "Lyndon dimension counts and admissible-sequence counts",
                     witt, seconds_since(t0), 5.0);

    std::printf("acceptance: %s\n", all_ok ? "PASS" : "FAIL");
    return all_ok ? 0 : 1;
}
