#ifndef KZCBH_CHECKS_HPP
#define KZCBH_CHECKS_HPP

#include <string>
#include <vector>

namespace kzcbh {

/* Effective configuration of a CLI run; echoed verbatim in every report
 * so that identical config + seed reproduces byte-identical output. */
struct RunConfig {
    std::string command;
    int degree = 4;
    int alphabet = 2;
    double tol = 1e-8;
    double eps = 1e-3; // leading value of the (eps, eps/2) schedule
    int steps = 20000;
    unsigned seed = 1;
    std::string mode = "symbolic";
    std::string out_path; // empty = stdout
    bool pretty = false;

    // degree in 0..8, alphabet >= 1, tol > 0, eps in (0, 1/2), steps >= 1
    void validate() const;
};

struct CheckRecord {
    std::string name;
    bool passed = false;
    double residual = 0.0;  // measured defect (0 for exact equality)
    double threshold = 0.0; // pinned acceptance bound
    std::string detail;
};

struct VerificationReport {
    std::string command;
    RunConfig config;
    std::vector<CheckRecord> checks;

    bool all_passed() const;
};

std::string to_document(const VerificationReport &r, bool pretty = false);

/* Verification suites. Thresholds are pinned inside each suite; config
 * only feeds declared knobs (seed, degree cap, eps, steps). Each returns
 * the records in a fixed order, independent of execution timing. */

// Round trip cbh_map(exp(l)) = l over seeded random rational Lie elements
// (50 cases, alphabets 2 and 3, coefficient numerators/denominators <= 10),
// plus the group-like characterization: exp passes the exact coproduct
// test and a single spurious term of degree >= 2 breaks it.
std::vector<CheckRecord> check_prop1(unsigned seed, int max_degree);

// Projection agreement on every 2-letter word of length 1..5 (62 words):
// PBW-symmetrization projection = multilinear cbh = Eulerian idempotent.
std::vector<CheckRecord> check_pn_cbh();

// Word integrals: quadrature route vs signed nested-sum route on all 7
// admissible words of degree <= 4, and the pinned degree-2 value.
std::vector<CheckRecord> check_mzv_cross();

// Extrapolated ODE associator vs the expansion coefficient-wise at N = 3.
std::vector<CheckRecord> check_lm_vs_ode(double eps, int steps);

// Symbolic log-expansion identity (N <= 5, exact) and its numeric shadow
// against the direct series log at N = 4.
std::vector<CheckRecord> check_corollary();

// Holonomy logarithm: piecewise-constant vs exact CBH, smooth polynomial
// path vs transport log, constant path fixed point.
std::vector<CheckRecord> check_lemma_holonomy(unsigned seed);

// Lyndon dimension counts vs the Witt formula and admissible-sequence counts.
std::vector<CheckRecord> check_witt();

// Named route comparisons behind `holonomy compare --case <name>`:
// constant, piecewise, polynomial (adds the direct simplex-quadrature
// cross-check at N = 3), kz (adds the orientation record).
const std::vector<std::string> &holonomy_case_names();
std::vector<CheckRecord> holonomy_compare(const std::string &case_name, const RunConfig &config);

// Suite registry for the CLI: prop1, pn-cbh, mzv-cross, lm-vs-ode,
// corollary, lemma-holonomy, witt, or "all". Records come out sorted by
// check name so report assembly never depends on completion order.
const std::vector<std::string> &suite_names();
VerificationReport run_suite(const std::string &suite, const RunConfig &config);

} // namespace kzcbh

#endif
