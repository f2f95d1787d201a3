#include "kzcbh/checks.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "kzcbh/cbh.hpp"
#include "kzcbh/holonomy.hpp"
#include "kzcbh/lemurakami.hpp"
#include "kzcbh/mzv.hpp"
#include "kzcbh/projection.hpp"

namespace kzcbh {

void RunConfig::validate() const
{
    if (degree < 0 || degree > 8)
        throw std::domain_error("config: degree must be in 0..8");
    if (alphabet < 1 || alphabet > 6)
        throw std::domain_error("config: alphabet size must be in 1..6");
    if (!(tol > 0))
        throw std::domain_error("config: tolerance must be positive");
    if (!(eps > 0 && eps < 0.5))
        throw std::domain_error("config: eps must lie in (0, 1/2)");
    if (steps < 1)
        throw std::domain_error("config: steps must be >= 1");
    if (mode != "symbolic" && mode != "numeric")
        throw std::domain_error("config: mode must be 'symbolic' or 'numeric'");
}

bool VerificationReport::all_passed() const
{
    for (const auto &c : checks)
        if (!c.passed)
            return false;
    return true;
}

std::string to_document(const VerificationReport &r, bool pretty)
{
    nlohmann::json doc;
    doc["kind"] = "verification-report";
    doc["command"] = r.command;
    nlohmann::json cfg;
    cfg["degree"] = r.config.degree;
    cfg["alphabet"] = r.config.alphabet;
    cfg["tol"] = r.config.tol;
    cfg["eps"] = r.config.eps;
    cfg["steps"] = r.config.steps;
    cfg["seed"] = r.config.seed;
    cfg["mode"] = r.config.mode;
    doc["config"] = std::move(cfg);
    nlohmann::json arr = nlohmann::json::array();
    int passed = 0;
    for (const auto &c : r.checks) {
        nlohmann::json rec;
        rec["name"] = c.name;
        rec["status"] = c.passed ? "pass" : "fail";
        rec["residual"] = c.residual;
        rec["threshold"] = c.threshold;
        rec["detail"] = c.detail;
        arr.push_back(std::move(rec));
        if (c.passed)
            ++passed;
    }
    doc["checks"] = std::move(arr);
    doc["totals"] = {{"passed", passed},
                     {"failed", static_cast<int>(r.checks.size()) - passed}};
    doc["status"] = r.all_passed() ? "pass" : "fail";
    return doc.dump(pretty ? 2 : -1) + "\n";
}

namespace {

/* mt19937's output sequence is pinned by the standard, and all draws go
 * through plain modulo, so reports are byte-identical across platforms
 * (std::uniform_int_distribution would not be). */
struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}
    std::uint32_t below(std::uint32_t n) { return gen() % n; }
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint32_t>(hi - lo + 1))); }
};

Rational random_small_rational(Rng &rng)
{
    int num = rng.range(1, 10) * (rng.below(2) ? 1 : -1);
    int den = rng.range(1, 10);
    return make_rational(Integer(num), Integer(den));
}

LieElement random_lie_element(Rng &rng, int alphabet, int degree)
{
    LieElement l(alphabet, degree);
    for (int d = 1; d <= degree; ++d)
        for (const Word &w : lyndon_words(alphabet, d))
            if (rng.below(2) == 0)
                l.set_coordinate(w, random_small_rational(rng));
    return l;
}

Word random_word(Rng &rng, int alphabet, int length)
{
    std::vector<int> letters;
    for (int i = 0; i < length; ++i)
        letters.push_back(static_cast<int>(rng.below(static_cast<std::uint32_t>(alphabet))));
    return Word::from_ints(letters);
}

CheckRecord exact_record(std::string name, int mismatches, std::string detail)
{
    CheckRecord r;
    r.name = std::move(name);
    r.passed = mismatches == 0;
    r.residual = static_cast<double>(mismatches);
    r.threshold = 0.0;
    r.detail = std::move(detail);
    return r;
}

CheckRecord bounded_record(std::string name, double residual, double threshold,
                           std::string detail)
{
    CheckRecord r;
    r.name = std::move(name);
    r.passed = residual <= threshold;
    r.residual = residual;
    r.threshold = threshold;
    r.detail = std::move(detail);
    return r;
}

} // namespace

std::vector<CheckRecord> check_prop1(unsigned seed, int max_degree)
{
    Rng rng(seed);
    int roundtrip_bad = 0, grouplike_bad = 0, spurious_bad = 0;
    const int cases = 50;
    for (int i = 0; i < cases; ++i) {
        const int alphabet = (i % 2 == 0) ? 2 : 3;
        // Alphabet 3 capped one degree lower: the degree-6 support is ~9x
        // larger and would dominate the runtime budget without adding cover.
        const int cap = std::min(max_degree, alphabet == 2 ? 6 : 5);
        const int degree = rng.range(2, std::max(2, cap));
        LieElement l = random_lie_element(rng, alphabet, degree);
        Series x = exp(l.expand());
        if (!(cbh_map(x) == l))
            ++roundtrip_bad;
        if (!x.is_grouplike())
            ++grouplike_bad;
        Series spoiled = x;
        Word spur = random_word(rng, alphabet, rng.range(2, degree));
        spoiled.add_coefficient(spur, make_rational(Integer(1), Integer(7)));
        if (spoiled.is_grouplike())
            ++spurious_bad;
    }
    return {
        exact_record("prop1-roundtrip", roundtrip_bad,
                     "cbh of exp over 50 seeded rational Lie elements, alphabets 2 and 3"),
        exact_record("prop1-grouplike-exp", grouplike_bad,
                     "every exponential passes the exact coproduct test"),
        exact_record("prop1-grouplike-spurious", spurious_bad,
                     "one extra degree->=2 word term always breaks group-likeness"),
    };
}

std::vector<CheckRecord> check_pn_cbh()
{
    int proj_bad = 0, euler_bad = 0, words = 0;
    for (int len = 1; len <= 5; ++len) {
        std::vector<int> letters(static_cast<std::size_t>(len), 0);
        while (true) {
            Word w = Word::from_ints(letters);
            Series x = Series::zero(2, len);
            x.set_coefficient(w, Rational(1));
            LieElement via_cbh = cbh_word(w, 2, len);
            if (!(lie_project_p(x) == via_cbh))
                ++proj_bad;
            if (!(eulerian_projection(x) == via_cbh.expand()))
                ++euler_bad;
            ++words;
            int pos = len - 1;
            while (pos >= 0 && ++letters[static_cast<std::size_t>(pos)] == 2) {
                letters[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                break;
        }
    }
    std::ostringstream os;
    os << words << " two-letter words of length 1..5";
    return {
        exact_record("pn-cbh-projection", proj_bad, "PBW projection equals multilinear cbh; " + os.str()),
        exact_record("pn-cbh-eulerian", euler_bad, "Eulerian idempotent agrees; " + os.str()),
    };
}

std::vector<CheckRecord> check_mzv_cross()
{
    double worst = 0.0;
    int count = 0;
    for (int n = 2; n <= 4; ++n) {
        for (const auto &seq : admissible_seqs(n)) {
            MzvValue q = mzv_quadrature(seq, 1e-8);
            MzvValue s = omega_series(seq, 1e-10);
            worst = std::max(worst, std::abs(q.value - s.value));
            ++count;
        }
    }
    const double z2 = 1.6449340668482264365; // pi^2/6
    MzvValue q10 = mzv_quadrature(AdmissibleSeq{1, 0}, 1e-10);
    MzvValue s10 = omega_series(AdmissibleSeq{1, 0}, 1e-12);
    double deg2 = std::max(std::abs(q10.value + z2), std::abs(s10.value + z2));
    std::ostringstream os;
    os << count << " admissible words of degree <= 4, independent routes";
    return {
        bounded_record("mzv-cross-routes", worst, 1e-8, os.str()),
        bounded_record("mzv-degree2-value", deg2, 1e-10,
                       "both routes for the degree-2 word against -pi^2/6"),
    };
}

std::vector<CheckRecord> check_lm_vs_ode(double eps, int steps)
{
    NumericSeries ode = kz_associator_extrapolated(3, eps, steps);
    NumericSeries expansion = phi_numeric(3, make_series_evaluator(1e-12));
    NumericSeries diff = ode;
    diff -= expansion;
    const double z2 = 1.6449340668482264365;
    double c01 = ode.coefficient(Word::from_ints({0, 1}));

    /* The reversed ratio of the two renormalized solutions is z-dependent
     * at finite distance from the endpoints; evaluated near 1 it reads
     * eps^{A_1} eps^{-A_0} T^{-1}, with the inverse transport integrated
     * backwards. Its residual is recorded so the report shows which
     * orientation actually matches the expansion. */
    ConnectionPath kz = kz_connection();
    const double le = std::log(eps);
    NumericSeries rev = exp(NumericSeries::generator(2, 3, 1) * le) *
                        exp(NumericSeries::generator(2, 3, 0) * -le) *
                        ode_transport(kz, 1.0 - eps, eps, steps, 3);
    NumericSeries rev_diff = rev;
    rev_diff -= expansion;

    std::ostringstream os;
    os << "extrapolated transport (eps, eps/2) from eps=" << eps << ", " << steps
       << " steps, vs the weight-expansion at N=3";
    std::ostringstream orient;
    orient << "adopted ratio residual " << diff.max_abs()
           << "; reversed ratio residual " << rev_diff.max_abs()
           << " (recorded, not adopted)";
    return {
        bounded_record("lm-vs-ode-coefficients", diff.max_abs(), 1e-4, os.str()),
        bounded_record("lm-vs-ode-degree2", std::abs(c01 + z2), 1e-4,
                       "transport coefficient of the degree-2 word against -pi^2/6"),
        bounded_record("lm-vs-ode-orientation", diff.max_abs(),
                       std::min(1e-4, rev_diff.max_abs()), orient.str()),
    };
}

std::vector<CheckRecord> check_corollary()
{
    int symbolic_bad = 0;
    for (int n = 2; n <= 5; ++n) {
        SymbolicLieSeries direct = log_phi_symbolic(n);
        SymbolicLieSeries via_map = cbh_map(phi_symbolic(n));
        if (!(direct == via_map))
            ++symbolic_bad;
    }
    MzvEvaluator eval = make_series_evaluator(1e-12);
    NumericSeries phi4 = phi_numeric(4, eval);
    NumericSeries log_direct = log(phi4);
    NumericLieElement log_sym = evaluate(log_phi_symbolic(4), eval);
    NumericSeries diff = log_direct;
    diff -= log_sym.expand();
    return {
        exact_record("corollary-symbolic", symbolic_bad,
                     "log expansion equals cbh of the expansion, exactly in symbols, N=2..5"),
        bounded_record("corollary-numeric", diff.max_abs(), 1e-6,
                       "series log of the numeric expansion vs evaluated symbolic log, N=4"),
    };
}

std::vector<CheckRecord> check_lemma_holonomy(unsigned seed)
{
    SimplexIntegrator integ{0.0, 1.0, 8, 12};

    // piecewise-constant path against the exact truncated CBH product
    auto pw = piecewise_constant_path({0.0, 0.5, 1.0}, {{1.0, 0.0}, {0.0, 1.0}});
    NumericLieElement lh = log_holonomy_cbh(pw, 0.0, 1.0, integ, 4, 1e-11);
    NumericSeries x0 = NumericSeries::generator(2, 4, 0);
    NumericSeries x1 = NumericSeries::generator(2, 4, 1);
    x0 *= 0.5;
    x1 *= 0.5;
    NumericLieElement exact = lie_extract(log(exp(x1) * exp(x0)), 1e-13).element;
    NumericLieElement d1 = lh;
    d1 -= exact;

    // seeded smooth quadratic path against the transport logarithm
    Rng rng(seed);
    auto rand_coeff = [&rng]() { return (static_cast<int>(rng.below(2001)) - 1000) / 1000.0; };
    std::vector<std::vector<double>> polys(2);
    for (auto &p : polys)
        p = {rand_coeff(), rand_coeff(), rand_coeff()};
    ConnectionPath smooth = polynomial_path(polys);
    NumericLieElement l_cbh = log_holonomy_cbh(smooth, 0.0, 1.0, integ, 4, 1e-11);
    NumericSeries transport = ode_transport(smooth, 0.0, 1.0, 2000, 4);
    NumericLieElement l_ode = lie_extract(log(transport), 1e-9).element;
    NumericLieElement d2 = l_cbh;
    d2 -= l_ode;

    // constant path: the log holonomy is the generator itself
    NumericLieElement lc = log_holonomy_cbh(constant_path({1.0, 0.0}), 0.0, 1.0, integ, 4, 0.0);
    double const_resid = 0.0;
    for (const auto &[w, c] : lc.coords()) {
        double expect = (w == Word::single(0)) ? 1.0 : 0.0;
        const_resid = std::max(const_resid, std::abs(c - expect));
    }
    const_resid = std::max(const_resid, std::abs(lc.coordinate(Word::single(0)) - 1.0));

    return {
        bounded_record("lemma-piecewise", d1.max_abs(), 1e-8,
                       "two-piece constant path vs exact log of the exponential product, N=4"),
        bounded_record("lemma-smooth-vs-ode", d2.max_abs(), 1e-6,
                       "seeded quadratic path: CBH integrals vs transport log, N=4"),
        bounded_record("lemma-constant-path", const_resid, 1e-10,
                       "constant path returns its generator"),
    };
}

std::vector<CheckRecord> check_witt()
{
    const int table2[8] = {2, 1, 2, 3, 6, 9, 18, 30};
    const int table3[6] = {3, 3, 8, 18, 48, 116};
    int bad2 = 0, bad3 = 0, bad_adm = 0;
    for (int d = 1; d <= 8; ++d) {
        if (witt_dimension(2, d) != table2[d - 1])
            ++bad2;
        if (static_cast<int>(lyndon_words(2, d).size()) != table2[d - 1])
            ++bad2;
    }
    for (int d = 1; d <= 6; ++d) {
        if (witt_dimension(3, d) != table3[d - 1])
            ++bad3;
        if (static_cast<int>(lyndon_words(3, d).size()) != table3[d - 1])
            ++bad3;
    }
    for (int n = 2; n <= 8; ++n)
        if (admissible_seqs(n).size() != (std::size_t{1} << (n - 2)))
            ++bad_adm;
    return {
        exact_record("witt-two-letters", bad2, "Lyndon counts at degrees 1..8 vs the Witt formula"),
        exact_record("witt-three-letters", bad3, "Lyndon counts at degrees 1..6 vs the Witt formula"),
        exact_record("witt-admissible-counts", bad_adm, "2^(n-2) admissible sequences, n=2..8"),
    };
}

const std::vector<std::string> &holonomy_case_names()
{
    static const std::vector<std::string> names = {"constant", "piecewise", "polynomial", "kz"};
    return names;
}

std::vector<CheckRecord> holonomy_compare(const std::string &case_name, const RunConfig &config)
{
    config.validate();
    if (case_name == "kz")
        return check_lm_vs_ode(config.eps, config.steps);

    std::vector<CheckRecord> lemma = check_lemma_holonomy(config.seed);
    if (case_name == "piecewise")
        return {lemma[0]};
    if (case_name == "constant")
        return {lemma[2]};
    if (case_name != "polynomial")
        throw std::domain_error("unknown holonomy case '" + case_name + "'");

    // resummed (cbh of Chen) vs direct simplex quadrature of the pointwise
    // CBH integrand; the direct form is affordable up to N = 3
    Rng rng(config.seed);
    auto rand_coeff = [&rng]() { return (static_cast<int>(rng.below(2001)) - 1000) / 1000.0; };
    std::vector<std::vector<double>> polys(2);
    for (auto &p : polys)
        p = {rand_coeff(), rand_coeff(), rand_coeff()};
    ConnectionPath smooth = polynomial_path(polys);
    SimplexIntegrator integ{0.0, 1.0, 8, 12};
    NumericLieElement resummed = log_holonomy_cbh(smooth, 0.0, 1.0, integ, 3, 1e-11);
    NumericLieElement direct = log_holonomy_simplex(smooth, 0.0, 1.0, 3, 12, 4, 1e-11);
    NumericLieElement d = resummed;
    d -= direct;
    std::vector<CheckRecord> out = {lemma[1]};
    out.push_back(bounded_record("polynomial-simplex-crosscheck", d.max_abs(), 1e-8,
                                 "resummed route vs direct simplex quadrature of the "
                                 "pointwise CBH integrand, N=3"));
    return out;
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names = {
        "prop1", "pn-cbh", "mzv-cross", "lm-vs-ode", "corollary", "lemma-holonomy", "witt",
    };
    return names;
}

VerificationReport run_suite(const std::string &suite, const RunConfig &config)
{
    config.validate();
    VerificationReport report;
    report.command = "verify " + suite;
    report.config = config;

    auto dispatch = [&](const std::string &name) {
        std::vector<CheckRecord> recs;
        if (name == "prop1")
            recs = check_prop1(config.seed, std::min(config.degree > 0 ? config.degree : 6, 6));
        else if (name == "pn-cbh")
            recs = check_pn_cbh();
        else if (name == "mzv-cross")
            recs = check_mzv_cross();
        else if (name == "lm-vs-ode")
            recs = check_lm_vs_ode(config.eps, config.steps);
        else if (name == "corollary")
            recs = check_corollary();
        else if (name == "lemma-holonomy")
            recs = check_lemma_holonomy(config.seed);
        else if (name == "witt")
            recs = check_witt();
        else
            throw std::domain_error("unknown verification suite '" + name + "'");
        report.checks.insert(report.checks.end(), recs.begin(), recs.end());
    };

    if (suite == "all") {
        for (const auto &name : suite_names())
            dispatch(name);
    } else {
        dispatch(suite);
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckRecord &a, const CheckRecord &b) { return a.name < b.name; });
    return report;
}

} // namespace kzcbh
