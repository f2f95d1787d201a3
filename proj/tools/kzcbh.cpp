/* Batch front end: expansion, evaluation, and verification pipelines with
 * machine-readable output. Exit codes are a stable contract: 0 pass,
 * 1 verification failure, 2 usage error, 3 numeric/resource failure. */

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kzcbh/cbh.hpp"
#include "kzcbh/checks.hpp"
#include "kzcbh/errors.hpp"
#include "kzcbh/lemurakami.hpp"
#include "kzcbh/mzv.hpp"
#include "kzcbh/serialize.hpp"

namespace {

using namespace kzcbh;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

void emit(const std::string &text, const RunConfig &config)
{
    if (config.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(config.out_path, std::ios::binary);
    if (!out)
        throw std::domain_error("cannot open output path '" + config.out_path + "'");
    out << text;
}

std::string format_double(double v)
{
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v); // shortest round-trip form
    return std::string(buf, res.ptr);
}

std::string render_table(const std::vector<std::vector<std::string>> &rows)
{
    std::vector<std::size_t> width;
    for (const auto &row : rows) {
        if (width.size() < row.size())
            width.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    }
    std::ostringstream os;
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                os << "  ";
            os << row[i];
            if (i + 1 < row.size())
                os << std::string(width[i] - row[i].size(), ' ');
        }
        os << "\n";
    }
    return os.str();
}

std::string config_line(const RunConfig &c)
{
    std::ostringstream os;
    os << "config: degree=" << c.degree << " alphabet=" << c.alphabet
       << " tol=" << format_double(c.tol) << " eps=" << format_double(c.eps)
       << " steps=" << c.steps << " seed=" << c.seed << " mode=" << c.mode << "\n";
    return os.str();
}

template <class C, class Render>
std::string pretty_series_rows(const std::map<Word, C> &terms, const char *header, Render render)
{
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"word", header});
    for (const auto &[w, c] : terms)
        rows.push_back({w.str(), render(c)});
    return render_table(rows);
}

std::string rational_str(const Rational &c)
{
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string render_report_pretty(const VerificationReport &r)
{
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"check", "status", "residual", "threshold"});
    int passed = 0;
    for (const auto &c : r.checks) {
        rows.push_back({c.name, c.passed ? "pass" : "FAIL", format_double(c.residual),
                        format_double(c.threshold)});
        if (c.passed)
            ++passed;
    }
    std::ostringstream os;
    os << r.command << "\n"
       << config_line(r.config) << render_table(rows) << "totals: " << passed << " passed, "
       << r.checks.size() - passed << " failed\n"
       << "status: " << (r.all_passed() ? "pass" : "fail") << "\n";
    return os.str();
}

std::vector<int> parse_int_list(const std::string &text, const char *what)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(item, &pos);
            if (pos != item.size())
                throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception &) {
            throw std::domain_error(std::string(what) + ": cannot parse '" + item +
                                    "' in '" + text + "'");
        }
    }
    if (out.empty())
        throw std::domain_error(std::string(what) + ": empty word");
    return out;
}

struct CommonFlagSet {
    bool degree = false, alphabet = false, tol = false, eps = false, steps = false,
         seed = false, mode = false;
};

void add_common_flags(CLI::App *cmd, RunConfig &config, const CommonFlagSet &want)
{
    if (want.degree)
        cmd->add_option("--degree", config.degree, "truncation degree N (0..8)");
    if (want.alphabet)
        cmd->add_option("--alphabet", config.alphabet, "number of generators");
    if (want.tol)
        cmd->add_option("--tol", config.tol, "numeric tolerance");
    if (want.eps)
        cmd->add_option("--eps", config.eps, "leading endpoint offset of the (eps, eps/2) schedule");
    if (want.steps)
        cmd->add_option("--steps", config.steps, "ODE steps per transport");
    if (want.seed)
        cmd->add_option("--seed", config.seed, "random seed (recorded in reports)");
    if (want.mode)
        cmd->add_option("--mode", config.mode, "symbolic | numeric")
            ->check(CLI::IsMember({"symbolic", "numeric"}));
    cmd->add_option("--out", config.out_path, "write the document here instead of stdout");
    cmd->add_flag("--pretty", config.pretty, "human-readable table rendering");
}

int run_phi(const RunConfig &config, bool log_form)
{
    config.validate();
    std::string doc;
    if (config.mode == "symbolic") {
        if (log_form) {
            SymbolicLieSeries x = log_phi_symbolic(config.degree);
            doc = config.pretty ? pretty_series_rows(x.coords(), "lyndon coordinate",
                                                     [](const SymbolicCoeff &c) { return c.str(); })
                                : to_document(x);
        } else {
            SymbolicSeries x = phi_symbolic(config.degree);
            doc = config.pretty ? pretty_series_rows(x.terms(), "coefficient",
                                                     [](const SymbolicCoeff &c) { return c.str(); })
                                : to_document(x);
        }
    } else {
        MzvEvaluator eval = make_series_evaluator(config.tol);
        if (log_form) {
            NumericLieElement x = log_phi_numeric(config.degree, eval);
            doc = config.pretty ? pretty_series_rows(x.coords(), "lyndon coordinate", format_double)
                                : to_document(x, config.tol);
        } else {
            NumericSeries x = phi_numeric(config.degree, eval);
            doc = config.pretty ? pretty_series_rows(x.terms(), "coefficient", format_double)
                                : to_document(x, config.tol);
        }
    }
    emit(doc, config);
    return kExitPass;
}

int run_cbh(const RunConfig &config, const std::string &word_text, bool degree_given)
{
    std::vector<int> letters = parse_int_list(word_text, "cbh --word");
    RunConfig effective = config;
    if (!degree_given)
        effective.degree = static_cast<int>(letters.size());
    effective.validate();
    Word w = Word::from_ints(letters);
    LieElement l = cbh_word(w, effective.alphabet, effective.degree);
    std::string doc = effective.pretty
                          ? pretty_series_rows(l.coords(), "lyndon coordinate", rational_str)
                          : to_document(l);
    emit(doc, effective);
    return kExitPass;
}

int run_mzv(const RunConfig &config, const std::string &word_text)
{
    config.validate();
    std::vector<int> raw = parse_int_list(word_text, "mzv --word");
    std::vector<std::uint8_t> bits;
    for (int b : raw) {
        if (b != 0 && b != 1)
            throw std::domain_error("mzv --word: letters must be 0 or 1");
        bits.push_back(static_cast<std::uint8_t>(b));
    }
    AdmissibleSeq seq(std::move(bits)); // throws with an explanation if not admissible
    auto [comp, sign] = word_to_composition(seq);

    MzvValue quad = mzv_quadrature(seq, config.tol);
    MzvValue series = omega_series(seq, config.tol);
    double diff = std::abs(quad.value - series.value);
    bool agree = diff <= config.tol;

    if (config.pretty) {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"method", "value", "error bound"});
        rows.push_back({"quadrature", format_double(quad.value), format_double(quad.error_bound)});
        rows.push_back({"series", format_double(series.value), format_double(series.error_bound)});
        std::ostringstream os;
        os << "word " << seq.str() << "  =  " << (sign < 0 ? "-" : "+") << "zeta" << comp.str()
           << "\n"
           << render_table(rows) << "difference: " << format_double(diff)
           << (agree ? "  (within tolerance " : "  (EXCEEDS tolerance ") << format_double(config.tol)
           << ")\n";
        emit(os.str(), config);
    } else {
        nlohmann::json doc;
        doc["kind"] = "mzv-comparison";
        doc["word"] = seq.str();
        doc["composition"] = comp.str();
        doc["sign"] = sign;
        doc["quadrature"] = {{"value", quad.value}, {"error_bound", quad.error_bound}};
        doc["series"] = {{"value", series.value}, {"error_bound", series.error_bound}};
        doc["difference"] = diff;
        doc["tolerance"] = config.tol;
        doc["status"] = agree ? "pass" : "fail";
        emit(doc.dump() + "\n", config);
    }
    return agree ? kExitPass : kExitVerificationFailure;
}

/* Assembles the report even when a suite dies mid-run (partial reports are
 * always written); a numeric failure downgrades the exit code to 3. */
int run_verify_like(const std::string &command, const std::vector<std::string> &parts,
                    const RunConfig &config, bool holonomy_cases)
{
    config.validate();
    VerificationReport report;
    report.command = command;
    report.config = config;
    int exit_code = kExitPass;
    for (const auto &part : parts) {
        try {
            std::vector<CheckRecord> recs =
                holonomy_cases ? holonomy_compare(part, config)
                               : run_suite(part, config).checks;
            report.checks.insert(report.checks.end(), recs.begin(), recs.end());
        } catch (const ResourceError &e) {
            CheckRecord rec;
            rec.name = part + "-resource-error";
            rec.passed = false;
            rec.detail = e.what();
            report.checks.push_back(rec);
            exit_code = kExitNumeric;
        }
    }
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckRecord &a, const CheckRecord &b) { return a.name < b.name; });
    emit(config.pretty ? render_report_pretty(report) : to_document(report), config);
    if (exit_code == kExitPass && !report.all_passed())
        exit_code = kExitVerificationFailure;
    return exit_code;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"truncated free-algebra pipelines: associator expansion, CBH logarithms, "
                 "word integrals, and holonomy verification"};
    app.require_subcommand(1);

    RunConfig config;
    std::string word_text;
    std::string suite = "all";
    std::string case_name;

    CLI::App *phi = app.add_subcommand("phi", "associator expansion commands");
    phi->require_subcommand(1);
    CLI::App *phi_expand = phi->add_subcommand("expand", "emit the degree-N expansion");
    add_common_flags(phi_expand, config, {.degree = true, .tol = true, .mode = true});
    CLI::App *phi_log = phi->add_subcommand("log", "emit its logarithm in Lyndon coordinates");
    add_common_flags(phi_log, config, {.degree = true, .tol = true, .mode = true});

    CLI::App *cbh = app.add_subcommand("cbh", "multilinear CBH image of a word");
    cbh->add_option("--word", word_text, "comma-separated letters, e.g. 0,1,0")->required();
    CLI::Option *cbh_degree = cbh->add_option("--degree", config.degree,
                                              "truncation degree (default: word length)");
    add_common_flags(cbh, config, {.alphabet = true});

    CLI::App *mzv = app.add_subcommand("mzv", "evaluate a word integral by both methods");
    mzv->add_option("--word", word_text, "comma-separated bits, e.g. 1,0")->required();
    add_common_flags(mzv, config, {.tol = true});

    CLI::App *holonomy = app.add_subcommand("holonomy", "path holonomy commands");
    holonomy->require_subcommand(1);
    CLI::App *compare = holonomy->add_subcommand("compare", "compare log-holonomy routes");
    compare->add_option("--case", case_name, "constant | piecewise | polynomial | kz")
        ->required()
        ->check(CLI::IsMember(holonomy_case_names()));
    add_common_flags(compare, config,
                     {.degree = true, .eps = true, .steps = true, .seed = true});

    CLI::App *verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", suite, "prop1 | pn-cbh | mzv-cross | lm-vs-ode | corollary | "
                                       "lemma-holonomy | witt | all");
    add_common_flags(verify, config,
                     {.degree = true, .tol = true, .eps = true, .steps = true, .seed = true});

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kExitPass : kExitUsage;
    }

    // verify alone defaults to the full random-degree range of the suites
    if (verify->parsed() && verify->count("--degree") == 0)
        config.degree = 6;

    try {
        if (phi_expand->parsed() || phi_log->parsed()) {
            config.command = phi_expand->parsed() ? "phi expand" : "phi log";
            return run_phi(config, phi_log->parsed());
        }
        if (cbh->parsed()) {
            config.command = "cbh";
            return run_cbh(config, word_text, cbh_degree->count() > 0);
        }
        if (mzv->parsed()) {
            config.command = "mzv";
            return run_mzv(config, word_text);
        }
        if (compare->parsed()) {
            config.command = "holonomy compare --case " + case_name;
            return run_verify_like(config.command, {case_name}, config, true);
        }
        if (verify->parsed()) {
            config.command = "verify " + suite;
            if (suite == "all") {
                std::vector<std::string> parts = suite_names();
                return run_verify_like(config.command, parts, config, false);
            }
            return run_verify_like(config.command, {suite}, config, false);
        }
        std::cerr << "error: no command selected\n";
        return kExitUsage;
    } catch (const ResourceError &e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    }
}
