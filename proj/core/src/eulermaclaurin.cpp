#include "eulermaclaurin.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kzcbh::em {

namespace {

constexpr double kPruneEps = 0.0; // keep everything; terms are few

// B_{2i}/(2i)! for i = 1..4. The remainder constant with J correction
// terms is |B_{2J}|/(2J)| = 2 zeta(2J)/(2 pi)^{2J}.
constexpr double kBernOverFact[4] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
};

} // namespace

void LogPowerSum::add(int a, int p, double c)
{
    if (a < 0 || p < 0)
        throw std::logic_error("LogPowerSum: negative exponent key");
    if (c == 0.0)
        return;
    auto it = terms_.find({a, p});
    if (it == terms_.end()) {
        terms_.emplace(Key{a, p}, c);
    } else {
        it->second += c;
        if (it->second == kPruneEps)
            terms_.erase(it);
    }
}

LogPowerSum &LogPowerSum::operator+=(const LogPowerSum &rhs)
{
    for (const auto &[k, c] : rhs.terms_)
        add(k.first, k.second, c);
    return *this;
}

LogPowerSum &LogPowerSum::operator*=(double s)
{
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, c] : terms_)
        c *= s;
    return *this;
}

LogPowerSum LogPowerSum::power_shifted(int shift) const
{
    LogPowerSum out;
    for (const auto &[k, c] : terms_)
        out.add(k.first + shift, k.second, c);
    return out;
}

LogPowerSum LogPowerSum::derivative() const
{
    // d/dx x^{-a} ln^p x = -a x^{-a-1} ln^p x + p x^{-a-1} ln^{p-1} x
    LogPowerSum out;
    for (const auto &[k, c] : terms_) {
        auto [a, p] = k;
        if (a != 0)
            out.add(a + 1, p, -static_cast<double>(a) * c);
        if (p != 0)
            out.add(a + 1, p - 1, static_cast<double>(p) * c);
    }
    return out;
}

LogPowerSum LogPowerSum::antiderivative() const
{
    LogPowerSum out;
    for (const auto &[k, c] : terms_) {
        auto [a, p] = k;
        if (a == 0)
            throw std::logic_error("LogPowerSum: antiderivative of non-decaying term");
        if (a == 1) {
            out.add(0, p + 1, c / (p + 1));
            continue;
        }
        // A(a,p) = x^{1-a} ln^p / (1-a) - p/(1-a) A(a,p-1)
        double factor = c;
        for (int q = p; q >= 0; --q) {
            out.add(a - 1, q, factor / (1 - a));
            factor *= -static_cast<double>(q) / (1 - a);
        }
    }
    return out;
}

double LogPowerSum::eval(double x) const
{
    const double lx = std::log(x);
    double total = 0.0;
    for (const auto &[k, c] : terms_) {
        auto [a, p] = k;
        double t = c;
        for (int i = 0; i < a; ++i)
            t /= x;
        for (int i = 0; i < p; ++i)
            t *= lx;
        total += t;
    }
    return total;
}

double tail_integral(int a, int p, double m)
{
    if (a < 2 || p < 0 || m <= 1.0)
        throw std::logic_error("tail_integral: needs a >= 2, p >= 0, m > 1");
    // I(a,p,m) = m^{1-a} ln^p m/(a-1) + p/(a-1) I(a,p-1,m)
    const double lm = std::log(m);
    double head = std::pow(m, 1.0 - a) / (a - 1);
    double acc = 0.0;
    // I = head * sum_{q<=p} (p!/q!) (a-1)^{-(p-q)} ln^q m
    for (int q = 0; q <= p; ++q) {
        double term = 1.0;
        for (int r = q + 1; r <= p; ++r)
            term *= static_cast<double>(r) / (a - 1);
        for (int i = 0; i < q; ++i)
            term *= lm;
        acc += term;
    }
    return head * acc;
}

double LogPowerSum::abs_tail_integral(double m) const
{
    double total = 0.0;
    for (const auto &[k, c] : terms_)
        total += std::abs(c) * tail_integral(k.first, k.second, m);
    return total;
}

namespace {

// err(x) <= sum_g coeff[g] * ln^g x for x >= the sweep cutoff.
using Envelope = std::map<int, double>;

struct LevelModel {
    double kappa = 0.0;
    LogPowerSum tail;  // E(x): P(x) ~ kappa + E(x) for x >= cutoff
    Envelope err;
};

/* One Euler-Maclaurin level: from the model of the inner partial sum
 * build the model of P(n) = D + sum_{m=cutoff}^{n-1} m^{-s} P_inner(m). */
LevelModel build_level(int s, const LevelModel &inner, double partial_at_cutoff,
                       double cutoff, int corrections)
{
    LogPowerSum g = inner.tail;
    g.add(0, 0, inner.kappa);
    LogPowerSum f = g.power_shifted(s); // model integrand, all a >= s >= 1

    LogPowerSum t = f.antiderivative();
    {
        LogPowerSum half = f;
        half *= -0.5;
        t += half;
    }
    LogPowerSum deriv = f;
    for (int i = 1; i <= corrections; ++i) {
        deriv = deriv.derivative(); // order 2i-1 after the second step below
        if (i > 1)
            deriv = deriv.derivative();
        LogPowerSum corr = deriv;
        corr *= kBernOverFact[i - 1];
        t += corr;
    }

    LevelModel out;
    out.kappa = partial_at_cutoff - t.eval(cutoff);
    out.tail = t;

    // Remainder of this level's expansion, uniform in n.
    LogPowerSum d2j = deriv.derivative(); // f^{(2J)}
    const double rem =
        std::abs(kBernOverFact[corrections - 1]) * d2j.abs_tail_integral(cutoff);
    out.err[0] += rem;

    // Propagate the inner model's error through the sum.
    for (const auto &[gpow, c] : inner.err) {
        if (c == 0.0)
            continue;
        if (s == 1) {
            // sum_{m >= cutoff} m^{-1} ln^g m <= ln^{g+1} n/(g+1) - const
            out.err[gpow + 1] += c / (gpow + 1);
        } else {
            out.err[0] += c * tail_integral(s, gpow, cutoff - 1.0);
        }
    }
    return out;
}

} // namespace

Result multiple_zeta(const std::vector<int> &exponents, long long sweep, int corrections)
{
    const int k = static_cast<int>(exponents.size());
    if (k < 1 || k > 10)
        throw std::domain_error("multiple_zeta: depth must be in 1..10");
    int weight = 0;
    for (int s : exponents) {
        if (s < 1)
            throw std::domain_error("multiple_zeta: exponents must be >= 1");
        weight += s;
    }
    if (exponents.front() < 2)
        throw std::domain_error("multiple_zeta: leading exponent must be >= 2 (divergent sum)");
    if (weight > 40)
        throw std::domain_error("multiple_zeta: weight must be <= 40");
    // Envelope propagation bounds sums by integrals of x^{-s} ln^g x, which
    // needs that function decreasing past the cutoff: requires ln(sweep) > g,
    // and g stays below the depth, hence below 10 < ln(10^4+ ...).
    if (sweep < 10000 || sweep > 100000000)
        throw std::domain_error("multiple_zeta: sweep cutoff out of range");
    if (corrections < 1 || corrections > 4)
        throw std::domain_error("multiple_zeta: corrections must be in 1..4");

    const std::size_t m = static_cast<std::size_t>(sweep);
    // P_j(n) = sum_{m < n} m^{-s_j} P_{j+1}(m), P_{k+1} = 1; value = lim P_1.
    std::vector<double> prev(m + 1, 1.0);
    std::vector<double> cur(m + 1, 0.0);
    LevelModel model; // innermost: constant 1, no tail, no error
    model.kappa = 1.0;

    for (int j = k - 1; j >= 0; --j) {
        const int s = exponents[static_cast<std::size_t>(j)];
        double run = 0.0, comp = 0.0; // Kahan
        cur[1] = 0.0;
        for (std::size_t n = 1; n <= m; ++n) {
            if (n >= 2)
                cur[n] = run;
            double inv = 1.0 / static_cast<double>(n);
            double p = prev[n];
            for (int i = 0; i < s; ++i)
                p *= inv;
            double y = p - comp;
            double tnew = run + y;
            comp = (tnew - run) - y;
            run = tnew;
        }
        const double d = cur[m]; // P_j(sweep), recorded before the n = sweep term
        model = build_level(s, model, d, static_cast<double>(sweep), corrections);
        std::swap(prev, cur);
    }

    Result out;
    out.value = model.kappa;
    double bound = 0.0;
    for (const auto &[gpow, c] : model.err) {
        if (gpow != 0)
            throw std::logic_error("multiple_zeta: unbounded error envelope at top level");
        bound += c;
    }
    // Floating-point allowance: Kahan sweeps and model arithmetic.
    out.bound = bound + 1e-13 * (1.0 + std::abs(out.value));
    return out;
}

} // namespace kzcbh::em
