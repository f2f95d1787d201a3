#include "kzcbh/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "kzcbh/cbh.hpp"
#include "kzcbh/quadrature.hpp"

namespace kzcbh {

ConnectionPath::ConnectionPath(int alphabet, std::function<std::vector<double>(double)> coords,
                               std::vector<double> singularities)
    : alphabet_(alphabet), coords_(std::move(coords)), singularities_(std::move(singularities))
{
    if (alphabet_ < 1)
        throw std::domain_error("ConnectionPath: alphabet size must be >= 1");
    if (!coords_)
        throw std::domain_error("ConnectionPath: missing coordinate callable");
}

std::vector<double> ConnectionPath::coords(double z) const
{
    std::vector<double> c = coords_(z);
    if (static_cast<int>(c.size()) != alphabet_)
        throw std::domain_error("ConnectionPath: coordinate count != alphabet size");
    return c;
}

NumericSeries ConnectionPath::value(double z, int degree) const
{
    NumericSeries out = NumericSeries::zero(alphabet_, degree);
    if (degree < 1)
        return out;
    std::vector<double> c = coords(z);
    for (int j = 0; j < alphabet_; ++j)
        out.add_coefficient(Word::single(j), c[static_cast<std::size_t>(j)]);
    return out;
}

ConnectionPath kz_connection()
{
    return ConnectionPath(
        2, [](double z) { return std::vector<double>{1.0 / z, 1.0 / (z - 1.0)}; }, {0.0, 1.0});
}

ConnectionPath constant_path(std::vector<double> coords)
{
    const int m = static_cast<int>(coords.size());
    return ConnectionPath(m, [c = std::move(coords)](double) { return c; });
}

ConnectionPath piecewise_constant_path(std::vector<double> breaks,
                                       std::vector<std::vector<double>> coords)
{
    if (coords.empty() || breaks.size() != coords.size() + 1)
        throw std::domain_error("piecewise_constant_path: needs one more break than pieces");
    if (!std::is_sorted(breaks.begin(), breaks.end()))
        throw std::domain_error("piecewise_constant_path: breaks must be sorted");
    const int m = static_cast<int>(coords.front().size());
    for (const auto &c : coords)
        if (static_cast<int>(c.size()) != m)
            throw std::domain_error("piecewise_constant_path: ragged coordinates");
    auto eval = [breaks = std::move(breaks), coords = std::move(coords)](double z) {
        // Piece j covers [breaks[j], breaks[j+1]); the last piece is closed.
        auto it = std::upper_bound(breaks.begin(), breaks.end(), z);
        std::size_t j = it == breaks.begin() ? 0 : static_cast<std::size_t>(it - breaks.begin()) - 1;
        j = std::min(j, coords.size() - 1);
        return coords[j];
    };
    return ConnectionPath(m, std::move(eval));
}

ConnectionPath polynomial_path(std::vector<std::vector<double>> coeffs)
{
    if (coeffs.empty())
        throw std::domain_error("polynomial_path: needs at least one generator");
    const int m = static_cast<int>(coeffs.size());
    auto eval = [coeffs = std::move(coeffs)](double z) {
        std::vector<double> out;
        out.reserve(coeffs.size());
        for (const auto &poly : coeffs) {
            double v = 0.0;
            for (auto it = poly.rbegin(); it != poly.rend(); ++it)
                v = v * z + *it;
            out.push_back(v);
        }
        return out;
    };
    return ConnectionPath(m, std::move(eval));
}

namespace {

/* Dense word-indexed state for the transport ODE. prepend[i][j] is the
 * index of letter-j-prepended word i, or -1 past the truncation degree;
 * the derivative of y at j.w is c_j(z) y[w], the left regular action. */
struct WordTable {
    std::vector<Word> words;
    std::vector<std::vector<int>> prepend;
    int alphabet;
    int degree;
};

WordTable build_word_table(int alphabet, int degree)
{
    WordTable t;
    t.alphabet = alphabet;
    t.degree = degree;
    std::map<Word, int> index;
    std::vector<Word> frontier{Word::empty()};
    for (int len = 0; len <= degree; ++len) {
        std::vector<Word> next;
        for (const Word &w : frontier) {
            index.emplace(w, static_cast<int>(t.words.size()));
            t.words.push_back(w);
            if (len < degree)
                for (int j = 0; j < alphabet; ++j)
                    next.push_back(Word::single(j).concat(w));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
    }
    t.prepend.assign(t.words.size(), std::vector<int>(alphabet, -1));
    for (std::size_t i = 0; i < t.words.size(); ++i) {
        if (static_cast<int>(t.words[i].size()) >= degree)
            continue;
        for (int j = 0; j < alphabet; ++j) {
            auto it = index.find(Word::single(j).concat(t.words[i]));
            t.prepend[i][j] = it->second;
        }
    }
    return t;
}

void apply_connection(const WordTable &t, const std::vector<double> &c,
                      const std::vector<double> &y, std::vector<double> &dy)
{
    std::fill(dy.begin(), dy.end(), 0.0);
    for (std::size_t i = 0; i < t.words.size(); ++i) {
        const double yi = y[i];
        if (yi == 0.0)
            continue;
        const auto &row = t.prepend[i];
        for (int j = 0; j < t.alphabet; ++j)
            if (row[j] >= 0)
                dy[static_cast<std::size_t>(row[j])] += c[static_cast<std::size_t>(j)] * yi;
    }
}

} // namespace

NumericSeries ode_transport(const ConnectionPath &path, double z0, double z1, int steps,
                            int degree)
{
    if (steps < 1)
        throw std::domain_error("ode_transport: steps must be >= 1");
    const double lo = std::min(z0, z1), hi = std::max(z0, z1);
    for (double s : path.singularities())
        if (s >= lo && s <= hi)
            throw std::domain_error("ode_transport: singularity at " + std::to_string(s) +
                                    " inside the transport interval");

    const WordTable table = build_word_table(path.alphabet(), degree);
    const std::size_t n = table.words.size();
    std::vector<double> y(n, 0.0), k1(n), k2(n), k3(n), k4(n), tmp(n);
    y[0] = 1.0; // empty word: G(z0) = 1

    const double h = (z1 - z0) / steps;
    for (int step = 0; step < steps; ++step) {
        const double z = z0 + h * step;
        apply_connection(table, path.coords(z), y, k1);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + 0.5 * h * k1[i];
        apply_connection(table, path.coords(z + 0.5 * h), tmp, k2);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + 0.5 * h * k2[i];
        apply_connection(table, path.coords(z + 0.5 * h), tmp, k3);
        for (std::size_t i = 0; i < n; ++i)
            tmp[i] = y[i] + h * k3[i];
        apply_connection(table, path.coords(z + h), tmp, k4);
        for (std::size_t i = 0; i < n; ++i)
            y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }

    NumericSeries out = NumericSeries::zero(path.alphabet(), degree);
    for (std::size_t i = 0; i < n; ++i)
        if (y[i] != 0.0)
            out.set_coefficient(table.words[i], y[i]);
    return out;
}

NumericSeries kz_associator_numeric(int degree, double eps, int steps)
{
    if (!(eps > 0.0 && eps < 0.5))
        throw std::domain_error("kz_associator_numeric: eps must lie in (0, 1/2)");
    const double leps = std::log(eps);
    NumericSeries transport = ode_transport(kz_connection(), eps, 1.0 - eps, steps, degree);
    NumericSeries a0 = NumericSeries::generator(2, degree, 0);
    NumericSeries a1 = NumericSeries::generator(2, degree, 1);
    a0 *= leps;
    a1 *= -leps;
    return exp(a1) * transport * exp(a0);
}

namespace {

// sum_j ad_gen^j(seed): (1 - ad_gen)^{-1} seed, finite in the truncation.
NumericSeries ad_geometric(const NumericSeries &gen, const NumericSeries &seed)
{
    NumericSeries total = seed;
    NumericSeries cur = seed;
    while (true) {
        cur = gen.bracket(cur);
        if (cur.max_abs() == 0.0)
            break;
        total += cur;
    }
    return total;
}

// e^{t ad_gen}(seed), finite in the truncation.
NumericSeries ad_exponential(const NumericSeries &gen, const NumericSeries &seed, double t)
{
    NumericSeries total = seed;
    NumericSeries cur = seed;
    double factor = 1.0;
    int j = 1;
    while (true) {
        cur = gen.bracket(cur);
        if (cur.max_abs() == 0.0)
            break;
        factor *= t / j;
        NumericSeries scaled = cur;
        scaled *= factor;
        total += scaled;
        ++j;
    }
    return total;
}

/* First-order boundary-layer correction of the finite-eps regularization.
 * With G_1 = W(z)(1-z)^{A_1} and G_0 = V(z) z^{A_0}, the local frames obey
 * W'(1) = (1 - ad_{A_1})^{-1} A_0 and V'(0) = -(1 - ad_{A_0})^{-1} A_1, so
 *   Phi_eps = (1 - eps X) Phi (1 - eps Y) + O(eps^2 polylog),
 * with X = e^{-L ad_{A_1}}(W'(1)), Y = e^{-L ad_{A_0}}(V'(0)), L = log eps.
 * Undoing the two factors leaves an O(eps^2 polylog) defect. */
NumericSeries kz_boundary_corrected(int degree, double eps, int steps)
{
    NumericSeries phi = kz_associator_numeric(degree, eps, steps);
    const double leps = std::log(eps);
    NumericSeries a0 = NumericSeries::generator(2, degree, 0);
    NumericSeries a1 = NumericSeries::generator(2, degree, 1);
    NumericSeries w1 = ad_geometric(a1, a0);
    NumericSeries v1 = ad_geometric(a0, a1);
    v1 *= -1.0;
    NumericSeries x = ad_exponential(a1, w1, -leps);
    NumericSeries y = ad_exponential(a0, v1, -leps);
    x *= eps;
    y *= eps;
    NumericSeries left = NumericSeries::one(2, degree);
    left += x;
    NumericSeries right = NumericSeries::one(2, degree);
    right += y;
    return left * phi * right;
}

} // namespace

NumericSeries kz_associator_extrapolated(int degree, double eps, int steps)
{
    NumericSeries coarse = kz_boundary_corrected(degree, eps, steps);
    NumericSeries fine = kz_boundary_corrected(degree, eps * 0.5, steps);
    // The corrected values carry O(eps^2 polylog) defects; one Richardson
    // step in eps^2 cancels the slowly varying part.
    fine *= 4.0 / 3.0;
    coarse *= -1.0 / 3.0;
    fine += coarse;
    return fine;
}

namespace {

NumericSeries chen_on_grid(const ConnectionPath &path, const CollocationGrid &grid, int degree)
{
    const int m = path.alphabet();
    const auto &nodes = grid.nodes();
    std::vector<std::vector<double>> cvals(static_cast<std::size_t>(m),
                                           std::vector<double>(nodes.size()));
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        std::vector<double> c = path.coords(nodes[k]);
        for (int j = 0; j < m; ++j)
            cvals[static_cast<std::size_t>(j)][k] = c[static_cast<std::size_t>(j)];
    }

    NumericSeries out = NumericSeries::one(m, degree);
    // I_w sampled at the grid nodes, by increasing word length; the
    // recursion peels the leftmost letter: I_{j w}(t) = int_a^t c_j I_w.
    std::map<Word, std::vector<double>> level{{Word::empty(), std::vector<double>(nodes.size(), 1.0)}};
    std::vector<double> integrand(nodes.size());
    for (int len = 1; len <= degree; ++len) {
        std::map<Word, std::vector<double>> next;
        for (const auto &[w, samples] : level) {
            for (int j = 0; j < m; ++j) {
                for (std::size_t k = 0; k < nodes.size(); ++k)
                    integrand[k] = cvals[static_cast<std::size_t>(j)][k] * samples[k];
                auto cum = grid.cumulative(integrand);
                Word jw = Word::single(j).concat(w);
                out.set_coefficient(jw, cum.total);
                next.emplace(std::move(jw), std::move(cum.at_nodes));
            }
        }
        level = std::move(next);
    }
    return out;
}

} // namespace

NumericSeries chen_series(const ConnectionPath &path, double a, double b,
                          const SimplexIntegrator &integrator, int degree, double *error_out)
{
    if (!(a < b))
        throw std::domain_error("chen_series: needs a < b");
    CollocationGrid base(uniform_panels(a, b, integrator.panels), integrator.order);
    NumericSeries coarse = chen_on_grid(path, base, degree);
    SimplexIntegrator fine_policy = integrator.refined();
    CollocationGrid fine(uniform_panels(a, b, fine_policy.panels), fine_policy.order);
    NumericSeries refined = chen_on_grid(path, fine, degree);
    if (error_out) {
        NumericSeries diff = refined;
        diff -= coarse;
        *error_out = diff.max_abs();
    }
    return refined;
}

NumericLieElement log_holonomy_cbh(const ConnectionPath &path, double a, double b,
                                   const SimplexIntegrator &integrator, int degree,
                                   double drop_tol)
{
    NumericSeries chen = chen_series(path, a, b, integrator, degree);
    return cbh_map(chen, drop_tol);
}

namespace {

/* CBH_n(path(z_n), ..., path(z_1)) by substituting the sampled degree-1
 * coordinates into the multilinear cbh: generator i of cbh_series(n)
 * receives the sample at z_{n-i}, so the leftmost exponential carries the
 * largest variable, matching the holonomy's time ordering. */
void accumulate_cbh_sample(const Series &motif, const std::vector<std::vector<double>> &samples,
                           double weight, NumericSeries &acc)
{
    const int n = static_cast<int>(samples.size());
    const int m = static_cast<int>(samples.front().size());
    for (const auto &[v, q] : motif.terms()) {
        const double qd = to_double(q);
        // v is multilinear in the argument letters; expand each into its
        // m coordinates by an odometer over target letters j_1..j_n.
        std::vector<int> digits(static_cast<std::size_t>(n), 0);
        while (true) {
            double factor = qd * weight;
            for (int k = 0; k < n; ++k) {
                int arg = v.letter(static_cast<std::size_t>(k));
                factor *= samples[static_cast<std::size_t>(n - 1 - arg)]
                                 [static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])];
            }
            if (factor != 0.0) {
                std::vector<int> letters(digits.begin(), digits.end());
                acc.add_coefficient(Word::from_ints(letters), factor);
            }
            int pos = n - 1;
            while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == m) {
                digits[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0)
                break;
        }
    }
}

/* Integrates z_{level} over [a, upper]; nested variables keep the fixed
 * global lower bound, so the visited tuples sweep a <= z_1 <= ... <= z_n. */
void simplex_cbh_recurse(const ConnectionPath &path, int level, double a, double upper,
                         const GaussLegendre &gl, int panels,
                         std::vector<std::vector<double>> &samples, double weight,
                         const Series &motif, NumericSeries &acc)
{
    const double width = (upper - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double c = a + width * (p + 0.5);
        const double h = width * 0.5;
        for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
            const double z = c + h * gl.nodes[i];
            const double w = weight * h * gl.weights[i];
            samples[static_cast<std::size_t>(level - 1)] = path.coords(z);
            if (level == 1)
                accumulate_cbh_sample(motif, samples, w, acc);
            else
                simplex_cbh_recurse(path, level - 1, a, z, gl, panels, samples, w, motif, acc);
        }
    }
}

} // namespace

NumericLieElement log_holonomy_simplex(const ConnectionPath &path, double a, double b,
                                       int degree, int order, int panels, double drop_tol)
{
    if (degree < 1 || degree > 3)
        throw std::domain_error("log_holonomy_simplex: degree must be in 1..3");
    if (!(a < b))
        throw std::domain_error("log_holonomy_simplex: needs a < b");
    const GaussLegendre &gl = gauss_legendre(order);
    NumericSeries acc = NumericSeries::zero(path.alphabet(), degree);
    for (int n = 1; n <= degree; ++n) {
        const Series &motif = cbh_series(n);
        std::vector<std::vector<double>> samples(static_cast<std::size_t>(n));
        simplex_cbh_recurse(path, n, a, b, gl, panels, samples, 1.0, motif, acc);
    }
    return lie_extract(acc, drop_tol).element;
}

} // namespace kzcbh
