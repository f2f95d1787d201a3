#include "kzcbh/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "kzcbh/errors.hpp"

namespace kzcbh {

namespace {

GaussLegendre compute_gauss_legendre(int n)
{
    // Newton iteration on P_n from the Chebyshev-based initial guess; the
    // recurrence supplies P_n and P_n'.
    GaussLegendre out;
    out.nodes.resize(n);
    out.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-16)
                break;
        }
        out.nodes[n - 1 - i] = x;
        out.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return out;
}

} // namespace

const GaussLegendre &gauss_legendre(int order)
{
    if (order < 1 || order > 64)
        throw std::invalid_argument("gauss_legendre: order out of range: " + std::to_string(order));
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it == cache.end())
        it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

std::vector<Panel> uniform_panels(double a, double b, int count)
{
    if (count < 1)
        throw std::invalid_argument("uniform_panels: count must be >= 1");
    if (!(a < b))
        throw std::invalid_argument("uniform_panels: empty interval");
    std::vector<Panel> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i)
        out.push_back({a + (b - a) * i / count, a + (b - a) * (i + 1) / count});
    out.back().hi = b;
    return out;
}

std::vector<Panel> panels_refined_right(double a, double b, int base, int levels)
{
    if (levels < 1)
        return uniform_panels(a, b, base);
    // base panels on the left half, then halving panels accumulating at b
    double mid = a + (b - a) / 2;
    std::vector<Panel> out = uniform_panels(a, mid, base);
    double lo = mid;
    for (int j = 1; j < levels; ++j) {
        double hi = b - (b - a) / std::ldexp(1.0, j + 1); // b - (b-a)/2^(j+1)
        out.push_back({lo, hi});
        lo = hi;
    }
    out.push_back({lo, b});
    return out;
}

std::vector<Panel> panels_refined_left(double a, double b, int base, int levels)
{
    std::vector<Panel> mirrored = panels_refined_right(-b, -a, base, levels);
    std::vector<Panel> out;
    out.reserve(mirrored.size());
    for (auto it = mirrored.rbegin(); it != mirrored.rend(); ++it)
        out.push_back({-it->hi, -it->lo});
    return out;
}

CollocationGrid::CollocationGrid(std::vector<Panel> panels, int order)
    : panels_(std::move(panels)), order_(order)
{
    if (panels_.empty())
        throw std::invalid_argument("CollocationGrid: no panels");
    for (std::size_t p = 0; p < panels_.size(); ++p) {
        if (!(panels_[p].lo < panels_[p].hi))
            throw std::invalid_argument("CollocationGrid: degenerate panel");
        if (p && std::fabs(panels_[p].lo - panels_[p - 1].hi) > 1e-14)
            throw std::invalid_argument("CollocationGrid: panels not contiguous");
    }

    const GaussLegendre &gl = gauss_legendre(order_);
    nodes_.reserve(panels_.size() * order_);
    for (const Panel &p : panels_) {
        double c = 0.5 * (p.lo + p.hi), h = 0.5 * (p.hi - p.lo);
        for (int i = 0; i < order_; ++i)
            nodes_.push_back(c + h * gl.nodes[i]);
    }

    /* K[j][i] = int_{-1}^{x_j} L_i. The Lagrange basis has degree
     * order-1, so a Gauss rule of the same order on each subinterval is
     * exact. Basis values come from the barycentric form. */
    std::vector<double> bary(order_);
    for (int i = 0; i < order_; ++i) {
        double w = 1.0;
        for (int k = 0; k < order_; ++k)
            if (k != i)
                w /= (gl.nodes[i] - gl.nodes[k]);
        bary[i] = w;
    }
    auto lagrange = [&](int i, double x) {
        double num = bary[i], den = 0.0;
        bool hit = false;
        double hit_val = 0.0;
        for (int k = 0; k < order_; ++k) {
            double d = x - gl.nodes[k];
            if (std::fabs(d) < 1e-14) {
                hit = true;
                hit_val = (k == i) ? 1.0 : 0.0;
                break;
            }
            den += bary[k] / d;
        }
        if (hit)
            return hit_val;
        return (num / (x - gl.nodes[i])) / den;
    };

    kmat_.assign(order_, std::vector<double>(order_, 0.0));
    for (int j = 0; j < order_; ++j) {
        double lo = -1.0, hi = gl.nodes[j];
        double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        for (int q = 0; q < order_; ++q) {
            double x = c + h * gl.nodes[q];
            double w = h * gl.weights[q];
            for (int i = 0; i < order_; ++i)
                kmat_[j][i] += w * lagrange(i, x);
        }
    }
}

std::vector<double> CollocationGrid::sample(const std::function<double(double)> &f) const
{
    std::vector<double> out(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        out[i] = f(nodes_[i]);
    return out;
}

CollocationGrid::Cumulative CollocationGrid::cumulative(const std::vector<double> &samples) const
{
    if (samples.size() != nodes_.size())
        throw std::invalid_argument("CollocationGrid::cumulative: sample count mismatch");
    const GaussLegendre &gl = gauss_legendre(order_);
    Cumulative out;
    out.at_nodes.resize(nodes_.size());
    double carried = 0.0;
    for (std::size_t p = 0; p < panels_.size(); ++p) {
        double h = 0.5 * (panels_[p].hi - panels_[p].lo);
        const double *g = samples.data() + p * order_;
        for (int j = 0; j < order_; ++j) {
            double acc = 0.0;
            for (int i = 0; i < order_; ++i)
                acc += kmat_[j][i] * g[i];
            out.at_nodes[p * order_ + j] = carried + h * acc;
        }
        double full = 0.0;
        for (int i = 0; i < order_; ++i)
            full += gl.weights[i] * g[i];
        carried += h * full;
    }
    out.total = carried;
    return out;
}

double CollocationGrid::integrate(const std::vector<double> &samples) const
{
    if (samples.size() != nodes_.size())
        throw std::invalid_argument("CollocationGrid::integrate: sample count mismatch");
    const GaussLegendre &gl = gauss_legendre(order_);
    double carried = 0.0;
    for (std::size_t p = 0; p < panels_.size(); ++p) {
        double h = 0.5 * (panels_[p].hi - panels_[p].lo);
        const double *g = samples.data() + p * order_;
        double full = 0.0;
        for (int i = 0; i < order_; ++i)
            full += gl.weights[i] * g[i];
        carried += h * full;
    }
    return carried;
}

namespace {

double simplex_rec(int level, double lo, double hi,
                   const std::function<double(const std::vector<double> &)> &f,
                   std::vector<double> &point, int order, int panelcount)
{
    // level counts down: current variable is z_level, integrated over
    // [lo, hi]; inner variables are below it.
    const GaussLegendre &gl = gauss_legendre(order);
    std::vector<Panel> panels = uniform_panels(lo, hi, panelcount);
    double total = 0.0;
    for (const Panel &p : panels) {
        double c = 0.5 * (p.lo + p.hi), h = 0.5 * (p.hi - p.lo);
        for (int q = 0; q < order; ++q) {
            double z = c + h * gl.nodes[q];
            double w = h * gl.weights[q];
            point[level - 1] = z;
            double inner = (level == 1) ? f(point) : simplex_rec(level - 1, lo, z, f, point, order, panelcount);
            total += w * inner;
        }
    }
    return total;
}

} // namespace

double simplex_integrate(int dim, double a, double b,
                         const std::function<double(const std::vector<double> &)> &f,
                         int order, int panels)
{
    if (dim < 1)
        throw std::invalid_argument("simplex_integrate: dimension must be >= 1");
    if (dim > 4)
        throw std::invalid_argument("simplex_integrate: dimension too large for nested rules");
    std::vector<double> point(dim, 0.0);
    return simplex_rec(dim, a, b, f, point, order, panels);
}

} // namespace kzcbh
