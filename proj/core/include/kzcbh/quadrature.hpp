#ifndef KZCBH_QUADRATURE_HPP
#define KZCBH_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <vector>

namespace kzcbh {

// Gauss-Legendre rule on [-1, 1]. Cached per order.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussLegendre &gauss_legendre(int order);

struct Panel {
    double lo;
    double hi;
};

/* Panel schedules. Geometric refinement halves the distance to a singular
 * endpoint `levels` times, so the last panel has width (b-a) * 2^-levels;
 * quadrature nodes are interior, so integrable endpoint singularities are
 * never evaluated at the endpoint itself. */
std::vector<Panel> uniform_panels(double a, double b, int count);
std::vector<Panel> panels_refined_right(double a, double b, int base, int levels);
std::vector<Panel> panels_refined_left(double a, double b, int base, int levels);

/* Collocation grid for iterated integrals: per-panel Gauss-Legendre nodes
 * plus the spectral integration matrix K[j][i] = integral of the i-th
 * Lagrange basis polynomial from the panel start to node j. Given samples
 * of an integrand at all nodes, `cumulative` returns the antiderivative
 * (from the grid origin) sampled at the same nodes, which is what makes
 * nesting integrals cheap: every level reuses one grid. */
class CollocationGrid {
  public:
    CollocationGrid(std::vector<Panel> panels, int order);

    const std::vector<double> &nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    double origin() const { return panels_.front().lo; }
    double end() const { return panels_.back().hi; }
    int order() const { return order_; }
    const std::vector<Panel> &panels() const { return panels_; }

    struct Cumulative {
        std::vector<double> at_nodes;
        double total;
    };

    Cumulative cumulative(const std::vector<double> &samples) const;

    // Plain integral of sampled data over the whole grid.
    double integrate(const std::vector<double> &samples) const;

    std::vector<double> sample(const std::function<double(double)> &f) const;

  private:
    std::vector<Panel> panels_;
    int order_;
    std::vector<double> nodes_;
    std::vector<std::vector<double>> kmat_; // order x order
};

/* Nested quadrature of a fully symmetric simplex integral
 *   int_{a <= z_1 <= ... <= z_n <= b} f(z_1, ..., z_n) dz,
 * evaluated by recursive one-dimensional Gauss-Legendre rules (outermost
 * variable z_n first). Cost grows as (panels*order)^n; meant for low
 * dimension cross-checks, not production integration. */
double simplex_integrate(int dim, double a, double b,
                         const std::function<double(const std::vector<double> &)> &f,
                         int order = 12, int panels = 4);

} // namespace kzcbh

#endif
