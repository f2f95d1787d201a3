#ifndef KZCBH_HOLONOMY_HPP
#define KZCBH_HOLONOMY_HPP

#include <functional>
#include <vector>

#include "kzcbh/lyndon.hpp"
#include "kzcbh/series.hpp"

namespace kzcbh {

/* Lie-algebra-valued coefficient of a linear ODE H' = path(z) H: a
 * callable z -> degree-1 coordinates (one per generator), together with
 * the set of real singular points transports must avoid. */
class ConnectionPath {
  public:
    ConnectionPath(int alphabet, std::function<std::vector<double>(double)> coords,
                   std::vector<double> singularities = {});

    int alphabet() const { return alphabet_; }
    const std::vector<double> &singularities() const { return singularities_; }

    // Degree-1 coordinates at z; validated to have one entry per generator.
    std::vector<double> coords(double z) const;

    // The same value as a series supported on degree-1 words.
    NumericSeries value(double z, int degree) const;

  private:
    int alphabet_;
    std::function<std::vector<double>(double)> coords_;
    std::vector<double> singularities_;
};

// A_0/z + A_1/(z-1) on the interval (0,1); singular at both endpoints.
ConnectionPath kz_connection();
ConnectionPath constant_path(std::vector<double> coords);
/* Value j on [breaks[j], breaks[j+1]); needs breaks.size() == coords.size()+1.
 * Discontinuous but bounded, so iterated integrals stay well defined. */
ConnectionPath piecewise_constant_path(std::vector<double> breaks,
                                       std::vector<std::vector<double>> coords);
// coeffs[j] holds the monomial coefficients in z of generator j's coordinate.
ConnectionPath polynomial_path(std::vector<std::vector<double>> coeffs);

/* Iterated-integral quadrature policy: the interval, a uniform panel
 * count, and the Gauss order per panel. refined() is the companion grid
 * used to attach an error estimate to every integral. */
struct SimplexIntegrator {
    double a = 0.0;
    double b = 1.0;
    int panels = 8;
    int order = 12;

    SimplexIntegrator refined() const { return {a, b, 2 * panels, order + 4}; }
};

/* Fourth-order (classical Runge-Kutta) transport of G' = path(z) G with
 * G(z0) = 1, truncated at the given degree. z1 < z0 integrates backward.
 * A singularity inside the closed transport interval is a domain error. */
NumericSeries ode_transport(const ConnectionPath &path, double z0, double z1, int steps,
                            int degree);

/* Finite-eps regularization exp(-log(eps) A_1) T(eps -> 1-eps) exp(log(eps) A_0)
 * of the renormalized holonomy of the KZ equation; converges to the
 * associator as eps -> 0+. Requires 0 < eps < 1/2. */
NumericSeries kz_associator_numeric(int degree, double eps, int steps);

/* Extrapolated associator from the pair (eps, eps/2): each evaluation
 * first removes the closed-form first-order boundary layer (the local
 * solution frames at 0 and 1 conjugated into the regularization, an
 * eps * polynomial(log eps) defect that plain Richardson cannot cancel
 * from two points), then one Richardson step in eps^2 removes the bulk
 * of the remaining defect. */
NumericSeries kz_associator_extrapolated(int degree, double eps, int steps);

/* Word-indexed iterated integrals of the path over a <= z_1 <= ... <= z_n <= b:
 * the coefficient of w = j_n ... j_1 (left to right) integrates
 * c_{j_n}(z_n) ... c_{j_1}(z_1), so the leftmost letter rides the outermost
 * variable and the result is the holonomy of H' = path(z) H. Group-like up
 * to quadrature error. If error_out is non-null it receives the maximum
 * coefficient shift between the base and refined() grids. */
NumericSeries chen_series(const ConnectionPath &path, double a, double b,
                          const SimplexIntegrator &integrator, int degree,
                          double *error_out = nullptr);

/* log of the holonomy as a Lie element: the multilinear cbh applied
 * word-by-word to the Chen series, which resums the simplex integrals of
 * CBH_n of the path samples without forming them individually. */
NumericLieElement log_holonomy_cbh(const ConnectionPath &path, double a, double b,
                                   const SimplexIntegrator &integrator, int degree,
                                   double drop_tol = 1e-9);

/* Independent form of the same quantity: direct nested quadrature of
 * sum_n CBH_n(path(z_n), ..., path(z_1)) over the simplex, evaluating the
 * multilinear cbh pointwise at the sampled path values. Cost grows as
 * (order * panels)^degree, so degree <= 3. */
NumericLieElement log_holonomy_simplex(const ConnectionPath &path, double a, double b,
                                       int degree, int order = 12, int panels = 4,
                                       double drop_tol = 1e-9);

} // namespace kzcbh

#endif
