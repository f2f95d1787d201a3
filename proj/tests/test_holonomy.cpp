#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "kzcbh/holonomy.hpp"
#include "kzcbh/lemurakami.hpp"
#include "kzcbh/mzv.hpp"

using namespace kzcbh;

namespace {
Word W(std::initializer_list<int> l) { return Word::from_ints(std::vector<int>(l)); }
constexpr double kZeta2 = 1.6449340668482264365;
} // namespace

TEST_CASE("transport along a constant path is the exponential")
{
    ConnectionPath p = constant_path({0.7, -0.3});
    NumericSeries g = ode_transport(p, 0.0, 1.0, 400, 4);
    NumericSeries x0 = NumericSeries::generator(2, 4, 0);
    NumericSeries x1 = NumericSeries::generator(2, 4, 1);
    NumericSeries expect = exp(x0 * 0.7 + x1 * -0.3);
    CHECK((g - expect).max_abs() <= 1e-12);
}

TEST_CASE("transport composes along subintervals")
{
    ConnectionPath p = polynomial_path({{0.2, 1.0}, {-0.5, 0.0, 0.9}});
    NumericSeries whole = ode_transport(p, 0.0, 1.0, 800, 4);
    NumericSeries left = ode_transport(p, 0.0, 0.4, 320, 4);
    NumericSeries right = ode_transport(p, 0.4, 1.0, 480, 4);
    CHECK((right * left - whole).max_abs() <= 1e-11);

    SUBCASE("backward transport inverts forward")
    {
        NumericSeries back = ode_transport(p, 1.0, 0.0, 800, 4);
        CHECK((back * whole - NumericSeries::one(2, 4)).max_abs() <= 1e-11);
    }
}

TEST_CASE("transport refuses to cross a singular point")
{
    ConnectionPath kz = kz_connection();
    CHECK_THROWS_AS(ode_transport(kz, -0.5, 0.5, 100, 2), std::domain_error);
    CHECK_THROWS_AS(ode_transport(kz, 0.5, 1.0, 100, 2), std::domain_error);
    // interior interval is fine
    NumericSeries ok = ode_transport(kz, 0.25, 0.75, 100, 2);
    CHECK(ok.constant_term() == 1.0);
}

TEST_CASE("iterated integrals match the transport on a smooth path")
{
    ConnectionPath p = polynomial_path({{1.0, -0.6}, {0.3, 0.8, -1.1}});
    SimplexIntegrator integ;
    double err = 0.0;
    NumericSeries chen = chen_series(p, 0.0, 1.0, integ, 4, &err);
    NumericSeries ode = ode_transport(p, 0.0, 1.0, 3000, 4);
    CHECK((chen - ode).max_abs() <= 1e-10);
    CHECK(err <= 1e-10);
    CHECK(chen.grouplike_residual() <= 1e-8); // group-like within quadrature error
}

TEST_CASE("piecewise-constant holonomy is the ordered product of exponentials")
{
    ConnectionPath p = piecewise_constant_path({0.0, 0.5, 1.0}, {{1.0, 0.0}, {0.0, 1.0}});
    SimplexIntegrator integ;
    NumericSeries chen = chen_series(p, 0.0, 1.0, integ, 4);
    NumericSeries x0 = NumericSeries::generator(2, 4, 0);
    NumericSeries x1 = NumericSeries::generator(2, 4, 1);
    // second segment acts after (to the left of) the first
    NumericSeries expect = exp(x1 * 0.5) * exp(x0 * 0.5);
    CHECK((chen - expect).max_abs() <= 1e-12);
}

TEST_CASE("log holonomy routes agree with each other and with the transport log")
{
    ConnectionPath p = polynomial_path({{0.4, 0.4}, {-0.2, 1.0}});
    SimplexIntegrator integ;
    NumericLieElement via_cbh = log_holonomy_cbh(p, 0.0, 1.0, integ, 3, 1e-11);
    NumericLieElement via_simplex = log_holonomy_simplex(p, 0.0, 1.0, 3, 12, 4, 1e-11);
    CHECK((via_cbh - via_simplex).max_abs() <= 1e-9);

    NumericSeries ode = ode_transport(p, 0.0, 1.0, 2000, 3);
    NumericLieElement via_log = lie_extract(log(ode), 1e-9).element;
    CHECK((via_cbh - via_log).max_abs() <= 1e-9);
}

TEST_CASE("constant path log holonomy is the generator")
{
    NumericLieElement l =
        log_holonomy_cbh(constant_path({0.0, 2.5}), 0.0, 1.0, SimplexIntegrator{}, 4, 0.0);
    CHECK(std::abs(l.coordinate(W({1})) - 2.5) <= 1e-12);
    NumericLieElement rest = l;
    rest.set_coordinate(W({1}), 0.0);
    CHECK(rest.max_abs() <= 1e-12);
}

TEST_CASE("degree-1 terms are a boundary artifact that extrapolation removes")
{
    // plain regularization leaves O(eps log(1/eps)) in degree 1 ...
    NumericSeries phi = kz_associator_numeric(2, 1e-3, 4000);
    CHECK(phi.constant_term() == 1.0);
    double d1 = std::max(std::abs(phi.coefficient(W({0}))), std::abs(phi.coefficient(W({1}))));
    CHECK(d1 <= 1e-3 * std::log(1e3));
    CHECK(d1 >= 1e-5); // genuinely present, not rounding noise

    // ... which shrinks with eps ...
    NumericSeries half = kz_associator_numeric(2, 5e-4, 4000);
    double d1h = std::max(std::abs(half.coefficient(W({0}))), std::abs(half.coefficient(W({1}))));
    CHECK(d1h <= 0.75 * d1);

    // ... and the boundary-layer removal takes out almost all of it
    NumericSeries extr = kz_associator_extrapolated(2, 1e-3, 8000);
    double d1x = std::max(std::abs(extr.coefficient(W({0}))), std::abs(extr.coefficient(W({1}))));
    CHECK(d1x <= 5e-5);
}

TEST_CASE("extrapolated associator degree-2 coefficients carry the dilogarithm value")
{
    NumericSeries phi = kz_associator_extrapolated(2, 1e-3, 8000);
    CHECK(std::abs(phi.coefficient(W({0, 1})) + kZeta2) <= 1e-4);
    CHECK(std::abs(phi.coefficient(W({1, 0})) - kZeta2) <= 1e-4);
}

TEST_CASE("extrapolation is eps-stable at degree 3")
{
    // halving eps moves the extrapolated coefficients by <= 1e-5
    NumericSeries a = kz_associator_extrapolated(3, 1e-3, 20000);
    NumericSeries b = kz_associator_extrapolated(3, 5e-4, 20000);
    CHECK((a - b).max_abs() <= 1e-5);
}

TEST_CASE("connection path validates its callable")
{
    ConnectionPath bad(2, [](double) { return std::vector<double>{1.0}; });
    CHECK_THROWS_AS(bad.coords(0.5), std::domain_error);
    ConnectionPath good(2, [](double z) { return std::vector<double>{z, 1.0 - z}; });
    CHECK(good.coords(0.25) == std::vector<double>{0.25, 0.75});
    NumericSeries v = good.value(0.25, 3);
    CHECK(v.coefficient(W({0})) == 0.25);
    CHECK(v.coefficient(W({1})) == 0.75);
    CHECK(v.support_size() == 2);
}

TEST_CASE("piecewise path shape validation")
{
    CHECK_THROWS_AS(piecewise_constant_path({0.0, 1.0}, {{1.0, 0.0}, {0.0, 1.0}}),
                    std::domain_error);
}
