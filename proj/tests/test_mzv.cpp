#include "doctest.h"

#include <cmath>

#include "kzcbh/errors.hpp"
#include "kzcbh/mzv.hpp"
#include "../core/src/eulermaclaurin.hpp"

using namespace kzcbh;

namespace {
constexpr double kPi = 3.14159265358979323846;
// reference constants, truncated well below double precision
constexpr double kZeta2 = 1.6449340668482264365;
constexpr double kZeta3 = 1.2020569031595942854;
constexpr double kZeta5 = 1.0369277551433699263;
} // namespace

TEST_CASE("nested-sum engine hits classical closed forms within its own bounds")
{
    struct Case {
        std::vector<int> exponents;
        double reference;
    };
    const Case cases[] = {
        {{2}, kZeta2},
        {{3}, kZeta3},
        {{4}, kPi * kPi * kPi * kPi / 90.0},
        {{2, 1}, kZeta3},                          // Euler's reduction
        {{2, 2}, kPi * kPi * kPi * kPi / 120.0},
        {{3, 1}, kPi * kPi * kPi * kPi / 360.0},
        {{2, 1, 1}, kPi * kPi * kPi * kPi / 90.0}, // duality with (4)
        {{2, 1, 1, 1}, kZeta5},                    // duality with (5)
    };
    for (const auto &c : cases) {
        em::Result r = em::multiple_zeta(c.exponents, 20000, 3);
        CHECK(std::abs(r.value - c.reference) <= r.bound);
        CHECK(std::abs(r.value - c.reference) <= 1e-12);
        CHECK(r.bound <= 1e-9);
    }
}

TEST_CASE("the tail model really beats the plain truncated sum")
{
    // with a 20000-term sweep a bare sum for zeta(2) is off by ~5e-5;
    // the modelled tail has to do much better than that
    em::Result r = em::multiple_zeta({2}, 20000, 3);
    CHECK(std::abs(r.value - kZeta2) < 1e-13);
}

TEST_CASE("nested-sum engine rejects malformed requests")
{
    CHECK_THROWS_AS(em::multiple_zeta({1, 2}, 20000, 3), std::domain_error);  // divergent
    CHECK_THROWS_AS(em::multiple_zeta({}, 20000, 3), std::domain_error);
    CHECK_THROWS_AS(em::multiple_zeta({2, 0}, 20000, 3), std::domain_error);
    CHECK_THROWS_AS(em::multiple_zeta({2}, 100, 3), std::domain_error); // sweep too small
}

TEST_CASE("word-composition dictionary")
{
    auto [c10, s10] = word_to_composition(AdmissibleSeq({1, 0}));
    CHECK(c10.exponents == std::vector<int>{2});
    CHECK(s10 == -1);

    auto [c100, s100] = word_to_composition(AdmissibleSeq({1, 0, 0}));
    CHECK(c100.exponents == std::vector<int>{3});
    CHECK(s100 == -1);

    auto [c110, s110] = word_to_composition(AdmissibleSeq({1, 1, 0}));
    CHECK(c110.exponents == std::vector<int>{2, 1});
    CHECK(s110 == 1);

    auto [c1010, s1010] = word_to_composition(AdmissibleSeq({1, 0, 1, 0}));
    CHECK(c1010.exponents == std::vector<int>{2, 2});
    CHECK(s1010 == 1);

    auto [c1100, s1100] = word_to_composition(AdmissibleSeq({1, 1, 0, 0}));
    CHECK(c1100.exponents == std::vector<int>{3, 1});
    CHECK(s1100 == 1);

    SUBCASE("round trip through both directions")
    {
        for (int n = 2; n <= 7; ++n) {
            for (const auto &a : admissible_seqs(n)) {
                auto [comp, sign] = word_to_composition(a);
                CHECK(comp.convergent());
                CHECK(comp.weight() == n);
                CHECK(composition_to_word(comp) == a);
            }
        }
    }
}

TEST_CASE("series and quadrature routes agree on every word of degree <= 5")
{
    for (int n = 2; n <= 5; ++n) {
        for (const auto &a : admissible_seqs(n)) {
            MzvValue q = mzv_quadrature(a, 1e-9);
            MzvValue s = omega_series(a, 1e-11);
            CHECK(q.method == MzvMethod::quadrature);
            CHECK(s.method == MzvMethod::series);
            CHECK(std::abs(q.value - s.value) <= q.error_bound + s.error_bound);
            CHECK(std::abs(q.value - s.value) <= 1e-9);
        }
    }
}

TEST_CASE("signs follow the dictionary")
{
    // omega(1,0) = -zeta(2), omega(1,1,0) = +zeta(2,1) = +zeta(3)
    MzvValue w10 = omega_series(AdmissibleSeq({1, 0}), 1e-12);
    CHECK(std::abs(w10.value + kZeta2) <= 1e-11);
    MzvValue w110 = omega_series(AdmissibleSeq({1, 1, 0}), 1e-12);
    CHECK(std::abs(w110.value - kZeta3) <= 1e-11);
    MzvValue q110 = mzv_quadrature(AdmissibleSeq({1, 1, 0}), 1e-9);
    CHECK(std::abs(q110.value - kZeta3) <= 1e-9);
}

TEST_CASE("evaluators are deterministic and respect the dictionary")
{
    MzvEvaluator se = make_series_evaluator(1e-10);
    MzvEvaluator qe = make_quadrature_evaluator(1e-8);
    AdmissibleSeq a({1, 0, 1, 0});
    double s1 = se(a), s2 = se(a);
    CHECK(s1 == s2); // bitwise: same config, same value
    CHECK(std::abs(se(a) - qe(a)) <= 1e-8);
    CHECK(std::abs(se(a) - kPi * kPi * kPi * kPi / 120.0) <= 1e-9);
}

TEST_CASE("unreachable tolerance raises a resource error carrying its best attempt")
{
    try {
        mzv_series(Composition(std::vector<int>{2}), 1e-30);
        FAIL("expected ResourceError");
    } catch (const ResourceError &e) {
        CHECK(std::abs(e.best_value() - kZeta2) <= 1e-12);
        CHECK(e.best_bound() > 1e-30);
        CHECK(std::string(e.what()).find("tolerance") != std::string::npos);
    }
}

TEST_CASE("quadrature value floor keeps bounds honest near zero")
{
    MzvValue q = mzv_quadrature(AdmissibleSeq({1, 0}), 1e-8);
    CHECK(q.error_bound > 0.0);
    CHECK(q.error_bound < 1e-8);
}
