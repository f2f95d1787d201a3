#include "doctest.h"

#include "kzcbh/cbh.hpp"

using namespace kzcbh;

namespace {

Word W(std::initializer_list<int> l) { return Word::from_ints(std::vector<int>(l)); }

long long binom(int n, int k)
{
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - i + 1) / i;
    return r;
}

} // namespace

TEST_CASE("multilinear expansion coefficients follow the descent formula")
{
    /* Classical closed form via the first Eulerian idempotent: the word
     * y_{s_1} ... y_{s_n} (a permutation of the generators) carries
     * (-1)^d / (n * C(n-1, d)) where d counts its descents. */
    for (int n = 2; n <= 5; ++n) {
        const Series &s = cbh_series(n);
        long long fact = 1;
        for (int i = 2; i <= n; ++i)
            fact *= i;
        CHECK(s.support_size() == static_cast<std::size_t>(fact));
        for (const auto &[w, c] : s.terms()) {
            int d = 0;
            for (std::size_t i = 0; i + 1 < w.size(); ++i)
                if (w.letter(i) > w.letter(i + 1))
                    ++d;
            CHECK(c == make_rational((d % 2) ? -1 : 1,
                                     static_cast<long long>(n) * binom(n - 1, d)));
        }
    }
}

TEST_CASE("arity 1 and 2 are the generator and half the commutator")
{
    CHECK(cbh_series(1) == Series::generator(1, 1, 0));
    Series two = cbh_series(2);
    CHECK(two.coefficient(W({0, 1})) == make_rational(1, 2));
    CHECK(two.coefficient(W({1, 0})) == make_rational(-1, 2));
    CHECK(cbh_element(2).coordinate(W({0, 1})) == make_rational(1, 2));
}

TEST_CASE("the multilinear expansion is a Lie element")
{
    for (int n = 2; n <= 5; ++n) {
        CHECK(cbh_series(n).is_primitive());
        CHECK(cbh_element(n).expand() == cbh_series(n));
    }
}

TEST_CASE("expansion matches the log of the product of exponentials")
{
    // independent route: log(e^{y_0} e^{y_1} e^{y_2}) restricted to the
    // multidegree-(1,1,1) component
    const int n = 3;
    Series prod = Series::one(n, n);
    for (int j = 0; j < n; ++j)
        prod = prod * exp(Series::generator(n, n, j));
    Series expect = log(prod).multidegree_component(std::vector<int>(n, 1));
    CHECK(expect == cbh_series(n));
}

TEST_CASE("arity cap is enforced")
{
    CHECK_THROWS_AS(cbh_series(cbh_max_arity + 1), std::invalid_argument);
    Series s(2, 9);
    s.set_coefficient(Word::from_ints(std::vector<int>(9, 0)), Rational(1));
    CHECK_THROWS_AS(cbh_map(s), std::invalid_argument);
}

TEST_CASE("word substitution collapses repeated letters")
{
    // cbh on the square of one letter vanishes: CBH_2(x, x) = 0
    CHECK(cbh_word(W({0, 0}), 2, 2).is_zero());
    // CBH_3(x, y, x) reproduces the substituted arity-3 element
    LieElement direct = cbh_word(W({0, 1, 0}), 2, 3);
    Series acc(2, 3);
    for (const auto &[v, b] : cbh_series(3).terms()) {
        std::vector<int> letters;
        for (std::size_t i = 0; i < v.size(); ++i)
            letters.push_back(v.letter(i) == 1 ? 1 : 0); // y_0, y_2 -> x0 ; y_1 -> x1
        acc.add_coefficient(Word::from_ints(letters), b);
    }
    CHECK(direct == lie_from_series(acc));
}

TEST_CASE("cbh of exp round trip on a dense rational Lie element")
{
    LieElement l(2, 6);
    l.set_coordinate(W({0}), make_rational(1, 2));
    l.set_coordinate(W({1}), make_rational(-2, 3));
    l.set_coordinate(W({0, 1}), make_rational(3, 5));
    l.set_coordinate(W({0, 0, 1}), make_rational(-1, 7));
    l.set_coordinate(W({0, 1, 1}), Rational(2));
    l.set_coordinate(W({0, 0, 0, 1, 0, 1}), make_rational(9, 4));
    CHECK(cbh_map(exp(l.expand())) == l);
}

TEST_CASE("cbh kills constants and symmetrized squares")
{
    Series x = Series::generator(2, 4, 0);
    Series y = Series::generator(2, 4, 1);
    CHECK(cbh_map(Series::one(2, 4)).is_zero());
    CHECK(cbh_map(x * x).is_zero());
    CHECK(cbh_map(x * y + y * x).is_zero());
}

TEST_CASE("log_via_cbh equals the series log on group-like input")
{
    LieElement l(3, 4);
    l.set_coordinate(W({0}), Rational(1));
    l.set_coordinate(W({1, 2}), make_rational(-4, 9));
    l.set_coordinate(W({0, 2, 2}), make_rational(5, 6));
    Series g = exp(l.expand());
    CHECK(log_via_cbh(g) == l);
    CHECK(log_via_cbh(g).expand() == log(g));

    SUBCASE("group-likeness is checked")
    {
        Series bad = g;
        bad.add_coefficient(W({1, 1}), make_rational(1, 13));
        CHECK_THROWS_AS(log_via_cbh(bad), std::domain_error);
    }
}

TEST_CASE("float cbh path tolerates rounding noise")
{
    NumericLieElement l(2, 5);
    l.set_coordinate(W({0}), 0.3);
    l.set_coordinate(W({0, 1}), -1.25);
    l.set_coordinate(W({0, 1, 1, 1}), 0.04);
    NumericSeries g = exp(l.expand());
    NumericLieElement back = log_via_cbh(g, 1e-10, 1e-12);
    NumericLieElement diff = back - l;
    CHECK(diff.max_abs() <= 1e-12);
}

TEST_CASE("first-occurrence pattern collapse")
{
    auto [pattern, table] = detail::word_pattern(W({2, 0, 2, 1}));
    CHECK(pattern == std::vector<std::uint8_t>{0, 1, 0, 2});
    CHECK(table == std::vector<int>{2, 0, 1});
}
