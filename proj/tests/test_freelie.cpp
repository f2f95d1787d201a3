#include "doctest.h"

#include "kzcbh/lyndon.hpp"

using namespace kzcbh;

namespace {
Word W(std::initializer_list<int> l) { return Word::from_ints(std::vector<int>(l)); }
} // namespace

TEST_CASE("lyndon predicate on small words")
{
    CHECK(is_lyndon(W({0})));
    CHECK(is_lyndon(W({0, 1})));
    CHECK(is_lyndon(W({0, 0, 1})));
    CHECK(is_lyndon(W({0, 1, 1})));
    CHECK_FALSE(is_lyndon(W({1, 0})));
    CHECK_FALSE(is_lyndon(W({0, 0})));   // periodic
    CHECK_FALSE(is_lyndon(W({0, 1, 0, 1})));
    CHECK_FALSE(is_lyndon(Word::empty()));
}

TEST_CASE("duval enumeration matches direct filtering")
{
    for (int m = 2; m <= 3; ++m) {
        for (int len = 1; len <= 5; ++len) {
            auto listed = lyndon_words(m, len);
            // every listed word is Lyndon, lex sorted, no duplicates
            for (std::size_t i = 0; i < listed.size(); ++i) {
                CHECK(is_lyndon(listed[i]));
                CHECK(listed[i].size() == static_cast<std::size_t>(len));
                if (i)
                    CHECK(listed[i - 1] < listed[i]);
            }
            CHECK(static_cast<long long>(listed.size()) == witt_dimension(m, len));
        }
    }
}

TEST_CASE("witt formula spot values")
{
    CHECK(witt_dimension(2, 1) == 2);
    CHECK(witt_dimension(2, 6) == 9);
    CHECK(witt_dimension(2, 12) == 335);
    CHECK(witt_dimension(3, 4) == 18);
    CHECK(witt_dimension(1, 1) == 1);
    CHECK(witt_dimension(1, 5) == 0); // one generator: nothing above degree 1
}

TEST_CASE("standard factorization splits at the longest Lyndon suffix")
{
    auto [u, v] = standard_factorization(W({0, 0, 1, 1}));
    CHECK(u == W({0}));
    CHECK(v == W({0, 1, 1}));
    auto [u2, v2] = standard_factorization(W({0, 1, 1}));
    CHECK(u2 == W({0, 1}));
    CHECK(v2 == W({1}));
    CHECK_THROWS_AS(standard_factorization(W({0})), std::domain_error);
}

TEST_CASE("bracketing is triangular with unit leading coefficient")
{
    for (const Word &w : lyndon_words_upto(2, 6)) {
        const auto &expansion = bracketing_expansion(w);
        auto it = expansion.begin();
        CHECK(it->first == w);
        CHECK(it->second == Rational(1));
        for (const auto &[v, c] : expansion)
            CHECK(v.size() == w.size());
    }
}

TEST_CASE("bracketing of 01 is the commutator")
{
    Series b = bracketing(W({0, 1}), 2, 3);
    Series x = Series::generator(2, 3, 0);
    Series y = Series::generator(2, 3, 1);
    CHECK(b == x.bracket(y));
    CHECK(bracketing(W({0, 1, 1}), 2, 3) == x.bracket(y).bracket(y));
    CHECK(bracketing(W({0, 0, 1}), 2, 3) == x.bracket(x.bracket(y)));
}

TEST_CASE("expansions of the Lyndon basis are primitive")
{
    for (const Word &w : lyndon_words_upto(2, 5))
        CHECK(bracketing(w, 2, 5).is_primitive());
}

TEST_CASE("lie element expand/extract round trip")
{
    LieElement l(2, 5);
    l.set_coordinate(W({0}), make_rational(3, 2));
    l.set_coordinate(W({0, 1}), make_rational(-7, 5));
    l.set_coordinate(W({0, 0, 1, 1, 1}), make_rational(9, 8));
    CHECK(lie_from_series(l.expand()) == l);
}

TEST_CASE("lie_extract rejects non-Lie input in exact arithmetic")
{
    Series notlie(2, 3);
    notlie.set_coefficient(W({0, 1}), Rational(1)); // xy alone is not antisymmetric
    CHECK_THROWS_AS(lie_from_series(notlie), std::domain_error);

    Series with_const = Series::one(2, 3);
    CHECK_THROWS_AS(lie_from_series(with_const), std::domain_error);
}

TEST_CASE("lie_extract drops float noise up to the tolerance and reports it")
{
    NumericLieElement l(2, 4);
    l.set_coordinate(W({0, 1}), 0.75);
    NumericSeries x = l.expand();
    x.add_coefficient(W({1, 0, 0}), 1e-12);
    auto got = lie_extract(x, 1e-10);
    CHECK(got.element.coordinate(W({0, 1})) == 0.75);
    CHECK(got.dropped == 1e-12);
    CHECK_THROWS_AS(lie_extract(x, 1e-14), std::domain_error);
}

TEST_CASE("only Lyndon coordinates are accepted")
{
    LieElement l(2, 3);
    CHECK_THROWS_AS(l.set_coordinate(W({1, 0}), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(l.set_coordinate(Word::empty(), Rational(1)), std::invalid_argument);
}

TEST_CASE("bracket of expansions stays in the Lie algebra")
{
    LieElement a(2, 4), b(2, 4);
    a.set_coordinate(W({0}), Rational(2));
    a.set_coordinate(W({0, 1}), make_rational(1, 3));
    b.set_coordinate(W({1}), Rational(-1));
    Series br = a.expand().bracket(b.expand());
    LieElement back = lie_from_series(br); // must succeed: brackets are Lie
    CHECK(back.expand() == br);
    // antisymmetry
    CHECK(b.expand().bracket(a.expand()) == -br);
}

TEST_CASE("jacobi identity in the expansion")
{
    Series x = Series::generator(2, 4, 0);
    Series y = Series::generator(2, 4, 1);
    Series z = x.bracket(y);
    Series jac = x.bracket(y.bracket(z)) + y.bracket(z.bracket(x)) + z.bracket(x.bracket(y));
    CHECK(jac.is_zero());
}
