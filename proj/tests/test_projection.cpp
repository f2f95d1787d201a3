#include "doctest.h"

#include "kzcbh/cbh.hpp"
#include "kzcbh/projection.hpp"

using namespace kzcbh;

namespace {
Word W(std::initializer_list<int> l) { return Word::from_ints(std::vector<int>(l)); }
} // namespace

TEST_CASE("pbw monomials enumerate multisets of Lyndon words")
{
    // degree 3 over two letters: Lyndon singles 001, 011; pairs {0,01},
    // {01,1}... every multiset of Lyndon words with total length 3
    auto monos = pbw_monomials(2, 3);
    long long singles = 0, total = 0;
    for (const auto &m : monos) {
        if (m.factors.size() == 1)
            ++singles;
        ++total;
        CHECK(m.degree() == 3);
    }
    CHECK(singles == witt_dimension(2, 3));
    // dim of the degree-3 component of the enveloping algebra = 8 words
    CHECK(total == 8);
}

TEST_CASE("symmetrize averages over factor orderings")
{
    PBWMonomial m;
    m.factors = {W({0}), W({1})};
    Series s = symmetrize(m, 2, 2);
    // (xy + yx)/2
    CHECK(s.coefficient(W({0, 1})) == make_rational(1, 2));
    CHECK(s.coefficient(W({1, 0})) == make_rational(1, 2));

    PBWMonomial single;
    single.factors = {W({0, 1})};
    CHECK(symmetrize(single, 2, 2) == bracketing(W({0, 1}), 2, 2));
}

TEST_CASE("projection returns Lie elements unchanged")
{
    LieElement l(2, 5);
    l.set_coordinate(W({0}), make_rational(2, 7));
    l.set_coordinate(W({0, 1, 1}), make_rational(-5, 3));
    l.set_coordinate(W({0, 0, 1, 1, 1}), Rational(4));
    CHECK(lie_project_p(l.expand()) == l);
}

TEST_CASE("projection kills symmetrized products of two or more factors")
{
    Series x = Series::generator(2, 4, 0);
    Series y = Series::generator(2, 4, 1);
    SUBCASE("squares of generators")
    {
        CHECK(lie_project_p(x * x).is_zero());
        CHECK(lie_project_p(x * x * x).is_zero());
    }
    SUBCASE("symmetrized mixed product")
    {
        CHECK(lie_project_p(x * y + y * x).is_zero());
    }
    SUBCASE("product of bracket with itself")
    {
        Series b = x.bracket(y);
        CHECK(lie_project_p(b * b).is_zero());
    }
    SUBCASE("constant term")
    {
        CHECK(lie_project_p(Series::one(2, 4)).is_zero());
    }
}

TEST_CASE("projection is idempotent")
{
    Series mix = Series::one(2, 4);
    mix.add_coefficient(W({0, 1}), make_rational(3, 2));
    mix.add_coefficient(W({0, 1, 1}), Rational(-2));
    mix.add_coefficient(W({0, 0, 1, 1}), make_rational(1, 6));
    LieElement p = lie_project_p(mix);
    CHECK(lie_project_p(p.expand()) == p);
}

TEST_CASE("eulerian projection agrees with the PBW projection")
{
    // across every 2-letter word of length <= 4
    for (int len = 1; len <= 4; ++len) {
        for (std::uint32_t bits = 0; bits < (1u << len); ++bits) {
            std::vector<int> letters;
            for (int i = 0; i < len; ++i)
                letters.push_back((bits >> i) & 1);
            Series s(2, len);
            s.set_coefficient(Word::from_ints(letters), Rational(1));
            CHECK(eulerian_projection(s) == lie_project_p(s).expand());
        }
    }
}

TEST_CASE("eulerian projection of a single word matches the known degree-2 form")
{
    Series s(2, 2);
    s.set_coefficient(W({0, 1}), Rational(1));
    Series e = eulerian_projection(s);
    CHECK(e.coefficient(W({0, 1})) == make_rational(1, 2));
    CHECK(e.coefficient(W({1, 0})) == make_rational(-1, 2));
}

TEST_CASE("projections are linear")
{
    Series a(2, 3), b(2, 3);
    a.set_coefficient(W({0, 1}), Rational(1));
    b.set_coefficient(W({0, 1, 1}), Rational(1));
    Series combo = a * make_rational(2, 3) + b * make_rational(-1, 5);
    LieElement lhs = lie_project_p(combo);
    LieElement rhs = lie_project_p(a) * make_rational(2, 3) + lie_project_p(b) * make_rational(-1, 5);
    CHECK(lhs == rhs);
}

TEST_CASE("multilinear component of the projection matches cbh")
{
    // on multilinear words the projection and the cbh substitution coincide
    Series s(3, 3);
    s.set_coefficient(W({2, 0, 1}), Rational(1));
    CHECK(lie_project_p(s) == cbh_map(s));
}
