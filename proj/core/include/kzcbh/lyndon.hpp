#ifndef KZCBH_LYNDON_HPP
#define KZCBH_LYNDON_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kzcbh/series.hpp"
#include "kzcbh/word.hpp"

namespace kzcbh {

// A word is Lyndon when it is nonempty and strictly lex-smaller than every
// proper suffix.
bool is_lyndon(const Word &w);

// All Lyndon words of exactly the given length, lex order. Duval's
// generation.
std::vector<Word> lyndon_words(int alphabet, int length);

// All Lyndon words of length 1..max_length, graded-lex order.
std::vector<Word> lyndon_words_upto(int alphabet, int max_length);

// Dimension of the degree-d component of the free Lie algebra on n
// generators: (1/d) sum_{e | d} mu(e) n^{d/e}.
long long witt_dimension(int alphabet, int d);

// Standard factorization w = u v of a Lyndon word of length >= 2: v is the
// longest proper suffix that is itself Lyndon; u is then Lyndon as well.
std::pair<Word, Word> standard_factorization(const Word &w);

/* Recursive bracketing of a Lyndon word: a single letter maps to its
 * generator, and w = uv maps to [b(u), b(v)] via the standard factorization.
 * The expansion is triangular: b(w) = w + (lex-greater words of the same
 * multidegree), with leading coefficient exactly 1. */
Series bracketing(const Word &lyndon, int alphabet, int degree);

// Raw homogeneous expansion of the bracketing, independent of any series
// shape. Cached per word.
const std::map<Word, Rational> &bracketing_expansion(const Word &lyndon);

/* Element of the free Lie algebra, truncated at total degree `degree`,
 * stored as coordinates on the Lyndon basis: the element is
 * sum_w coords[w] * bracketing(w). Keys are Lyndon words. */
template <class C> class BasicLieElement {
  public:
    BasicLieElement(int alphabet, int degree) : alphabet_(alphabet), degree_(degree)
    {
        if (alphabet < 1)
            throw std::invalid_argument("BasicLieElement: alphabet must be >= 1");
        if (degree < 0)
            throw std::invalid_argument("BasicLieElement: degree must be >= 0");
    }

    static BasicLieElement zero(int alphabet, int degree) { return BasicLieElement(alphabet, degree); }

    int alphabet() const { return alphabet_; }
    int degree() const { return degree_; }
    const std::map<Word, C> &coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }
    std::size_t support_size() const { return coords_.size(); }

    C coordinate(const Word &w) const
    {
        auto it = coords_.find(w);
        return it == coords_.end() ? C(0) : it->second;
    }

    void set_coordinate(const Word &w, const C &value)
    {
        check_word(w);
        if (value == C(0))
            coords_.erase(w);
        else
            coords_[w] = value;
    }

    void add_coordinate(const Word &w, const C &value)
    {
        check_word(w);
        auto it = coords_.find(w);
        if (it == coords_.end()) {
            if (value != C(0))
                coords_[w] = value;
        } else {
            it->second += value;
            if (it->second == C(0))
                coords_.erase(it);
        }
    }

    BasicLieElement &operator+=(const BasicLieElement &rhs)
    {
        require_same_shape(rhs);
        for (const auto &[w, c] : rhs.coords_)
            add_coordinate(w, c);
        return *this;
    }

    BasicLieElement &operator-=(const BasicLieElement &rhs)
    {
        require_same_shape(rhs);
        for (const auto &[w, c] : rhs.coords_)
            add_coordinate(w, C(0) - c);
        return *this;
    }

    BasicLieElement &operator*=(const C &scalar)
    {
        if (scalar == C(0)) {
            coords_.clear();
            return *this;
        }
        for (auto &[w, c] : coords_)
            c *= scalar;
        return *this;
    }

    friend BasicLieElement operator+(BasicLieElement lhs, const BasicLieElement &rhs) { return lhs += rhs; }
    friend BasicLieElement operator-(BasicLieElement lhs, const BasicLieElement &rhs) { return lhs -= rhs; }
    friend BasicLieElement operator*(BasicLieElement lhs, const C &scalar) { return lhs *= scalar; }
    friend BasicLieElement operator*(const C &scalar, BasicLieElement rhs) { return rhs *= scalar; }

    bool operator==(const BasicLieElement &rhs) const
    {
        return alphabet_ == rhs.alphabet_ && degree_ == rhs.degree_ && coords_ == rhs.coords_;
    }
    bool operator!=(const BasicLieElement &rhs) const { return !(*this == rhs); }

    // Expansion into the enveloping algebra.
    BasicSeries<C> expand() const
    {
        BasicSeries<C> out(alphabet_, degree_);
        for (const auto &[w, c] : coords_) {
            for (const auto &[v, b] : bracketing_expansion(w)) {
                if constexpr (CoeffTraits<C>::exact)
                    out.add_coefficient(v, c * b);
                else
                    out.add_coefficient(v, c * to_double(b));
            }
        }
        return out;
    }

    double max_abs() const
    {
        double m = 0.0;
        for (const auto &[w, c] : coords_)
            m = std::max(m, CoeffTraits<C>::magnitude(c));
        return m;
    }

    void require_same_shape(const BasicLieElement &rhs) const
    {
        if (alphabet_ != rhs.alphabet_ || degree_ != rhs.degree_)
            throw std::invalid_argument("BasicLieElement: operand shapes differ");
    }

  private:
    void check_word(const Word &w) const
    {
        if (w.size() > static_cast<std::size_t>(degree_))
            throw std::invalid_argument("BasicLieElement: word exceeds truncation degree");
        if (w.max_letter() >= alphabet_)
            throw std::invalid_argument("BasicLieElement: word outside alphabet");
        if (!is_lyndon(w))
            throw std::invalid_argument("BasicLieElement: " + w.str() + " is not a Lyndon word");
    }

    int alphabet_;
    int degree_;
    std::map<Word, C> coords_;
};

using LieElement = BasicLieElement<Rational>;
using NumericLieElement = BasicLieElement<double>;

template <class C> struct LieExtraction {
    BasicLieElement<C> element;
    // Largest magnitude discarded as numerical noise (always 0 in exact
    // arithmetic).
    double dropped = 0.0;
};

/* Writes a series in Lyndon coordinates by triangular elimination: the
 * graded-lex least word of a homogeneous Lie element is Lyndon and the
 * bracketing reproduces it with coefficient 1, so peeling least terms
 * either consumes the series or exposes a non-Lie obstruction.
 *
 * In exact arithmetic a leftover non-Lyndon leading term means the input is
 * not a Lie element and throws. With floating point, leading terms of
 * magnitude <= drop_tol are discarded as noise (reported in `dropped`);
 * anything larger still throws. */
template <class C>
LieExtraction<C> lie_extract(const BasicSeries<C> &x, double drop_tol = 0.0)
{
    LieExtraction<C> out{BasicLieElement<C>(x.alphabet(), x.degree()), 0.0};
    BasicSeries<C> rest = x;
    while (!rest.is_zero()) {
        const auto &[w, c] = *rest.terms().begin();
        if (w.is_empty() || !is_lyndon(w)) {
            double mag = CoeffTraits<C>::magnitude(c);
            if constexpr (!CoeffTraits<C>::exact) {
                if (mag <= drop_tol) {
                    out.dropped = std::max(out.dropped, mag);
                    rest.set_coefficient(w, C(0));
                    continue;
                }
            }
            throw std::domain_error("lie_extract: not a Lie element, leading term " + w.str() +
                                    " is not Lyndon");
        }
        C coeff = c;
        out.element.add_coordinate(w, coeff);
        for (const auto &[v, b] : bracketing_expansion(w)) {
            if constexpr (CoeffTraits<C>::exact)
                rest.add_coefficient(v, C(0) - coeff * b);
            else
                rest.add_coefficient(v, -coeff * to_double(b));
        }
    }
    return out;
}

// Exact-route convenience: extraction that must consume the series.
template <class C> BasicLieElement<C> lie_from_series(const BasicSeries<C> &x)
{
    return lie_extract(x, 0.0).element;
}

} // namespace kzcbh

#endif
