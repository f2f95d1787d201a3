#ifndef KZCBH_SERIES_HPP
#define KZCBH_SERIES_HPP

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kzcbh/rational.hpp"
#include "kzcbh/word.hpp"

namespace kzcbh {

template <class C> struct CoeffTraits;

template <> struct CoeffTraits<Rational> {
    static constexpr bool exact = true;
    static double magnitude(const Rational &c) { return std::fabs(to_double(c)); }
};

template <> struct CoeffTraits<double> {
    static constexpr bool exact = false;
    static double magnitude(double c) { return std::fabs(c); }
};

template <class C> class BasicTensorSeries;

/* An element of the free associative algebra on `alphabet` generators,
 * truncated at total degree `degree`. Terms are stored sparsely, keyed by
 * Word in graded-lex order; zero coefficients are never stored.
 *
 * Multiplication is concatenation of words; terms whose combined length
 * exceeds the truncation degree are discarded. All shape-changing binary
 * operations require both operands to share alphabet and degree.
 */
template <class C> class BasicSeries {
  public:
    using Coeff = C;

    BasicSeries(int alphabet, int degree) : alphabet_(alphabet), degree_(degree)
    {
        if (alphabet < 1)
            throw std::invalid_argument("BasicSeries: alphabet must be >= 1");
        if (degree < 0)
            throw std::invalid_argument("BasicSeries: degree must be >= 0");
    }

    static BasicSeries zero(int alphabet, int degree) { return BasicSeries(alphabet, degree); }

    static BasicSeries one(int alphabet, int degree)
    {
        BasicSeries s(alphabet, degree);
        s.terms_[Word::empty()] = C(1);
        return s;
    }

    static BasicSeries scalar(int alphabet, int degree, const C &value)
    {
        BasicSeries s(alphabet, degree);
        s.set_coefficient(Word::empty(), value);
        return s;
    }

    static BasicSeries generator(int alphabet, int degree, int letter)
    {
        BasicSeries s(alphabet, degree);
        if (letter < 0 || letter >= alphabet)
            throw std::invalid_argument("BasicSeries::generator: letter " + std::to_string(letter) +
                                        " outside alphabet of size " + std::to_string(alphabet));
        if (degree >= 1)
            s.terms_[Word::single(letter)] = C(1);
        return s;
    }

    int alphabet() const { return alphabet_; }
    int degree() const { return degree_; }
    const std::map<Word, C> &terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    C coefficient(const Word &w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? C(0) : it->second;
    }

    C constant_term() const { return coefficient(Word::empty()); }

    void set_coefficient(const Word &w, const C &value)
    {
        check_word(w);
        if (value == C(0))
            terms_.erase(w);
        else
            terms_[w] = value;
    }

    void add_coefficient(const Word &w, const C &value)
    {
        check_word(w);
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            if (value != C(0))
                terms_[w] = value;
        } else {
            it->second += value;
            if (it->second == C(0))
                terms_.erase(it);
        }
    }

    BasicSeries &operator+=(const BasicSeries &rhs)
    {
        require_same_shape(rhs, "+");
        for (const auto &[w, c] : rhs.terms_)
            add_coefficient(w, c);
        return *this;
    }

    BasicSeries &operator-=(const BasicSeries &rhs)
    {
        require_same_shape(rhs, "-");
        for (const auto &[w, c] : rhs.terms_)
            add_coefficient(w, C(0) - c);
        return *this;
    }

    BasicSeries &operator*=(const C &scalar)
    {
        if (scalar == C(0)) {
            terms_.clear();
            return *this;
        }
        for (auto &[w, c] : terms_)
            c *= scalar;
        return *this;
    }

    BasicSeries &scalar_divide(long long k)
    {
        if (k == 0)
            throw std::domain_error("BasicSeries: division by zero");
        for (auto &[w, c] : terms_)
            c /= C(k);
        return *this;
    }

    friend BasicSeries operator+(BasicSeries lhs, const BasicSeries &rhs) { return lhs += rhs; }
    friend BasicSeries operator-(BasicSeries lhs, const BasicSeries &rhs) { return lhs -= rhs; }
    friend BasicSeries operator*(BasicSeries lhs, const C &scalar) { return lhs *= scalar; }
    friend BasicSeries operator*(const C &scalar, BasicSeries rhs) { return rhs *= scalar; }

    BasicSeries operator-() const
    {
        BasicSeries r(*this);
        for (auto &[w, c] : r.terms_)
            c = C(0) - c;
        return r;
    }

    friend BasicSeries operator*(const BasicSeries &lhs, const BasicSeries &rhs)
    {
        lhs.require_same_shape(rhs, "*");
        BasicSeries out(lhs.alphabet_, lhs.degree_);
        for (const auto &[u, cu] : lhs.terms_) {
            for (const auto &[v, cv] : rhs.terms_) {
                if (u.size() + v.size() > static_cast<std::size_t>(lhs.degree_))
                    continue;
                out.add_coefficient(u.concat(v), cu * cv);
            }
        }
        return out;
    }

    bool operator==(const BasicSeries &rhs) const
    {
        return alphabet_ == rhs.alphabet_ && degree_ == rhs.degree_ && terms_ == rhs.terms_;
    }
    bool operator!=(const BasicSeries &rhs) const { return !(*this == rhs); }

    // Commutator [this, rhs].
    BasicSeries bracket(const BasicSeries &rhs) const
    {
        return (*this) * rhs - rhs * (*this);
    }

    // Copy truncated to a (weakly smaller or larger) degree bound.
    BasicSeries restricted(int new_degree) const
    {
        BasicSeries out(alphabet_, new_degree);
        for (const auto &[w, c] : terms_)
            if (w.size() <= static_cast<std::size_t>(new_degree))
                out.terms_[w] = c;
        return out;
    }

    // Projection onto the span of words with the given letter multidegree.
    BasicSeries multidegree_component(const std::vector<int> &multidegree) const
    {
        if (static_cast<int>(multidegree.size()) != alphabet_)
            throw std::invalid_argument("multidegree_component: expected " + std::to_string(alphabet_) +
                                        " letter counts, got " + std::to_string(multidegree.size()));
        BasicSeries out(alphabet_, degree_);
        for (const auto &[w, c] : terms_)
            if (w.letter_counts(alphabet_) == multidegree)
                out.terms_[w] = c;
        return out;
    }

    // Sum of terms of the given total degree.
    BasicSeries homogeneous_component(int d) const
    {
        BasicSeries out(alphabet_, degree_);
        for (const auto &[w, c] : terms_)
            if (w.size() == static_cast<std::size_t>(d))
                out.terms_[w] = c;
        return out;
    }

    double max_abs() const
    {
        double m = 0.0;
        for (const auto &[w, c] : terms_)
            m = std::max(m, CoeffTraits<C>::magnitude(c));
        return m;
    }

    /* Unshuffle coproduct: the algebra morphism with every generator
     * primitive. On a word it splits positions into two order-preserving
     * subwords in all 2^len ways. */
    BasicTensorSeries<C> coproduct() const;

    /* Group-likeness: constant term 1 and coproduct(X) == X (x) X, compared
     * coefficient by coefficient. Exact for rational coefficients; for
     * floating point use grouplike_residual with a tolerance. */
    bool is_grouplike() const;
    double grouplike_residual() const;

    /* Primitivity: coproduct(X) == X (x) 1 + 1 (x) X. */
    bool is_primitive() const;
    double primitivity_residual() const;

    void require_same_shape(const BasicSeries &rhs, const char *op) const
    {
        if (alphabet_ != rhs.alphabet_ || degree_ != rhs.degree_)
            throw std::invalid_argument(std::string("BasicSeries: operand shapes differ for '") + op +
                                        "': (" + std::to_string(alphabet_) + "," + std::to_string(degree_) +
                                        ") vs (" + std::to_string(rhs.alphabet_) + "," +
                                        std::to_string(rhs.degree_) + ")");
    }

  private:
    void check_word(const Word &w) const
    {
        if (w.size() > static_cast<std::size_t>(degree_))
            throw std::invalid_argument("BasicSeries: word of length " + std::to_string(w.size()) +
                                        " exceeds truncation degree " + std::to_string(degree_));
        if (w.max_letter() >= alphabet_)
            throw std::invalid_argument("BasicSeries: word " + w.str() + " outside alphabet of size " +
                                        std::to_string(alphabet_));
    }

    int alphabet_;
    int degree_;
    std::map<Word, C> terms_;
};

/* Element of the tensor square of the truncated algebra. The truncation is
 * by combined degree |u| + |v| <= degree, which makes the coproduct an
 * algebra morphism on the nose. */
template <class C> class BasicTensorSeries {
  public:
    using Key = std::pair<Word, Word>;

    BasicTensorSeries(int alphabet, int degree) : alphabet_(alphabet), degree_(degree) {}

    int alphabet() const { return alphabet_; }
    int degree() const { return degree_; }
    const std::map<Key, C> &terms() const { return terms_; }

    C coefficient(const Word &u, const Word &v) const
    {
        auto it = terms_.find({u, v});
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_coefficient(const Word &u, const Word &v, const C &value)
    {
        if (u.size() + v.size() > static_cast<std::size_t>(degree_))
            throw std::invalid_argument("BasicTensorSeries: combined degree exceeds truncation");
        Key k{u, v};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (value != C(0))
                terms_[k] = value;
        } else {
            it->second += value;
            if (it->second == C(0))
                terms_.erase(it);
        }
    }

    BasicTensorSeries &operator+=(const BasicTensorSeries &rhs)
    {
        for (const auto &[k, c] : rhs.terms_)
            add_coefficient(k.first, k.second, c);
        return *this;
    }

    BasicTensorSeries &operator-=(const BasicTensorSeries &rhs)
    {
        for (const auto &[k, c] : rhs.terms_)
            add_coefficient(k.first, k.second, C(0) - c);
        return *this;
    }

    friend BasicTensorSeries operator+(BasicTensorSeries lhs, const BasicTensorSeries &rhs)
    {
        return lhs += rhs;
    }
    friend BasicTensorSeries operator-(BasicTensorSeries lhs, const BasicTensorSeries &rhs)
    {
        return lhs -= rhs;
    }

    friend BasicTensorSeries operator*(const BasicTensorSeries &lhs, const BasicTensorSeries &rhs)
    {
        BasicTensorSeries out(lhs.alphabet_, lhs.degree_);
        for (const auto &[ku, cu] : lhs.terms_) {
            for (const auto &[kv, cv] : rhs.terms_) {
                std::size_t total =
                    ku.first.size() + kv.first.size() + ku.second.size() + kv.second.size();
                if (total > static_cast<std::size_t>(lhs.degree_))
                    continue;
                out.add_coefficient(ku.first.concat(kv.first), ku.second.concat(kv.second), cu * cv);
            }
        }
        return out;
    }

    bool operator==(const BasicTensorSeries &rhs) const
    {
        return alphabet_ == rhs.alphabet_ && degree_ == rhs.degree_ && terms_ == rhs.terms_;
    }
    bool operator!=(const BasicTensorSeries &rhs) const { return !(*this == rhs); }

    double max_abs() const
    {
        double m = 0.0;
        for (const auto &[k, c] : terms_)
            m = std::max(m, CoeffTraits<C>::magnitude(c));
        return m;
    }

    // Outer product X (x) Y.
    static BasicTensorSeries outer(const BasicSeries<C> &x, const BasicSeries<C> &y)
    {
        x.require_same_shape(y, "(x)");
        BasicTensorSeries out(x.alphabet(), x.degree());
        for (const auto &[u, cu] : x.terms()) {
            for (const auto &[v, cv] : y.terms()) {
                if (u.size() + v.size() > static_cast<std::size_t>(x.degree()))
                    continue;
                out.add_coefficient(u, v, cu * cv);
            }
        }
        return out;
    }

  private:
    int alphabet_;
    int degree_;
    std::map<Key, C> terms_;
};

template <class C> BasicTensorSeries<C> BasicSeries<C>::coproduct() const
{
    BasicTensorSeries<C> out(alphabet_, degree_);
    for (const auto &[w, c] : terms_) {
        const std::size_t n = w.size();
        if (n > 20)
            throw std::invalid_argument("coproduct: word too long for subset expansion");
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            Word left = w.subword_mask(mask);
            Word right = w.subword_mask(~mask);
            out.add_coefficient(left, right, c);
        }
    }
    return out;
}

template <class C> bool BasicSeries<C>::is_grouplike() const
{
    if (constant_term() != C(1))
        return false;
    return coproduct() == BasicTensorSeries<C>::outer(*this, *this);
}

template <class C> double BasicSeries<C>::grouplike_residual() const
{
    BasicTensorSeries<C> defect = coproduct() - BasicTensorSeries<C>::outer(*this, *this);
    double r = defect.max_abs();
    r = std::max(r, CoeffTraits<C>::magnitude(constant_term() - C(1)));
    return r;
}

template <class C> bool BasicSeries<C>::is_primitive() const
{
    if (constant_term() != C(0))
        return false;
    BasicTensorSeries<C> expected = BasicTensorSeries<C>::outer(*this, one(alphabet_, degree_)) +
                                    BasicTensorSeries<C>::outer(one(alphabet_, degree_), *this);
    return coproduct() == expected;
}

template <class C> double BasicSeries<C>::primitivity_residual() const
{
    BasicTensorSeries<C> defect = coproduct() -
                                  BasicTensorSeries<C>::outer(*this, one(alphabet_, degree_)) -
                                  BasicTensorSeries<C>::outer(one(alphabet_, degree_), *this);
    return defect.max_abs();
}

/* exp of a series. With exact coefficients the constant term must vanish;
 * with floating point a constant a is factored out as e^a. The sum
 * terminates because the argument's lowest degree is >= 1. */
template <class C> BasicSeries<C> exp(const BasicSeries<C> &x)
{
    C c0 = x.constant_term();
    BasicSeries<C> body = x;
    double scale = 1.0;
    if constexpr (CoeffTraits<C>::exact) {
        if (c0 != C(0))
            throw std::domain_error("exp: nonzero constant term " + kzcbh::to_string(c0));
    } else {
        body.set_coefficient(Word::empty(), C(0));
        scale = std::exp(c0);
    }
    BasicSeries<C> result = BasicSeries<C>::one(x.alphabet(), x.degree());
    BasicSeries<C> term = result;
    for (int k = 1; k <= x.degree(); ++k) {
        term = term * body;
        term.scalar_divide(k);
        if (term.is_zero())
            break;
        result += term;
    }
    if constexpr (!CoeffTraits<C>::exact) {
        if (scale != 1.0)
            result *= C(scale);
    }
    return result;
}

/* log of a series. With exact coefficients the constant term must be 1;
 * with floating point a positive constant is factored out and contributes
 * ln(c) to the empty word. */
template <class C> BasicSeries<C> log(const BasicSeries<C> &x)
{
    C c0 = x.constant_term();
    BasicSeries<C> body = x;
    double shift = 0.0;
    if constexpr (CoeffTraits<C>::exact) {
        if (c0 != C(1))
            throw std::domain_error("log: constant term " + kzcbh::to_string(c0) + " != 1");
    } else {
        if (!(c0 > 0))
            throw std::domain_error("log: constant term must be positive");
        if (c0 != 1.0) {
            body *= C(1.0 / c0);
            shift = std::log(c0);
        }
    }
    body.add_coefficient(Word::empty(), C(-1));
    BasicSeries<C> result(x.alphabet(), x.degree());
    BasicSeries<C> pow = BasicSeries<C>::one(x.alphabet(), x.degree());
    for (int k = 1; k <= x.degree(); ++k) {
        pow = pow * body;
        if (pow.is_zero())
            break;
        BasicSeries<C> term = pow;
        term.scalar_divide(k % 2 == 1 ? k : -k);
        result += term;
    }
    if constexpr (!CoeffTraits<C>::exact) {
        if (shift != 0.0)
            result.add_coefficient(Word::empty(), C(shift));
    }
    return result;
}

using Series = BasicSeries<Rational>;
using NumericSeries = BasicSeries<double>;
using TensorSeries = BasicTensorSeries<Rational>;
using NumericTensorSeries = BasicTensorSeries<double>;

inline NumericSeries to_numeric(const Series &x)
{
    NumericSeries out(x.alphabet(), x.degree());
    for (const auto &[w, c] : x.terms())
        out.set_coefficient(w, to_double(c));
    return out;
}

} // namespace kzcbh

#endif
