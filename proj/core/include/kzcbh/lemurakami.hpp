#ifndef KZCBH_LEMURAKAMI_HPP
#define KZCBH_LEMURAKAMI_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kzcbh/lyndon.hpp"
#include "kzcbh/series.hpp"

namespace kzcbh {

/* Bit sequence (a_1, ..., a_n) with a_1 = 1 and a_n = 0. These index the
 * iterated-integral coefficients of the associator expansion; length >= 2
 * always. */
class AdmissibleSeq {
  public:
    explicit AdmissibleSeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) { validate(); }

    AdmissibleSeq(std::initializer_list<int> bits)
    {
        for (int b : bits)
            bits_.push_back(static_cast<std::uint8_t>(b));
        validate();
    }

    // Accepts "1,0,0" and "100".
    static AdmissibleSeq parse(const std::string &text);

    const std::vector<std::uint8_t> &bits() const { return bits_; }
    int degree() const { return static_cast<int>(bits_.size()); }

    // Comma-separated form, e.g. "1,0,0".
    std::string str() const;

    // The sequence as a word over {0, 1}.
    Word word() const { return Word(bits_); }

    bool operator==(const AdmissibleSeq &rhs) const { return bits_ == rhs.bits_; }
    bool operator<(const AdmissibleSeq &rhs) const
    {
        if (bits_.size() != rhs.bits_.size())
            return bits_.size() < rhs.bits_.size();
        return bits_ < rhs.bits_;
    }

  private:
    void validate() const
    {
        if (bits_.size() < 2)
            throw std::domain_error("AdmissibleSeq: length must be >= 2");
        for (auto b : bits_)
            if (b > 1)
                throw std::domain_error("AdmissibleSeq: entries must be bits");
        if (bits_.front() != 1)
            throw std::domain_error("AdmissibleSeq: first entry must be 1");
        if (bits_.back() != 0)
            throw std::domain_error("AdmissibleSeq: last entry must be 0");
    }

    std::vector<std::uint8_t> bits_;
};

// All admissible sequences of exactly length n (there are 2^(n-2)),
// lexicographic order.
std::vector<AdmissibleSeq> admissible_seqs(int n);

// Lengths 2..n, shorter first.
std::vector<AdmissibleSeq> admissible_seqs_upto(int n);

/* Signed word expansion of the coefficient family attached to an
 * admissible sequence: the value is the coefficient of each product word
 * in
 *   sum over S in {alpha : a_alpha = 0}, T in {beta : a_beta = 1} of
 *   (-1)^(|S|+|T|) x1^|T| (prod_{alpha not in S or T, alpha decreasing}
 *   x_{a_alpha}) x0^|S|.
 * Every word has length n; coefficients are integers. */
std::map<Word, long long> c_coefficients(const AdmissibleSeq &a);

// Evaluation hook for the iterated-integral symbols; implementations live
// in the numerics layer and are injected to keep this module symbolic.
using MzvEvaluator = std::function<double(const AdmissibleSeq &)>;

/* Formal rational combination of iterated-integral symbols, used as a
 * series coefficient. The empty bit string is the unit symbol and stands
 * for the number 1; all other symbols must be admissible sequences.
 * Supports the module structure over the rationals; symbols are never
 * multiplied with each other. */
class SymbolicCoeff {
  public:
    using Bits = std::vector<std::uint8_t>;

    SymbolicCoeff() = default;

    // Rational multiples of the unit symbol.
    SymbolicCoeff(int v)
    {
        if (v != 0)
            parts_[Bits{}] = Rational(v);
    }
    explicit SymbolicCoeff(const Rational &v)
    {
        if (v != 0)
            parts_[Bits{}] = v;
    }

    static SymbolicCoeff symbol(const AdmissibleSeq &a, const Rational &scale = Rational(1))
    {
        SymbolicCoeff c;
        if (scale != 0)
            c.parts_[a.bits()] = scale;
        return c;
    }

    const std::map<Bits, Rational> &parts() const { return parts_; }
    bool is_zero() const { return parts_.empty(); }

    // Largest degree among contributing symbols; 0 when pure scalar or zero.
    int degree() const
    {
        int d = 0;
        for (const auto &[bits, c] : parts_)
            d = std::max<int>(d, static_cast<int>(bits.size()));
        return d;
    }

    // True when every symbol has the given degree (vacuously true for 0).
    bool homogeneous_of_degree(int d) const
    {
        for (const auto &[bits, c] : parts_)
            if (static_cast<int>(bits.size()) != d)
                return false;
        return true;
    }

    SymbolicCoeff &operator+=(const SymbolicCoeff &rhs)
    {
        for (const auto &[bits, c] : rhs.parts_)
            add_part(bits, c);
        return *this;
    }

    SymbolicCoeff &operator-=(const SymbolicCoeff &rhs)
    {
        for (const auto &[bits, c] : rhs.parts_)
            add_part(bits, Rational(0) - c);
        return *this;
    }

    SymbolicCoeff &operator*=(const Rational &scale)
    {
        if (scale == 0) {
            parts_.clear();
            return *this;
        }
        for (auto &[bits, c] : parts_)
            c *= scale;
        return *this;
    }

    /* Product where at least one side is a scalar (a multiple of the unit
     * symbol). Products of two proper symbols are outside the coefficient
     * module and throw. */
    SymbolicCoeff &operator*=(const SymbolicCoeff &rhs)
    {
        if (rhs.is_scalar()) {
            return *this *= rhs.scalar_value();
        }
        if (is_scalar()) {
            Rational s = scalar_value();
            *this = rhs;
            return *this *= s;
        }
        throw std::domain_error("SymbolicCoeff: product of two non-scalar symbol combinations");
    }

    friend SymbolicCoeff operator+(SymbolicCoeff lhs, const SymbolicCoeff &rhs) { return lhs += rhs; }
    friend SymbolicCoeff operator-(SymbolicCoeff lhs, const SymbolicCoeff &rhs) { return lhs -= rhs; }
    friend SymbolicCoeff operator*(SymbolicCoeff lhs, const Rational &rhs) { return lhs *= rhs; }
    friend SymbolicCoeff operator*(const Rational &lhs, SymbolicCoeff rhs) { return rhs *= lhs; }
    friend SymbolicCoeff operator*(SymbolicCoeff lhs, const SymbolicCoeff &rhs) { return lhs *= rhs; }

    bool operator==(const SymbolicCoeff &rhs) const { return parts_ == rhs.parts_; }
    bool operator!=(const SymbolicCoeff &rhs) const { return parts_ != rhs.parts_; }

    bool is_scalar() const
    {
        return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first.empty());
    }

    Rational scalar_value() const
    {
        if (parts_.empty())
            return Rational(0);
        if (!is_scalar())
            throw std::domain_error("SymbolicCoeff: not a scalar");
        return parts_.begin()->second;
    }

    std::string str() const;

    double evaluate(const MzvEvaluator &eval, std::map<Bits, double> &memo) const;

  private:
    void add_part(const Bits &bits, const Rational &c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = parts_.try_emplace(bits, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                parts_.erase(it);
        }
    }

    std::map<Bits, Rational> parts_;
};

template <> struct CoeffTraits<SymbolicCoeff> {
    static constexpr bool exact = true;
    static double magnitude(const SymbolicCoeff &c)
    {
        double m = 0.0;
        for (const auto &[bits, r] : c.parts())
            m += std::fabs(to_double(r));
        return m;
    }
};

/* Series over the two-letter alphabet with symbol-valued coefficients, and
 * its Lie counterpart in Lyndon coordinates. In the expansion and its log,
 * every symbol attached to a word has degree equal to the word's length
 * (the unit symbol sits on the empty word only); see
 * symbol_degrees_consistent. */
using SymbolicSeries = BasicSeries<SymbolicCoeff>;
using SymbolicLieSeries = BasicLieElement<SymbolicCoeff>;

bool symbol_degrees_consistent(const SymbolicSeries &x);
bool symbol_degrees_consistent(const SymbolicLieSeries &x);

// Substitutes numeric values for the symbols; evaluation failures carry the
// offending symbol in the message. Values are memoised per distinct symbol
// for the duration of one call.
NumericSeries evaluate(const SymbolicSeries &x, const MzvEvaluator &eval);
NumericLieElement evaluate(const SymbolicLieSeries &x, const MzvEvaluator &eval);

/* The associator as a symbolic series, truncated at the given degree:
 * 1 + sum over admissible a of (symbol a) * (signed word expansion of a).
 * Degree-d terms require admissible sequences of length d, so the degree-1
 * component always vanishes. */
SymbolicSeries phi_symbolic(int degree);

/* Its logarithm: each admissible sequence's word expansion is pushed
 * through the multilinear CBH substitution and the Lyndon coordinates are
 * collected per symbol. Coincides with cbh_map applied to phi_symbolic
 * with symbol-valued arithmetic. */
SymbolicLieSeries log_phi_symbolic(int degree);

// Numeric instantiations under an evaluator for the symbols.
NumericSeries phi_numeric(int degree, const MzvEvaluator &eval);
NumericLieElement log_phi_numeric(int degree, const MzvEvaluator &eval);

} // namespace kzcbh

#endif
