#include "kzcbh/lemurakami.hpp"

#include <algorithm>

#include "kzcbh/cbh.hpp"
#include "kzcbh/errors.hpp"

namespace kzcbh {

AdmissibleSeq AdmissibleSeq::parse(const std::string &text)
{
    std::vector<std::uint8_t> bits;
    for (char c : text) {
        if (c == ',' || c == ' ')
            continue;
        if (c == '0')
            bits.push_back(0);
        else if (c == '1')
            bits.push_back(1);
        else
            throw std::domain_error("AdmissibleSeq::parse: invalid character in \"" + text + "\"");
    }
    return AdmissibleSeq(std::move(bits));
}

std::string AdmissibleSeq::str() const
{
    std::string s;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (i)
            s += ',';
        s += char('0' + bits_[i]);
    }
    return s;
}

std::vector<AdmissibleSeq> admissible_seqs(int n)
{
    if (n < 2)
        throw std::invalid_argument("admissible_seqs: length must be >= 2");
    if (n > 30)
        throw std::invalid_argument("admissible_seqs: length too large");
    std::vector<AdmissibleSeq> out;
    const std::uint32_t inner = n - 2;
    for (std::uint32_t m = 0; m < (std::uint32_t(1) << inner); ++m) {
        std::vector<std::uint8_t> bits(n, 0);
        bits[0] = 1;
        for (std::uint32_t i = 0; i < inner; ++i)
            bits[i + 1] = (m >> (inner - 1 - i)) & 1;
        out.emplace_back(std::move(bits));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AdmissibleSeq> admissible_seqs_upto(int n)
{
    std::vector<AdmissibleSeq> out;
    for (int k = 2; k <= n; ++k) {
        auto block = admissible_seqs(k);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::map<Word, long long> c_coefficients(const AdmissibleSeq &a)
{
    const int n = a.degree();
    if (n > 20)
        throw std::invalid_argument("c_coefficients: sequence too long for subset expansion");

    std::vector<int> zeros, ones; // positions alpha (1-based index into a)
    for (int alpha = 1; alpha <= n; ++alpha) {
        if (a.bits()[alpha - 1] == 0)
            zeros.push_back(alpha);
        else
            ones.push_back(alpha);
    }

    std::map<Word, long long> out;
    for (std::uint32_t smask = 0; smask < (std::uint32_t(1) << zeros.size()); ++smask) {
        for (std::uint32_t tmask = 0; tmask < (std::uint32_t(1) << ones.size()); ++tmask) {
            std::vector<bool> removed(n + 1, false);
            int scard = 0, tcard = 0;
            for (std::size_t i = 0; i < zeros.size(); ++i)
                if (smask & (std::uint32_t(1) << i)) {
                    removed[zeros[i]] = true;
                    ++scard;
                }
            for (std::size_t i = 0; i < ones.size(); ++i)
                if (tmask & (std::uint32_t(1) << i)) {
                    removed[ones[i]] = true;
                    ++tcard;
                }

            std::vector<std::uint8_t> letters;
            letters.insert(letters.end(), tcard, 1);
            for (int alpha = n; alpha >= 1; --alpha)
                if (!removed[alpha])
                    letters.push_back(a.bits()[alpha - 1]);
            letters.insert(letters.end(), scard, 0);

            long long sign = ((scard + tcard) % 2 == 0) ? 1 : -1;
            Word w(std::move(letters));
            auto [it, inserted] = out.try_emplace(w, sign);
            if (!inserted) {
                it->second += sign;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

std::string SymbolicCoeff::str() const
{
    if (parts_.empty())
        return "0";
    std::string s;
    bool first = true;
    for (const auto &[bits, c] : parts_) {
        if (!first)
            s += " + ";
        first = false;
        if (bits.empty()) {
            s += to_string(c);
        } else {
            s += to_string(c) + "*w(" + AdmissibleSeq(bits).str() + ")";
        }
    }
    return s;
}

double SymbolicCoeff::evaluate(const MzvEvaluator &eval, std::map<Bits, double> &memo) const
{
    double acc = 0.0;
    for (const auto &[bits, c] : parts_) {
        double v;
        if (bits.empty()) {
            v = 1.0;
        } else {
            auto it = memo.find(bits);
            if (it != memo.end()) {
                v = it->second;
            } else {
                AdmissibleSeq a(bits);
                try {
                    v = eval(a);
                } catch (const std::exception &e) {
                    throw std::runtime_error("symbol evaluation failed for (" + a.str() + "): " + e.what());
                }
                memo.emplace(bits, v);
            }
        }
        acc += to_double(c) * v;
    }
    return acc;
}

bool symbol_degrees_consistent(const SymbolicSeries &x)
{
    for (const auto &[w, c] : x.terms())
        if (!c.homogeneous_of_degree(static_cast<int>(w.size())))
            return false;
    return true;
}

bool symbol_degrees_consistent(const SymbolicLieSeries &x)
{
    for (const auto &[w, c] : x.coords())
        if (!c.homogeneous_of_degree(static_cast<int>(w.size())))
            return false;
    return true;
}

NumericSeries evaluate(const SymbolicSeries &x, const MzvEvaluator &eval)
{
    NumericSeries out(x.alphabet(), x.degree());
    std::map<SymbolicCoeff::Bits, double> memo;
    for (const auto &[w, c] : x.terms())
        out.add_coefficient(w, c.evaluate(eval, memo));
    return out;
}

NumericLieElement evaluate(const SymbolicLieSeries &x, const MzvEvaluator &eval)
{
    NumericLieElement out(x.alphabet(), x.degree());
    std::map<SymbolicCoeff::Bits, double> memo;
    for (const auto &[w, c] : x.coords())
        out.add_coordinate(w, c.evaluate(eval, memo));
    return out;
}

SymbolicSeries phi_symbolic(int degree)
{
    SymbolicSeries out(2, degree);
    out.add_coefficient(Word::empty(), SymbolicCoeff(1));
    for (int n = 2; n <= degree; ++n) {
        for (const auto &a : admissible_seqs(n)) {
            for (const auto &[w, c] : c_coefficients(a))
                out.add_coefficient(w, SymbolicCoeff::symbol(a, Rational(c)));
        }
    }
    return out;
}

SymbolicLieSeries log_phi_symbolic(int degree)
{
    SymbolicLieSeries out(2, degree);
    for (int n = 2; n <= degree; ++n) {
        for (const auto &a : admissible_seqs(n)) {
            Series words(2, degree);
            for (const auto &[w, c] : c_coefficients(a))
                words.set_coefficient(w, Rational(c));
            LieElement contribution = cbh_map(words);
            for (const auto &[lyndon, coeff] : contribution.coords())
                out.add_coordinate(lyndon, SymbolicCoeff::symbol(a, coeff));
        }
    }
    return out;
}

NumericSeries phi_numeric(int degree, const MzvEvaluator &eval)
{
    return evaluate(phi_symbolic(degree), eval);
}

NumericLieElement log_phi_numeric(int degree, const MzvEvaluator &eval)
{
    return evaluate(log_phi_symbolic(degree), eval);
}

} // namespace kzcbh
