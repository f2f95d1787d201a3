#include "kzcbh/lyndon.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "kzcbh/errors.hpp"

namespace kzcbh {

bool is_lyndon(const Word &w)
{
    const std::size_t n = w.size();
    if (n == 0)
        return false;
    for (std::size_t i = 1; i < n; ++i) {
        // compare w against its suffix starting at i, plain lex
        std::size_t j = 0;
        while (j + i < n && w.letter(j) == w.letter(j + i))
            ++j;
        if (j + i == n) // suffix is a prefix of w: w >= suffix
            return false;
        if (w.letter(j) > w.letter(j + i))
            return false;
    }
    return true;
}

static void check_alphabet(int alphabet)
{
    if (alphabet < 1 || alphabet > 255)
        throw std::invalid_argument("lyndon: alphabet size out of range: " + std::to_string(alphabet));
}

std::vector<Word> lyndon_words_upto(int alphabet, int max_length)
{
    check_alphabet(alphabet);
    if (max_length < 0)
        throw std::invalid_argument("lyndon_words_upto: negative length bound");
    std::vector<Word> out;
    if (max_length == 0)
        return out;

    // Duval's generation: repeatedly extend the current word periodically to
    // the length bound, strip trailing maximal letters, and increment.
    // Emits every Lyndon word of length <= max_length in lex order.
    std::vector<std::uint8_t> w{0};
    while (true) {
        out.push_back(Word(w));
        std::size_t m = w.size();
        w.resize(static_cast<std::size_t>(max_length));
        for (std::size_t i = m; i < w.size(); ++i)
            w[i] = w[i - m];
        while (!w.empty() && w.back() == alphabet - 1)
            w.pop_back();
        if (w.empty())
            break;
        ++w.back();
    }

    // Lex emission order happens to be graded-lex within this alphabet only
    // for alphabet = 1; sort to the canonical order.
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> lyndon_words(int alphabet, int length)
{
    if (length < 1)
        throw std::invalid_argument("lyndon_words: length must be >= 1");
    std::vector<Word> all = lyndon_words_upto(alphabet, length);
    std::vector<Word> out;
    for (auto &w : all)
        if (w.size() == static_cast<std::size_t>(length))
            out.push_back(std::move(w));
    return out;
}

static int moebius(int n)
{
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            result = -result;
        }
    }
    if (n > 1)
        result = -result;
    return result;
}

long long witt_dimension(int alphabet, int d)
{
    check_alphabet(alphabet);
    if (d < 1)
        throw std::invalid_argument("witt_dimension: degree must be >= 1");
    Integer sum = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0)
            continue;
        Integer p = boost::multiprecision::pow(Integer(alphabet), unsigned(d / e));
        sum += Integer(moebius(e)) * p;
    }
    if (sum % d != 0)
        throw InternalError("witt_dimension: divisibility failure");
    Integer result = sum / d;
    return result.convert_to<long long>();
}

std::pair<Word, Word> standard_factorization(const Word &w)
{
    if (w.size() < 2)
        throw std::domain_error("standard_factorization: word length must be >= 2");
    if (!is_lyndon(w))
        throw std::domain_error("standard_factorization: " + w.str() + " is not Lyndon");
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word v = w.suffix(i);
        if (is_lyndon(v))
            return {w.prefix(i), v};
    }
    throw InternalError("standard_factorization: no Lyndon suffix found for " + w.str());
}

namespace {

using RawExpansion = std::map<Word, Rational>;

RawExpansion raw_concat(const RawExpansion &a, const RawExpansion &b)
{
    RawExpansion out;
    for (const auto &[u, cu] : a)
        for (const auto &[v, cv] : b) {
            Rational c = cu * cv;
            auto [it, inserted] = out.try_emplace(u.concat(v), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    return out;
}

const RawExpansion &expansion_impl(const Word &w)
{
    static std::map<Word, RawExpansion> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    auto it = cache.find(w);
    if (it != cache.end())
        return it->second;

    std::function<const RawExpansion &(const Word &)> rec = [&](const Word &u) -> const RawExpansion & {
        auto hit = cache.find(u);
        if (hit != cache.end())
            return hit->second;
        RawExpansion e;
        if (u.size() == 1) {
            e[u] = 1;
        } else {
            auto [l, r] = standard_factorization(u);
            const RawExpansion le = rec(l); // copy: recursion may invalidate refs
            const RawExpansion re = rec(r);
            e = raw_concat(le, re);
            RawExpansion rl = raw_concat(re, le);
            for (const auto &[v, c] : rl) {
                Rational nc = Rational(0) - c;
                auto [eit, inserted] = e.try_emplace(v, nc);
                if (!inserted) {
                    eit->second -= c;
                    if (eit->second == 0)
                        e.erase(eit);
                }
            }
        }
        return cache.emplace(u, std::move(e)).first->second;
    };
    return rec(w);
}

} // namespace

const std::map<Word, Rational> &bracketing_expansion(const Word &lyndon)
{
    if (!is_lyndon(lyndon))
        throw std::domain_error("bracketing_expansion: " + lyndon.str() + " is not Lyndon");
    return expansion_impl(lyndon);
}

Series bracketing(const Word &lyndon, int alphabet, int degree)
{
    Series out(alphabet, degree);
    for (const auto &[v, c] : bracketing_expansion(lyndon))
        out.set_coefficient(v, c);
    return out;
}

} // namespace kzcbh
