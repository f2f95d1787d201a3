#include "kzcbh/projection.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "kzcbh/errors.hpp"

namespace kzcbh {

std::vector<int> PBWMonomial::letter_counts(int alphabet) const
{
    std::vector<int> counts(alphabet, 0);
    for (const auto &f : factors) {
        std::vector<int> fc = f.letter_counts(alphabet);
        for (int i = 0; i < alphabet; ++i)
            counts[i] += fc[i];
    }
    return counts;
}

std::string PBWMonomial::str() const
{
    if (factors.empty())
        return "1";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            s += "*";
        s += "(" + factors[i].str() + ")";
    }
    return s;
}

namespace {

bool counts_fit(const std::vector<int> &a, const std::vector<int> &b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

// Multisets of Lyndon words with prescribed total letter counts; factor
// lists produced weakly decreasing.
void enumerate_monomials(const std::vector<Word> &lyndon_desc, std::size_t from,
                         std::vector<int> &remaining, int remaining_total,
                         std::vector<Word> &current, std::vector<PBWMonomial> &out, int alphabet)
{
    if (remaining_total == 0) {
        out.push_back(PBWMonomial{current});
        return;
    }
    for (std::size_t i = from; i < lyndon_desc.size(); ++i) {
        const Word &w = lyndon_desc[i];
        if (static_cast<int>(w.size()) > remaining_total)
            continue;
        std::vector<int> wc = w.letter_counts(alphabet);
        if (!counts_fit(wc, remaining))
            continue;
        for (int j = 0; j < alphabet; ++j)
            remaining[j] -= wc[j];
        current.push_back(w);
        enumerate_monomials(lyndon_desc, i, remaining, remaining_total - static_cast<int>(w.size()),
                            current, out, alphabet);
        current.pop_back();
        for (int j = 0; j < alphabet; ++j)
            remaining[j] += wc[j];
    }
}

std::vector<PBWMonomial> monomials_for_counts(int alphabet, const std::vector<int> &counts)
{
    int total = 0;
    for (int c : counts)
        total += c;
    std::vector<Word> lyndon = lyndon_words_upto(alphabet, total);
    std::vector<Word> desc(lyndon.rbegin(), lyndon.rend());
    // keep only words usable under the letter budget
    std::vector<Word> usable;
    for (const auto &w : desc)
        if (counts_fit(w.letter_counts(alphabet), counts))
            usable.push_back(w);

    std::vector<PBWMonomial> out;
    std::vector<int> remaining = counts;
    std::vector<Word> current;
    enumerate_monomials(usable, 0, remaining, total, current, out, alphabet);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> words_for_counts(int alphabet, const std::vector<int> &counts)
{
    int total = 0;
    for (int c : counts)
        total += c;
    std::vector<std::uint8_t> letters;
    for (int l = 0; l < alphabet; ++l)
        letters.insert(letters.end(), counts[l], static_cast<std::uint8_t>(l));
    std::vector<Word> out;
    do {
        out.push_back(Word(letters));
    } while (std::next_permutation(letters.begin(), letters.end()));
    std::sort(out.begin(), out.end());
    return out;
}

// Exact Gauss-Jordan inverse. PBW guarantees invertibility; a singular
// matrix indicates a construction bug.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw InternalError("projection: singular basis-change matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);

        Rational p = m[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace

std::vector<PBWMonomial> pbw_monomials(int alphabet, int degree)
{
    if (degree < 0)
        throw std::invalid_argument("pbw_monomials: negative degree");
    if (degree == 0)
        return {PBWMonomial{}};

    // enumerate letter-count vectors summing to degree
    std::vector<PBWMonomial> out;
    std::vector<int> counts(alphabet, 0);
    std::function<void(int, int)> rec = [&](int letter, int left) {
        if (letter == alphabet - 1) {
            counts[letter] = left;
            auto block = monomials_for_counts(alphabet, counts);
            out.insert(out.end(), block.begin(), block.end());
            return;
        }
        for (int c = 0; c <= left; ++c) {
            counts[letter] = c;
            rec(letter + 1, left - c);
        }
    };
    rec(0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

Series symmetrize(const PBWMonomial &m, int alphabet, int degree)
{
    if (m.degree() > degree)
        throw std::invalid_argument("symmetrize: monomial degree exceeds series degree");
    if (m.factors.empty())
        return Series::one(alphabet, degree);

    // distinct arrangements via next_permutation; each stands for
    // (prod multiplicities!) identical terms of the full k! sum
    std::vector<Word> arrangement = m.factors;
    std::sort(arrangement.begin(), arrangement.end());

    Integer dup = 1;
    {
        std::size_t run = 1;
        for (std::size_t i = 1; i <= arrangement.size(); ++i) {
            if (i < arrangement.size() && arrangement[i] == arrangement[i - 1]) {
                ++run;
                dup *= Integer(run);
            } else {
                run = 1;
            }
        }
    }
    Integer kfact = 1;
    for (std::size_t i = 2; i <= arrangement.size(); ++i)
        kfact *= Integer(i);

    Series sum(alphabet, degree);
    do {
        Series prod = Series::one(alphabet, degree);
        for (const auto &f : arrangement)
            prod = prod * bracketing(f, alphabet, degree);
        sum += prod;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));

    return sum * make_rational(dup, kfact);
}

namespace detail {

const MultidegreeBlock &multidegree_block(int alphabet, const std::vector<int> &counts)
{
    static std::map<std::pair<int, std::vector<int>>, MultidegreeBlock> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);

    auto key = std::make_pair(alphabet, counts);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;

    MultidegreeBlock block;
    block.words = words_for_counts(alphabet, counts);
    for (std::size_t i = 0; i < block.words.size(); ++i)
        block.word_index[block.words[i]] = static_cast<int>(i);
    block.monomials = monomials_for_counts(alphabet, counts);

    if (block.monomials.size() != block.words.size())
        throw InternalError("projection: monomial count does not match word count in multidegree block");

    const std::size_t n = block.words.size();
    int degree = 0;
    for (int c : counts)
        degree += c;

    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t j = 0; j < n; ++j) {
        Series s = symmetrize(block.monomials[j], alphabet, degree);
        for (const auto &[w, c] : s.terms())
            m[block.word_index.at(w)][j] = c;
        if (block.monomials[j].factors.size() == 1)
            block.lyndon_columns.emplace_back(static_cast<int>(j), block.monomials[j].factors[0]);
    }

    block.inverse = invert(std::move(m));
    return cache.emplace(std::move(key), std::move(block)).first->second;
}

} // namespace detail

} // namespace kzcbh
