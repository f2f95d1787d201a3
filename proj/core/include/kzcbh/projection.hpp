#ifndef KZCBH_PROJECTION_HPP
#define KZCBH_PROJECTION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kzcbh/lyndon.hpp"
#include "kzcbh/series.hpp"

namespace kzcbh {

/* Basis monomial of the symmetric-power decomposition: a multiset of Lyndon
 * words, stored as a factor list that is weakly decreasing in graded-lex
 * order. The monomial represents the symmetrized product of the factors'
 * bracketings. */
struct PBWMonomial {
    std::vector<Word> factors;

    int degree() const
    {
        int d = 0;
        for (const auto &f : factors)
            d += static_cast<int>(f.size());
        return d;
    }

    std::vector<int> letter_counts(int alphabet) const;

    bool operator==(const PBWMonomial &rhs) const { return factors == rhs.factors; }
    bool operator<(const PBWMonomial &rhs) const
    {
        if (degree() != rhs.degree())
            return degree() < rhs.degree();
        return factors < rhs.factors;
    }

    std::string str() const;
};

// All monomials of the given total degree, sorted degree-first then by
// factor sequence.
std::vector<PBWMonomial> pbw_monomials(int alphabet, int degree);

// Symmetrized product: (1/k!) sum over all k! orderings of the factors of
// the product of their bracketings.
Series symmetrize(const PBWMonomial &m, int alphabet, int degree);

namespace detail {

/* Change of basis between words and PBW monomials of a fixed letter
 * multidegree. Symmetrization preserves multidegree, so the full
 * degree-d transition matrix is block diagonal over multidegrees and only
 * the blocks are ever materialised. `inverse` maps word coordinates to
 * monomial coordinates; `lyndon_column` lists the columns whose monomial is
 * a single Lyndon factor, i.e. the Lie rows of the decomposition. */
struct MultidegreeBlock {
    std::vector<Word> words;
    std::map<Word, int> word_index;
    std::vector<PBWMonomial> monomials;
    std::vector<std::pair<int, Word>> lyndon_columns;
    std::vector<std::vector<Rational>> inverse;
};

const MultidegreeBlock &multidegree_block(int alphabet, const std::vector<int> &counts);

} // namespace detail

/* Projection onto the Lie component of the symmetric-power decomposition:
 * write X in the symmetrized PBW basis and keep the single-factor part.
 * Kills the constant term and every properly mixed symmetric power. */
template <class C> BasicLieElement<C> lie_project_p(const BasicSeries<C> &x)
{
    BasicLieElement<C> out(x.alphabet(), x.degree());

    // group terms by multidegree
    std::map<std::vector<int>, std::map<Word, C>> groups;
    for (const auto &[w, c] : x.terms()) {
        if (w.is_empty())
            continue;
        groups[w.letter_counts(x.alphabet())][w] = c;
    }

    for (const auto &[counts, terms] : groups) {
        const detail::MultidegreeBlock &block = detail::multidegree_block(x.alphabet(), counts);
        std::vector<C> xv(block.words.size(), C(0));
        for (const auto &[w, c] : terms)
            xv[block.word_index.at(w)] = c;
        for (const auto &[col, lyndon] : block.lyndon_columns) {
            C acc(0);
            const std::vector<Rational> &row = block.inverse[col];
            for (std::size_t i = 0; i < xv.size(); ++i) {
                if (xv[i] == C(0) || row[i] == 0)
                    continue;
                if constexpr (CoeffTraits<C>::exact)
                    acc += row[i] * xv[i];
                else
                    acc += to_double(row[i]) * xv[i];
            }
            out.add_coordinate(lyndon, acc);
        }
    }
    return out;
}

/* First Eulerian idempotent: log of the identity under convolution,
 * e1 = sum_k ((-1)^(k-1)/k) m^(k-1) pibar^(x k) Deltabar^(k-1),
 * evaluated word by word. The k-th convolution power on a word is computed
 * by a subset dynamic program over position masks: G_k(M) =
 * sum over nonempty S subset M of word(S) * G_{k-1}(M \ S), so each ordered
 * set partition of the positions into k nonempty blocks contributes the
 * concatenation of its blocks. Projects onto primitives; agrees with
 * lie_project_p in its Lie-element expansion. */
template <class C> BasicSeries<C> eulerian_projection(const BasicSeries<C> &x)
{
    BasicSeries<C> out(x.alphabet(), x.degree());
    for (const auto &[w, coeff] : x.terms()) {
        const std::size_t n = w.size();
        if (n == 0)
            continue;
        if (n > 12)
            throw std::invalid_argument("eulerian_projection: word too long for set-partition expansion");
        const std::uint32_t full = (std::uint32_t(1) << n) - 1;

        std::vector<std::map<Word, C>> prev(full + 1), cur(full + 1);
        for (std::uint32_t mask = 1; mask <= full; ++mask)
            prev[mask][w.subword_mask(mask)] = C(1);

        // k = 1 contribution
        for (const auto &[v, cnt] : prev[full]) {
            C t = cnt * coeff;
            out.add_coefficient(v, t);
        }

        for (std::size_t k = 2; k <= n; ++k) {
            for (auto &m : cur)
                m.clear();
            for (std::uint32_t mask = 1; mask <= full; ++mask) {
                if (static_cast<std::size_t>(__builtin_popcount(mask)) < k)
                    continue;
                auto &acc = cur[mask];
                // S runs over nonempty proper submasks; the complement must
                // hold the remaining k-1 blocks.
                for (std::uint32_t s = (mask - 1) & mask; s; s = (s - 1) & mask) {
                    std::uint32_t rest = mask & ~s;
                    const auto &g = prev[rest];
                    if (g.empty())
                        continue;
                    Word ws = w.subword_mask(s);
                    for (const auto &[v, cnt] : g) {
                        auto [it, inserted] = acc.try_emplace(ws.concat(v), cnt);
                        if (!inserted)
                            it->second += cnt;
                    }
                }
            }
            long long denom = (k % 2 == 1) ? static_cast<long long>(k) : -static_cast<long long>(k);
            for (const auto &[v, cnt] : cur[full]) {
                C t = cnt * coeff;
                t /= C(denom);
                out.add_coefficient(v, t);
            }
            std::swap(prev, cur);
        }
    }
    return out;
}

} // namespace kzcbh

#endif
