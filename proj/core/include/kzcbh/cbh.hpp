#ifndef KZCBH_CBH_HPP
#define KZCBH_CBH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kzcbh/lyndon.hpp"
#include "kzcbh/series.hpp"

namespace kzcbh {

// Largest supported arity of the multilinear expansion. Matches the
// truncation-degree cap of run configurations.
inline constexpr int cbh_max_arity = 8;

/* Multilinear part of log(exp(y_1) ... exp(y_k)): the component of letter
 * multidegree (1, ..., 1) in the free algebra on k generators. Each word of
 * the result uses every generator exactly once. Cached per arity. */
const Series &cbh_series(int arity);

// The same element in Lyndon coordinates. Extraction doubles as the proof
// that the multidegree-(1,...,1) component is a Lie element.
const LieElement &cbh_element(int arity);

namespace detail {

/* Pattern of a word: letters renamed to 0,1,2,... in first-occurrence
 * order. Returns the pattern and the class -> original letter table. */
std::pair<std::vector<std::uint8_t>, std::vector<int>> word_pattern(const Word &w);

/* cbh_series(k) with generator j replaced by generator pattern[j]: the
 * image lives on an alphabet of size max(pattern)+1 and is shared by every
 * word with this pattern. Cached per pattern. */
const Series &collapsed_cbh(const std::vector<std::uint8_t> &pattern);

} // namespace detail

/* Word-wise substitution of letters into the multilinear expansion:
 * a word w = w_1 ... w_k of length k contributes the value of the arity-k
 * expansion at (x_{w_1}, ..., x_{w_k}), extended linearly, with constants
 * killed. The result of applying it to a group-like series is its log, in
 * Lyndon coordinates.
 *
 * drop_tol is forwarded to the Lie extraction and only meaningful for
 * floating-point coefficients (extraction noise threshold). */
template <class C>
BasicLieElement<C> cbh_map(const BasicSeries<C> &x, double drop_tol = 0.0)
{
    BasicSeries<C> acc(x.alphabet(), x.degree());
    for (const auto &[w, c] : x.terms()) {
        if (w.is_empty())
            continue;
        if (w.size() > static_cast<std::size_t>(cbh_max_arity))
            throw std::invalid_argument("cbh_map: word " + w.str() + " exceeds the arity cap of " +
                                        std::to_string(cbh_max_arity));
        auto [pattern, class_letter] = detail::word_pattern(w);
        const Series &col = detail::collapsed_cbh(pattern);
        for (const auto &[v, b] : col.terms()) {
            Word img = v.relabel(class_letter);
            if constexpr (CoeffTraits<C>::exact)
                acc.add_coefficient(img, c * b);
            else
                acc.add_coefficient(img, c * to_double(b));
        }
    }
    return lie_extract(acc, drop_tol).element;
}

// Value on a single word, in Lyndon coordinates.
LieElement cbh_word(const Word &w, int alphabet, int degree);

/* log of a group-like series, computed by cbh_map. Group-likeness is a
 * precondition and is checked: exactly for rational input, against
 * grouplike_tol for floating-point input. */
LieElement log_via_cbh(const Series &x);
NumericLieElement log_via_cbh(const NumericSeries &x, double grouplike_tol, double drop_tol);

} // namespace kzcbh

#endif
