#include "kzcbh/cbh.hpp"

#include <map>
#include <mutex>

#include "kzcbh/errors.hpp"

namespace kzcbh {

namespace {

// A homogeneous-free polynomial with distinct-letter words only, each word
// paired with its letter bitmask for O(1) disjointness tests.
using MaskedPoly = std::map<Word, Rational>;

std::uint32_t letter_mask(const Word &w)
{
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        m |= std::uint32_t(1) << w.letter(i);
    return m;
}

/* Product with repeated-letter pruning. Any word containing a letter twice
 * can never reach the multidegree (1,...,1) component by further
 * concatenation, so such products are dropped at the source. */
MaskedPoly pruned_mul(const MaskedPoly &a, const MaskedPoly &b)
{
    MaskedPoly out;
    for (const auto &[u, cu] : a) {
        std::uint32_t mu = letter_mask(u);
        for (const auto &[v, cv] : b) {
            if (mu & letter_mask(v))
                continue;
            Rational c = cu * cv;
            auto [it, inserted] = out.try_emplace(u.concat(v), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    }
    return out;
}

Series compute_cbh_series(int k)
{
    /* Within the multidegree-(1,...,1) component, log(prod exp(y_i)) equals
     * log(prod (1 + y_i)): the higher powers inside each exp repeat a letter
     * and are unreachable. prod (1 + y_i) - 1 expands to one word per
     * nonempty subset of generators, letters in increasing order. */
    MaskedPoly y;
    {
        MaskedPoly p;
        p[Word::empty()] = 1;
        for (int i = 0; i < k; ++i) {
            MaskedPoly gen;
            gen[Word::single(i)] = 1;
            MaskedPoly shifted = pruned_mul(p, gen);
            for (const auto &[w, c] : shifted) {
                auto [it, inserted] = p.try_emplace(w, c);
                if (!inserted)
                    it->second += c;
            }
        }
        p.erase(Word::empty());
        y = std::move(p);
    }

    const std::uint32_t full = (std::uint32_t(1) << k) - 1;
    Series out(k, k);

    MaskedPoly pow = y;
    for (int j = 1; j <= k; ++j) {
        if (j > 1)
            pow = pruned_mul(pow, y);
        if (pow.empty())
            break;
        Rational coeff = make_rational(j % 2 == 1 ? 1 : -1, j);
        for (const auto &[w, c] : pow) {
            if (w.size() == static_cast<std::size_t>(k) && letter_mask(w) == full)
                out.add_coefficient(w, c * coeff);
        }
    }
    return out;
}

struct ArityEntry {
    Series series;
    LieElement element;
};

const ArityEntry &arity_entry(int k)
{
    if (k < 1 || k > cbh_max_arity)
        throw std::invalid_argument("cbh: arity " + std::to_string(k) + " outside 1.." +
                                    std::to_string(cbh_max_arity));
    static std::map<int, ArityEntry> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(k);
    if (it != cache.end())
        return it->second;
    Series s = compute_cbh_series(k);
    LieElement e = lie_from_series(s);
    return cache.emplace(k, ArityEntry{std::move(s), std::move(e)}).first->second;
}

} // namespace

const Series &cbh_series(int arity) { return arity_entry(arity).series; }

const LieElement &cbh_element(int arity) { return arity_entry(arity).element; }

namespace detail {

std::pair<std::vector<std::uint8_t>, std::vector<int>> word_pattern(const Word &w)
{
    std::vector<std::uint8_t> pattern;
    std::vector<int> class_letter;
    pattern.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        int l = w.letter(i);
        std::size_t cls = 0;
        while (cls < class_letter.size() && class_letter[cls] != l)
            ++cls;
        if (cls == class_letter.size())
            class_letter.push_back(l);
        pattern.push_back(static_cast<std::uint8_t>(cls));
    }
    return {std::move(pattern), std::move(class_letter)};
}

const Series &collapsed_cbh(const std::vector<std::uint8_t> &pattern)
{
    static std::map<std::vector<std::uint8_t>, Series> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(pattern);
    if (it != cache.end())
        return it->second;

    const int k = static_cast<int>(pattern.size());
    int classes = 0;
    for (auto p : pattern)
        classes = std::max(classes, int(p) + 1);

    std::vector<int> rename(pattern.begin(), pattern.end());
    const Series &base = cbh_series(k);
    Series img(classes, k);
    for (const auto &[v, c] : base.terms())
        img.add_coefficient(v.relabel(rename), c);
    return cache.emplace(pattern, std::move(img)).first->second;
}

} // namespace detail

LieElement cbh_word(const Word &w, int alphabet, int degree)
{
    if (w.is_empty())
        throw std::invalid_argument("cbh_word: empty word");
    Series x(alphabet, degree);
    x.set_coefficient(w, Rational(1));
    return cbh_map(x);
}

namespace {

std::string first_grouplike_defect(const TensorSeries &defect)
{
    if (defect.terms().empty())
        return "constant term differs from 1";
    const auto &[key, c] = *defect.terms().begin();
    return "coproduct defect " + to_string(c) + " at (" + key.first.str() + ", " + key.second.str() + ")";
}

} // namespace

LieElement log_via_cbh(const Series &x)
{
    if (!x.is_grouplike()) {
        TensorSeries defect = x.coproduct() - TensorSeries::outer(x, x);
        throw std::domain_error("log_via_cbh: input is not group-like: " + first_grouplike_defect(defect));
    }
    return cbh_map(x);
}

NumericLieElement log_via_cbh(const NumericSeries &x, double grouplike_tol, double drop_tol)
{
    double r = x.grouplike_residual();
    if (r > grouplike_tol)
        throw std::domain_error("log_via_cbh: group-like residual " + std::to_string(r) +
                                " exceeds tolerance " + std::to_string(grouplike_tol));
    return cbh_map(x, drop_tol);
}

} // namespace kzcbh
