#ifndef KZCBH_MZV_HPP
#define KZCBH_MZV_HPP

#include <string>
#include <utility>
#include <vector>

#include "kzcbh/lemurakami.hpp"

namespace kzcbh {

/* Exponent tuple (s_1, ..., s_k) of a nested zeta sum over
 * n_1 > n_2 > ... > n_k >= 1 of prod n_j^{-s_j}; convergent iff s_1 >= 2. */
struct Composition {
    std::vector<int> exponents;

    Composition() = default;
    explicit Composition(std::vector<int> e);

    int depth() const { return static_cast<int>(exponents.size()); }
    int weight() const;
    bool convergent() const;
    std::string str() const; // "(2,1,1)"

    bool operator==(const Composition &o) const { return exponents == o.exponents; }
    bool operator<(const Composition &o) const { return exponents < o.exponents; }
};

/* Dictionary between a 0/1 sequence and the zeta sum its iterated
 * integral evaluates to. Reading the sequence from its last entry toward
 * the first, each run "1 0^m" contributes an exponent m+1; the attached
 * sign is (-1)^{#ones}. The admissibility constraints (leading 1,
 * trailing 0) make every exponent well formed and the leading one >= 2. */
std::pair<Composition, int> word_to_composition(const AdmissibleSeq &seq);
AdmissibleSeq composition_to_word(const Composition &comp);

enum class MzvMethod { series, quadrature };

struct MzvValue {
    double value = 0.0;
    double error_bound = 0.0;
    MzvMethod method = MzvMethod::series;
};

/* Nested-sum evaluation with an Euler-Maclaurin tail model and a rigorous
 * error bound. Escalates the sweep cutoff until the bound meets tol;
 * throws ResourceError carrying the best value/bound if it cannot. */
MzvValue mzv_series(const Composition &comp, double tol = 1e-10);

/* Iterated-integral evaluation of the signed word integral on the
 * simplex 0 <= t_1 <= ... <= t_n <= 1, using collocation grids refined
 * toward the logarithmic endpoint. Error bound is the difference of two
 * resolutions plus a floor; independent of the series route. */
MzvValue mzv_quadrature(const AdmissibleSeq &seq, double tol = 1e-8);

// Signed word integral evaluated through the dictionary and the series route.
MzvValue omega_series(const AdmissibleSeq &seq, double tol = 1e-10);

MzvEvaluator make_series_evaluator(double tol = 1e-10);
MzvEvaluator make_quadrature_evaluator(double tol = 1e-8);

} // namespace kzcbh

#endif
