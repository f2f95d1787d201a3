#ifndef KZCBH_SRC_EULERMACLAURIN_HPP
#define KZCBH_SRC_EULERMACLAURIN_HPP

#include <map>
#include <utility>
#include <vector>

namespace kzcbh::em {

/* Finite combination sum c_{a,p} x^{-a} (ln x)^p with integer a >= 0,
 * p >= 0. Closed under differentiation; closed under antidifferentiation
 * when every term has a >= 1. This class models the integrands and tail
 * expansions of the nested zeta sums exactly, leaving floating point as
 * the only error source besides the explicitly bounded remainders. */
class LogPowerSum {
  public:
    using Key = std::pair<int, int>; // (a, p)

    LogPowerSum() = default;

    static LogPowerSum constant(double c)
    {
        LogPowerSum s;
        s.add(0, 0, c);
        return s;
    }

    const std::map<Key, double> &terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(int a, int p, double c);
    LogPowerSum &operator+=(const LogPowerSum &rhs);
    LogPowerSum &operator*=(double s);

    // Multiply by x^{-shift}.
    LogPowerSum power_shifted(int shift) const;

    LogPowerSum derivative() const;

    /* Antiderivative (in x). Terms with a >= 2 integrate to decaying
     * combinations; a = 1 terms produce growing log powers; a = 0 terms
     * are rejected (never needed: integrands always carry x^{-s}, s>=1). */
    LogPowerSum antiderivative() const;

    double eval(double x) const;

    // sum |c| * integral_M^infty x^{-a} ln^p: requires every a >= 2.
    double abs_tail_integral(double m) const;

  private:
    std::map<Key, double> terms_;
};

// integral_m^infty x^{-a} (ln x)^p dx for a >= 2.
double tail_integral(int a, int p, double m);

struct Result {
    double value;
    double bound;
};

/* Nested multiple zeta sum over n_1 > n_2 > ... > n_k >= 1 of
 * prod n_j^{-s_j}, s_1 >= 2, s_j >= 1. Exact partial sums to the sweep
 * cutoff M, Euler-Maclaurin models with J correction terms beyond it, and
 * a rigorous remainder envelope propagated outward through the levels. */
Result multiple_zeta(const std::vector<int> &exponents, long long sweep, int corrections);

} // namespace kzcbh::em

#endif
