#ifndef KZCBH_RATIONAL_HPP
#define KZCBH_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace kzcbh {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Safe two-argument construction. cpp_rational's (num, den) constructor
// rejects negative denominators, so normalise the sign here.
inline Rational make_rational(Integer num, Integer den)
{
    if (den == 0)
        throw std::domain_error("make_rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(num, den);
}

inline Rational make_rational(long long num, long long den)
{
    return make_rational(Integer(num), Integer(den));
}

inline Integer numerator_of(const Rational &r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational &r) { return boost::multiprecision::denominator(r); }

inline std::string to_string(const Rational &r)
{
    std::string s = numerator_of(r).str();
    Integer den = denominator_of(r);
    if (den != 1)
        s += "/" + den.str();
    return s;
}

inline double to_double(const Rational &r) { return r.convert_to<double>(); }

inline Rational rational_from_strings(const std::string &num, const std::string &den)
{
    return make_rational(Integer(num), Integer(den));
}

} // namespace kzcbh

#endif
