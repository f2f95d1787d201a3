#ifndef KZCBH_SERIALIZE_HPP
#define KZCBH_SERIALIZE_HPP

#include <string>

#include "kzcbh/lemurakami.hpp"
#include "kzcbh/lyndon.hpp"
#include "kzcbh/series.hpp"

namespace kzcbh {

/* Structured-text documents for the algebra types. Terms are emitted
 * sorted by (length, lexicographic word); identical values produce
 * byte-identical documents. The empty word is an empty index list.
 * Exact coefficients travel as decimal numerator/denominator strings. */

std::string to_document(const Series &x, bool pretty = false);
std::string to_document(const LieElement &x, bool pretty = false);
// Numeric documents carry the tolerance their producer certifies.
std::string to_document(const NumericSeries &x, double tolerance, bool pretty = false);
std::string to_document(const NumericLieElement &x, double tolerance, bool pretty = false);
/* Symbolic documents expand each coefficient into {seq, num, den} records;
 * the rational multiple of the unit (if any) is carried as seq = "". */
std::string to_document(const SymbolicSeries &x, bool pretty = false);
std::string to_document(const SymbolicLieSeries &x, bool pretty = false);

// Inverses for the exact documents (round-trip safe).
Series series_from_document(const std::string &text);
LieElement lie_from_document(const std::string &text);

} // namespace kzcbh

#endif
