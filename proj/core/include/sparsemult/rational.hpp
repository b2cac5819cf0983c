#ifndef SPARSEMULT_RATIONAL_HPP
#define SPARSEMULT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sparsemult {

using Integer = mpz_class;
/// Exact rational; gmp keeps every value canonical (lowest terms, positive denominator).
using Rational = mpq_class;

using RationalPoint = std::vector<Rational>;

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Converts an integral rational to int64; throws InvariantError if it is not integral or does not fit.
std::int64_t to_int64(const Rational& q);

Rational factorial(unsigned n);

} // namespace sparsemult

#endif
