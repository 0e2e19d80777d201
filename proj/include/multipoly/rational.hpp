#ifndef MULTIPOLY_RATIONAL_HPP
#define MULTIPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace multipoly {

// Exact arbitrary-precision fraction. GMP keeps the value reduced with a
// positive denominator, which is exactly the invariant we need; every
// coefficient, objective and pivot in this project goes through this type.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long long num, long long den = 1);

/// Accepts "p", "-p", "p/q" with optional sign; q must be nonzero.
Rational parse_rational(std::string_view text);

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace multipoly

#endif
