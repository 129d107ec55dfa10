#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace treeshift {

/// Exact rational scalar. mpq_class keeps values in canonical reduced form
/// with a positive denominator, which is exactly the invariant we need;
/// every quantity in this library is a rational function of the model data.
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize on its own; this does.
inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or a bare integer "p". Either part may carry a sign.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

// base^exp with negative exponents allowed (base must be nonzero then).
Rational rational_pow(const Rational& base, long exp);

bool is_perfect_square(const Rational& value);

// Exact square root; requires is_perfect_square(value).
Rational exact_sqrt(const Rational& value);

// Exact n-th root when one exists in the rationals.
std::optional<Rational> exact_nth_root(const Rational& value, unsigned long n);

double to_double(const Rational& value);

} // namespace treeshift
