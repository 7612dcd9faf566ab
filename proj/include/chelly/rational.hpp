#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace chelly {

/// Exact rational scalar. GMP keeps every result canonical (gcd 1, q > 0).
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Canonical p/q; throws InputError for q == 0.
Rational make_rational(long numerator, long denominator = 1);

/**
 * Parses "p/q", an integer, or an exact decimal such as "-0.125" or "3e-2".
 * Throws InputError on anything else.
 */
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

Vector zero_vector(std::size_t dim);
Vector unit_vector(std::size_t dim, std::size_t axis);

Rational dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Rational& factor);
Vector negate(const Vector& v);
/// y += factor * x
void axpy(Vector& y, const Rational& factor, const Vector& x);

/// Scales v by a positive rational so its entries are coprime integers.
Vector primitive_integer_direction(const Vector& v);

Rational floor_rational(const Rational& value);
Rational ceil_rational(const Rational& value);

} // namespace chelly
