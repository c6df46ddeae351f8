#pragma once

// Exact scalars used by every law and determinant in the library.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dualg {

using BigInt = mpz_class;
using Rational = mpq_class;  // always canonical after construction through make_rational

/// Builds num/den in lowest terms. Throws std::invalid_argument on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);
Rational make_rational(long num, long den = 1);

/// Parses "p", "p/q" or a finite decimal such as "0.25" exactly.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Rounded decimal with `digits` places after the point.
std::string to_decimal(const Rational& value, int digits);

double to_double(const Rational& value);

/// C(n, k); 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

/// n! from a process-wide memo table (grows on demand, guarded by a mutex).
BigInt factorial(long n);

/// log(n!) in double precision.
double log_factorial(long n);

/// Exact rational power with a non-negative integer exponent.
Rational pow(const Rational& base, unsigned long exponent);

}  // namespace dualg
