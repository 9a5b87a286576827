#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace permorb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest terms, "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts "p", "-p", "p/q". Throws Error{ParseError}.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
bool is_integer(const Rational& q);

/// Least nonnegative residue of a modulo m (m > 0).
Integer mod(const Integer& a, const Integer& m);

template <class Expr>
Integer mod(const __gmp_expr<mpz_t, Expr>& a, const Integer& m) {
  return mod(Integer(a), m);
}

/// Representative of q modulo m*Z in [0, m).
Rational mod(const Rational& q, const Integer& m);

bool is_perfect_square(const Integer& n);
Integer isqrt(const Integer& n);

}  // namespace permorb
