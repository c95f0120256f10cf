#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace walkclass {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "n", "-n", "p/q" (optional sign, decimal digits, q > 0). Result is canonical.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "n" when the denominator is 1.
std::string to_string(const Rational& r);

// True iff r = s^2 for some rational s (0 counts as a square).
bool is_rational_square(const Rational& r);

// Extended-precision conversion (about 64 mantissa bits).
long double to_long_double(const Rational& r);
inline double to_double(const Rational& r) { return r.get_d(); }

Rational pow(const Rational& base, unsigned exponent);

// Dense univariate polynomial with rational coefficients, c[k] multiplies x^k.
using RatPoly = std::vector<Rational>;

RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_add(const RatPoly& a, const RatPoly& b);
RatPoly poly_scale(const RatPoly& a, const Rational& s);
void poly_trim(RatPoly& a);
int poly_degree(const RatPoly& a);  // -1 for the zero polynomial
Rational poly_eval(const RatPoly& a, const Rational& x);
RatPoly poly_gcd(RatPoly a, RatPoly b);  // monic, or empty when both are zero

// All distinct rational roots of a nonzero polynomial, ascending.
// Throws RootSearchLimit if a coefficient is too large to factor by trial division.
std::vector<Rational> rational_roots(const RatPoly& p);

}  // namespace walkclass
