#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace torunits {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed input, failed verifications and violated preconditions.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal consistency check fails (a bug, never bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a certified computation cannot decide within its precision budget.
class UndeterminedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "p/q", "p", "-3/4"; whitespace is not accepted.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Least non-negative residue.
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Integer floor(const Rational& x) {
  return floor_div(x.get_num(), x.get_den());
}

inline Integer ceil(const Rational& x) { return -floor(Rational(-x)); }

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

/// Round to the nearest multiple of 2^-bits (ties away from zero).
Rational round_dyadic(const Rational& x, long bits);

/// Power of two as a rational, 2^exponent (exponent may be negative).
Rational pow2(long exponent);

/// Certified sqrt bounds: lo <= sqrt(x) <= hi, with hi - lo <= 2^-bits (roughly).
Rational sqrt_upper(const Rational& x, long bits = 80);
Rational sqrt_lower(const Rational& x, long bits = 80);

/// Certified natural-log bounds for x > 0.
Rational log_lower(const Rational& x, long bits);
Rational log_upper(const Rational& x, long bits);

/// Euler's totient.
std::int64_t euler_phi(std::int64_t m);

/// Best rational approximation with denominator <= max_den (continued fractions).
Rational best_rational(long double x, const Integer& max_den);

inline double to_double(const Rational& x) { return x.get_d(); }
long double to_long_double(const Rational& x);

/// Exact dyadic rational for a finite double.
Rational from_double(double x);

}  // namespace torunits
