#pragma once

#include <string>
#include <vector>

#include "torunits/exact/polynomial.hpp"

namespace torunits {

/// Closed disc in C with dyadic-rational center and radius, certified to
/// contain an exact value. Real values have im == 0 (the disc then also
/// encloses the real interval [re - rad, re + rad]).
///
/// Arithmetic rounds centers to `bits` fractional bits and adds the rounding
/// error to the radius, so every result still contains the exact value.
struct CertifiedInterval {
  Rational re = 0;
  Rational im = 0;
  Rational rad = 0;

  static CertifiedInterval exact(const Rational& re, const Rational& im = 0) { return {re, im, 0}; }

  bool is_real_centered() const { return im == 0; }
  Rational real_lower() const { return re - rad; }
  Rational real_upper() const { return re + rad; }
  /// Certified bounds on the modulus of every point in the disc.
  Rational abs_upper(long bits = 80) const;
  Rational abs_lower(long bits = 80) const;
  bool contains(const Rational& x, const Rational& y = 0) const;
  bool contains_zero() const { return contains(0, 0); }
  bool overlaps(const CertifiedInterval& o) const;
  bool disjoint(const CertifiedInterval& o) const { return !overlaps(o); }
  /// Certified |z| > 1 for all z in the disc.
  bool certainly_outside_unit_disc() const;
  /// Certified |z| < 1 for all z in the disc.
  bool certainly_inside_unit_disc() const;
  CertifiedInterval conj() const { return {re, -im, rad}; }
  long double approx_re() const { return to_long_double(re); }
  long double approx_im() const { return to_long_double(im); }
};

CertifiedInterval add(const CertifiedInterval& a, const CertifiedInterval& b, long bits);
CertifiedInterval sub(const CertifiedInterval& a, const CertifiedInterval& b, long bits);
CertifiedInterval mul(const CertifiedInterval& a, const CertifiedInterval& b, long bits);
CertifiedInterval scale(const CertifiedInterval& a, const Rational& c, long bits);
/// Horner evaluation of p on a disc.
CertifiedInterval evaluate(const RationalPolynomial& p, const CertifiedInterval& z, long bits);

/// Closed real interval with rational endpoints.
struct RealInterval {
  Rational lo = 0;
  Rational hi = 0;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

RealInterval operator+(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a, const RealInterval& b);
RealInterval operator*(const RealInterval& a, const RealInterval& b);
RealInterval scale(const RealInterval& a, const Rational& c);
/// Outward-rounded enclosure of log|z| over the disc; throws UndeterminedError
/// if the disc touches zero.
RealInterval log_abs(const CertifiedInterval& z, long bits);
/// Determinant of a small square interval matrix by cofactor expansion.
RealInterval determinant(const std::vector<std::vector<RealInterval>>& m);

std::string describe(const CertifiedInterval& z);

}  // namespace torunits
