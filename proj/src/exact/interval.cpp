#include "torunits/exact/interval.hpp"

#include <algorithm>
#include <sstream>

namespace torunits {

namespace {

Rational abs_center_upper(const CertifiedInterval& z, long bits) {
  if (z.im == 0) return abs(z.re);
  if (z.re == 0) return abs(z.im);
  return sqrt_upper(z.re * z.re + z.im * z.im, bits);
}

// Rounds the center and widens the radius by the rounding error.
CertifiedInterval rounded(const Rational& re, const Rational& im, Rational rad, long bits) {
  Rational rre = round_dyadic(re, bits);
  Rational rim = round_dyadic(im, bits);
  rad += abs(Rational(re - rre)) + abs(Rational(im - rim));
  return {rre, rim, rad};
}

}  // namespace

Rational CertifiedInterval::abs_upper(long bits) const { return abs_center_upper(*this, bits) + rad; }

Rational CertifiedInterval::abs_lower(long bits) const {
  Rational c = (im == 0) ? Rational(abs(re)) : sqrt_lower(re * re + im * im, bits);
  Rational v = c - rad;
  return v > 0 ? v : Rational(0);
}

bool CertifiedInterval::contains(const Rational& x, const Rational& y) const {
  Rational dx = x - re, dy = y - im;
  return dx * dx + dy * dy <= rad * rad;
}

bool CertifiedInterval::overlaps(const CertifiedInterval& o) const {
  Rational dx = o.re - re, dy = o.im - im, r = rad + o.rad;
  return dx * dx + dy * dy <= r * r;
}

bool CertifiedInterval::certainly_outside_unit_disc() const {
  Rational r = 1 + rad;
  return re * re + im * im > r * r;
}

bool CertifiedInterval::certainly_inside_unit_disc() const {
  if (rad >= 1) return false;
  Rational r = 1 - rad;
  return re * re + im * im < r * r;
}

CertifiedInterval add(const CertifiedInterval& a, const CertifiedInterval& b, long bits) {
  return rounded(a.re + b.re, a.im + b.im, a.rad + b.rad, bits);
}

CertifiedInterval sub(const CertifiedInterval& a, const CertifiedInterval& b, long bits) {
  return rounded(a.re - b.re, a.im - b.im, a.rad + b.rad, bits);
}

CertifiedInterval mul(const CertifiedInterval& a, const CertifiedInterval& b, long bits) {
  Rational re = a.re * b.re - a.im * b.im;
  Rational im = a.re * b.im + a.im * b.re;
  Rational rad = 0;
  if (a.rad != 0 || b.rad != 0) {
    rad = abs_center_upper(a, bits) * b.rad + abs_center_upper(b, bits) * a.rad + a.rad * b.rad;
  }
  return rounded(re, im, rad, bits);
}

CertifiedInterval scale(const CertifiedInterval& a, const Rational& c, long bits) {
  return rounded(a.re * c, a.im * c, a.rad * abs(c), bits);
}

CertifiedInterval evaluate(const RationalPolynomial& p, const CertifiedInterval& z, long bits) {
  CertifiedInterval acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc = mul(acc, z, bits);
    acc = add(acc, CertifiedInterval::exact(p.coeff(k)), bits);
  }
  return acc;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
RealInterval operator-(const RealInterval& a, const RealInterval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RealInterval scale(const RealInterval& a, const Rational& c) {
  if (c >= 0) return {a.lo * c, a.hi * c};
  return {a.hi * c, a.lo * c};
}

RealInterval log_abs(const CertifiedInterval& z, long bits) {
  Rational lo = z.abs_lower(bits + 8);
  if (lo <= 0) throw UndeterminedError("disc touches zero; cannot bound log|z|");
  Rational hi = z.abs_upper(bits + 8);
  return {log_lower(lo, bits), log_upper(hi, bits)};
}

RealInterval determinant(const std::vector<std::vector<RealInterval>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {1, 1};
  if (n == 1) return m[0][0];
  RealInterval total{0, 0};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<RealInterval>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<RealInterval> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    RealInterval term = m[0][j] * determinant(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

std::string describe(const CertifiedInterval& z) {
  std::ostringstream os;
  os.precision(12);
  os << static_cast<double>(z.approx_re());
  if (z.im != 0) os << (z.im < 0 ? " - " : " + ") << static_cast<double>(std::abs(z.approx_im())) << "i";
  os << " +/- " << z.rad.get_d();
  return os.str();
}

}  // namespace torunits
