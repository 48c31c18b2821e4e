#include "torunits/exact/arith.hpp"

#include <mpfr.h>

#include <cmath>

namespace torunits {

namespace {

// RAII wrapper around an mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(long bits) { mpfr_init2(value_, bits); }
  ~Mpfr() { mpfr_clear(value_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

Rational to_rational(const Mpfr& x) {
  Integer mant;
  mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x.get());
  Rational r(mant);
  if (e >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ValidationError("malformed rational: empty string");
  auto valid_int = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw ValidationError("malformed rational: '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw ValidationError("malformed rational: zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Rational pow2(long exponent) {
  Rational r(1);
  if (exponent >= 0) {
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(exponent));
  } else {
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-exponent));
  }
  return r;
}

Rational round_dyadic(const Rational& x, long bits) {
  if (x.get_den() == 1) return x;
  Rational scaled = x * pow2(bits);
  Integer n = floor(Rational(scaled + Rational(1, 2)));
  return Rational(n) * pow2(-bits);
}

Rational sqrt_upper(const Rational& x, long bits) {
  if (x < 0) throw std::domain_error("sqrt_upper of negative value");
  if (x == 0) return 0;
  Mpfr a(bits + 16), r(bits + 16);
  mpfr_set_q(a.get(), x.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDU);
  return to_rational(r);
}

Rational sqrt_lower(const Rational& x, long bits) {
  if (x < 0) throw std::domain_error("sqrt_lower of negative value");
  if (x == 0) return 0;
  Mpfr a(bits + 16), r(bits + 16);
  mpfr_set_q(a.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDD);
  return to_rational(r);
}

Rational log_lower(const Rational& x, long bits) {
  if (x <= 0) throw std::domain_error("log of non-positive value");
  Mpfr a(bits + 16), r(bits + 16);
  mpfr_set_q(a.get(), x.get_mpq_t(), MPFR_RNDD);
  mpfr_log(r.get(), a.get(), MPFR_RNDD);
  return to_rational(r);
}

Rational log_upper(const Rational& x, long bits) {
  if (x <= 0) throw std::domain_error("log of non-positive value");
  Mpfr a(bits + 16), r(bits + 16);
  mpfr_set_q(a.get(), x.get_mpq_t(), MPFR_RNDU);
  mpfr_log(r.get(), a.get(), MPFR_RNDU);
  return to_rational(r);
}

std::int64_t euler_phi(std::int64_t m) {
  std::int64_t result = m;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

Rational best_rational(long double x, const Integer& max_den) {
  // Convergents of the continued fraction of x, stopping at max_den.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  long double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    long double a_ld = std::floor(rest);
    Integer a(static_cast<double>(a_ld));
    if (std::fabs(a_ld) > 1e17L) break;
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    long double frac = rest - a_ld;
    if (frac < 1e-18L) break;
    rest = 1.0L / frac;
  }
  if (q1 == 0) return Rational(Integer(static_cast<double>(std::floor(x))));
  Rational r(p1, q1);
  r.canonicalize();
  return r;
}

long double to_long_double(const Rational& x) {
  Mpfr a(64);
  mpfr_set_q(a.get(), x.get_mpq_t(), MPFR_RNDN);
  return mpfr_get_ld(a.get(), MPFR_RNDN);
}

Rational from_double(double x) {
  Rational r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

}  // namespace torunits
