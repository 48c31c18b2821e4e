#include "torunits/exact/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace torunits {

namespace {

struct ComplexRational {
  Rational re = 0;
  Rational im = 0;
};

ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) { return {a.re - b.re, a.im - b.im}; }
ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Rational norm2(const ComplexRational& a) { return a.re * a.re + a.im * a.im; }
ComplexRational divide(const ComplexRational& a, const ComplexRational& b) {
  Rational n = norm2(b);
  return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

ComplexRational horner(const RationalPolynomial& p, const ComplexRational& z) {
  ComplexRational acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * z;
    acc.re += p.coeff(k);
  }
  return acc;
}

Rational power_of_two_above(const Rational& x) {
  Rational b = 1;
  while (b <= x) b *= 2;
  return b;
}

// Splits (a, b] at a dyadic point that is not a root.
Rational split_point(const RationalPolynomial& p, const Rational& a, const Rational& b) {
  Rational mid = (a + b) / 2;
  for (long t = 3; p.sign_at(mid) == 0; ++t) mid = (a + b) / 2 + (b - a) * pow2(-t);
  return mid;
}

struct RealBracket {
  Rational lo, hi;
  bool exact = false;  // lo == hi is the root
};

std::vector<RealBracket> isolate_real(const RationalPolynomial& p) {
  auto chain = sturm_chain(p);
  Rational bound = power_of_two_above(cauchy_bound(p));
  std::vector<RealBracket> found;
  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [a, b] = work.back();
    work.pop_back();
    int c = sturm_count(chain, a, b);
    if (c == 0) continue;
    if (c == 1) {
      found.push_back({a, b, false});
      continue;
    }
    Rational m = split_point(p, a, b);
    work.emplace_back(m, b);
    work.emplace_back(a, m);
  }
  std::sort(found.begin(), found.end(), [](const RealBracket& x, const RealBracket& y) { return x.lo < y.lo; });
  return found;
}

// Bisection on a bracket with one simple root and nonzero endpoint values.
void refine_real(const RationalPolynomial& p, RealBracket& br, const Rational& max_width) {
  if (br.exact) return;
  int s_lo = p.sign_at(br.lo);
  while (br.hi - br.lo > max_width) {
    Rational m = (br.lo + br.hi) / 2;
    int s = p.sign_at(m);
    if (s == 0) {
      br.lo = br.hi = m;
      br.exact = true;
      return;
    }
    if (s == s_lo) {
      br.lo = m;
    } else {
      br.hi = m;
    }
  }
}

using cld = std::complex<long double>;

std::vector<cld> aberth(const RationalPolynomial& p) {
  const int n = p.degree();
  std::vector<long double> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = to_long_double(p.coeff(k) / p.leading());
  long double radius = 0;
  for (int k = 0; k < n; ++k) radius = std::max(radius, std::pow(std::fabs(c[k]), 1.0L / (n - k)));
  radius = std::max(radius, 1.0L);
  std::vector<cld> z(n);
  for (int k = 0; k < n; ++k) {
    long double ang = 2.0L * 3.14159265358979323846L * (k + 0.25L) / n + 0.4L;
    z[k] = std::polar(radius, ang);
  }
  auto eval = [&](cld x, cld& dp) {
    cld v = c[n];
    dp = 0;
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * x + v;
      v = v * x + c[k];
    }
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double max_step = 0;
    for (int i = 0; i < n; ++i) {
      cld dp;
      cld v = eval(z[i], dp);
      if (v == cld(0)) continue;
      cld ratio = v / dp;
      cld sum = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) sum += 1.0L / (z[i] - z[j]);
      cld step = ratio / (1.0L - ratio * sum);
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0L, std::abs(z[i])));
    }
    if (max_step < 1e-17L) break;
  }
  return z;
}

// Newton polish in exact arithmetic, rounding the iterate to `bits` bits.
ComplexRational newton_polish(const RationalPolynomial& p, const RationalPolynomial& dp, ComplexRational z,
                              long bits, int steps) {
  for (int k = 0; k < steps; ++k) {
    ComplexRational d = horner(dp, z);
    if (norm2(d) == 0) break;
    ComplexRational step = divide(horner(p, z), d);
    z.re = round_dyadic(z.re - step.re, bits);
    z.im = round_dyadic(z.im - step.im, bits);
    if (norm2(step) < pow2(-2 * bits)) break;
  }
  return z;
}

}  // namespace

std::vector<CertifiedInterval> RootIsolation::all_roots() const {
  std::vector<CertifiedInterval> all = real_roots;
  for (const auto& c : complex_roots) {
    all.push_back(c);
    all.push_back(c.conj());
  }
  return all;
}

RootIsolation isolate_roots(const RationalPolynomial& p, long precision_bits) {
  if (p.degree() <= 0) throw ValidationError("constant polynomial has no roots to isolate");
  RationalPolynomial g = gcd(p, p.derivative());
  if (g.degree() > 0) {
    throw ValidationError("polynomial is not squarefree; repeated-factor gcd = " + g.to_string());
  }
  const int n = p.degree();
  const Rational target = pow2(-precision_bits);
  RootIsolation out;
  out.precision_bits = precision_bits;

  auto brackets = isolate_real(p);
  for (auto& br : brackets) refine_real(p, br, 2 * target);
  for (const auto& br : brackets) {
    Rational c = (br.lo + br.hi) / 2;
    out.real_roots.push_back({c, 0, (br.hi - br.lo) / 2});
  }
  const int r = static_cast<int>(brackets.size());
  const int s = (n - r) / 2;
  if (s == 0) return out;

  // Upper-half-plane seeds: the s Aberth approximations with largest imaginary part.
  auto approx = aberth(p);
  std::sort(approx.begin(), approx.end(), [](const cld& a, const cld& b) { return a.imag() > b.imag(); });
  std::vector<ComplexRational> upper;
  for (int k = 0; k < s; ++k) {
    upper.push_back({round_dyadic(from_double(static_cast<double>(approx[k].real())), 60),
                     round_dyadic(from_double(static_cast<double>(std::fabs(approx[k].imag()))), 60)});
  }

  const RationalPolynomial dp = p.derivative();
  const Rational lead = p.leading();
  for (long bits = std::max(64L, precision_bits + 16);; bits *= 2) {
    if (bits > 16 * std::max(64L, precision_bits + 16)) {
      throw UndeterminedError("complex root certification did not converge; raise precision");
    }
    for (auto& z : upper) z = newton_polish(p, dp, z, bits, 200);

    std::vector<ComplexRational> pts;
    for (const auto& rr : out.real_roots) pts.push_back({rr.re, 0});
    for (const auto& z : upper) {
      pts.push_back(z);
      pts.push_back({z.re, -z.im});
    }
    std::vector<Rational> radius(pts.size());
    bool distinct = true;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      ComplexRational denom{lead, 0};
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j == i) continue;
        denom = denom * (pts[i] - pts[j]);
      }
      if (norm2(denom) == 0) {
        distinct = false;
        break;
      }
      ComplexRational w = divide(horner(p, pts[i]), denom);
      radius[i] = n * sqrt_upper(norm2(w), bits);
    }
    if (!distinct) continue;

    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        Rational sum = radius[i] + radius[j];
        if (norm2(pts[i] - pts[j]) <= sum * sum) {
          ok = false;
          break;
        }
      }
    std::vector<CertifiedInterval> cplx;
    for (int k = 0; k < s && ok; ++k) {
      std::size_t idx = static_cast<std::size_t>(r + 2 * k);
      const Rational& rad = radius[idx];
      if (!(pts[idx].im > rad) || rad > target) ok = false;
      cplx.push_back({pts[idx].re, pts[idx].im, rad});
    }
    if (!ok) continue;
    std::sort(cplx.begin(), cplx.end(), [](const CertifiedInterval& a, const CertifiedInterval& b) {
      return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
    out.complex_roots = std::move(cplx);
    return out;
  }
}

}  // namespace torunits
