#include "torunits/exact/polynomial.hpp"

#include <sstream>

namespace torunits {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

bool RationalPolynomial::has_integer_coefficients() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1) return false;
  return true;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-() const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v = -v;
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const { return *this + (-o); }

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> c(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::scaled(const Rational& s) const {
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v *= s;
  return RationalPolynomial(std::move(c));
}

void RationalPolynomial::divmod(const RationalPolynomial& d, RationalPolynomial& q, RationalPolynomial& r) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = d.degree();
  std::vector<Rational> quot(std::max(0, degree() - dd + 1), Rational(0));
  const Rational inv_lead = 1 / d.leading();
  for (int k = degree(); k >= dd; --k) {
    Rational c = rem[k] * inv_lead;
    if (c == 0) continue;
    quot[k - dd] = c;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * d.coeffs_[j];
  }
  q = RationalPolynomial(std::move(quot));
  r = RationalPolynomial(std::move(rem));
}

RationalPolynomial RationalPolynomial::operator/(const RationalPolynomial& d) const {
  RationalPolynomial q, r;
  divmod(d, q, r);
  return q;
}

RationalPolynomial RationalPolynomial::operator%(const RationalPolynomial& d) const {
  RationalPolynomial q, r;
  divmod(d, q, r);
  return r;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(c));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  return scaled(1 / leading());
}

RationalPolynomial RationalPolynomial::pow(unsigned e) const {
  RationalPolynomial result = constant(1), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int RationalPolynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

std::vector<Integer> RationalPolynomial::primitive_integer_coeffs() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : coeffs_) den = lcm(den, c.get_den());
  std::vector<Integer> ints;
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den / c.get_den());
    content = gcd(content, v);
    ints.push_back(v);
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return ints;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) os << torunits::to_string(a);
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = x % y;
    x = y;
    y = r.is_zero() ? r : r.monic();
  }
  return x.monic();
}

RationalPolynomial squarefree_part(const RationalPolynomial& p) {
  RationalPolynomial g = gcd(p, p.derivative());
  return (p / g).monic();
}

bool is_squarefree(const RationalPolynomial& p) { return gcd(p, p.derivative()).degree() == 0; }

std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p) {
  std::vector<RationalPolynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    RationalPolynomial r = chain[chain.size() - 2] % chain.back();
    if (r.is_zero()) break;
    // Positive rescaling keeps the signs and the coefficients small.
    std::vector<Integer> prim = r.primitive_integer_coeffs();
    std::vector<Rational> rc(prim.begin(), prim.end());
    RationalPolynomial scaled(std::move(rc));
    if (sgn(scaled.leading()) != sgn(r.leading())) scaled = -scaled;
    chain.push_back(-scaled);
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<RationalPolynomial>& chain, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& q : chain) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

int sturm_count(const std::vector<RationalPolynomial>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

Rational cauchy_bound(const RationalPolynomial& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k) / p.leading())));
  return 1 + m;
}

RationalPolynomial charpoly(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("charpoly of non-square matrix");
  const std::size_t n = m.rows();
  // Interpolate det(x I - m) at x = 0..n, then fix the monic leading term.
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    RationalMatrix a = m.scaled(-1);
    for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<long>(k);
    xs.emplace_back(static_cast<long>(k));
    ys.push_back(determinant(a));
  }
  RationalPolynomial result;
  for (std::size_t i = 0; i <= n; ++i) {
    RationalPolynomial basis = RationalPolynomial::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      basis = basis * RationalPolynomial::linear(xs[j]);
      denom *= xs[i] - xs[j];
    }
    result = result + basis.scaled(ys[i] / denom);
  }
  return result;
}

RationalPolynomial charpoly(const IntegerMatrix& m) { return charpoly(to_rational(m)); }

RationalMatrix companion_matrix(const RationalPolynomial& p) {
  if (!p.is_monic() || p.degree() < 1) throw std::invalid_argument("companion matrix needs a monic polynomial");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  RationalMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
  return c;
}

}  // namespace torunits
