#pragma once

#include <string>
#include <vector>

#include "torunits/exact/matrix.hpp"

namespace torunits {

/// Univariate polynomial with rational coefficients, lowest degree first.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  RationalPolynomial(std::initializer_list<long> coeffs);
  static RationalPolynomial constant(const Rational& c) { return RationalPolynomial(std::vector<Rational>{c}); }
  static RationalPolynomial x() { return RationalPolynomial({0, 1}); }
  /// (x - root)
  static RationalPolynomial linear(const Rational& root) { return RationalPolynomial(std::vector<Rational>{-root, 1}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool has_integer_coefficients() const;

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator-() const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial scaled(const Rational& c) const;
  bool operator==(const RationalPolynomial& o) const { return coeffs_ == o.coeffs_; }

  /// Euclidean division: *this == q * d + r, deg r < deg d.
  void divmod(const RationalPolynomial& d, RationalPolynomial& q, RationalPolynomial& r) const;
  RationalPolynomial operator/(const RationalPolynomial& d) const;
  RationalPolynomial operator%(const RationalPolynomial& d) const;

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;
  RationalPolynomial pow(unsigned e) const;
  Rational operator()(const Rational& x) const;
  /// Sign of p(x) without building the full value when x is an integer is not
  /// worth it here; this is plain Horner evaluation.
  int sign_at(const Rational& x) const;

  /// Primitive integer polynomial with positive leading coefficient that is a
  /// rational multiple of *this.
  std::vector<Integer> primitive_integer_coeffs() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd (zero if both are zero).
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);
/// Squarefree part p / gcd(p, p'), made monic.
RationalPolynomial squarefree_part(const RationalPolynomial& p);
bool is_squarefree(const RationalPolynomial& p);

/// Sturm chain p, p', -rem(...), ...
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& p);
/// Number of distinct real roots in the half-open interval (a, b].
int sturm_count(const std::vector<RationalPolynomial>& chain, const Rational& a, const Rational& b);
/// Cauchy bound: every complex root has modulus < bound.
Rational cauchy_bound(const RationalPolynomial& p);

/// det(x I - m), monic of degree n.
RationalPolynomial charpoly(const RationalMatrix& m);
RationalPolynomial charpoly(const IntegerMatrix& m);

/// Exact irreducibility over Q. Throws ValidationError on degree <= 0.
bool is_irreducible_q(const RationalPolynomial& p);

/// Companion matrix of a monic polynomial (columns: x * x^k mod p).
RationalMatrix companion_matrix(const RationalPolynomial& p);

/// Factor degrees of p mod prime (distinct-degree factorization of a
/// squarefree reduction). Empty if p is not squarefree mod prime or the
/// leading coefficient vanishes.
std::vector<int> factor_degrees_mod_p(const std::vector<Integer>& primitive, std::uint64_t prime);

}  // namespace torunits
