#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "torunits/exact/roots.hpp"

namespace torunits {

/// Element of K, stored by its coordinates in the field's integral basis.
struct FieldElement {
  std::vector<Rational> coords;

  bool operator==(const FieldElement& o) const { return coords == o.coords; }
  bool is_zero() const;
};

struct Signature {
  int r = 0;
  int s = 0;
};

enum class EmbeddingKind { real, complex };

/// Handle k (1-based): real embeddings first, in descending order of the root,
/// then complex embeddings by (re, im) of the upper-half-plane root.
struct EmbeddingHandle {
  int index = 0;
  EmbeddingKind kind = EmbeddingKind::real;
  CertifiedInterval root;
};

/// How much is known about the order spanned by the integral basis.
enum class OrderStatus { maximal_certified, maximal_builtin, user_supplied, power_basis_unverified };
std::string to_string(OrderStatus status);

/// K = Q[x]/(f) with a verified integral basis.
class NumberField {
 public:
  /// f must be monic with integer coefficients and irreducible. `basis`
  /// columns are basis elements in power coordinates (1, theta, ...).
  static std::shared_ptr<const NumberField> create(const RationalPolynomial& f,
                                                  const std::optional<RationalMatrix>& basis = std::nullopt);

  int degree() const { return d_; }
  const RationalPolynomial& poly() const { return f_; }
  Signature signature() const { return sig_; }
  const RationalMatrix& basis() const { return basis_; }
  const RationalMatrix& basis_inverse() const { return basis_inv_; }
  OrderStatus order_status() const { return order_status_; }
  /// Discriminant of the order spanned by the integral basis.
  const Integer& discriminant() const { return disc_; }
  /// Integer matrix of multiplication by the i-th basis element.
  const IntegerMatrix& structure_matrix(std::size_t i) const { return structure_[i]; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement theta() const;
  FieldElement from_integer(const Integer& n) const;
  FieldElement from_coords(std::vector<Rational> coords) const;
  FieldElement from_power_coords(const std::vector<Rational>& power) const;
  std::vector<Rational> power_coords(const FieldElement& a) const;
  RationalPolynomial as_polynomial(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement multiply(const FieldElement& a, const FieldElement& b) const;
  /// Throws ValidationError for a == 0.
  FieldElement invert(const FieldElement& a) const;
  /// Negative exponents invert first.
  FieldElement pow(const FieldElement& a, long e) const;

  /// Column j holds the coordinates of a * b_j.
  RationalMatrix multiplication_matrix(const FieldElement& a) const;
  Rational norm(const FieldElement& a) const;
  Rational trace(const FieldElement& a) const;
  RationalPolynomial minimal_polynomial(const FieldElement& a) const;
  bool is_integral(const FieldElement& a) const;

  /// Embedding handles at the default precision.
  const std::vector<EmbeddingHandle>& embeddings() const { return handles_; }
  /// Certified disc around sigma_k(a) with radius at most about 2^-bits.
  CertifiedInterval embed(const FieldElement& a, const EmbeddingHandle& e, long bits = 64) const;
  CertifiedInterval embed(const FieldElement& a, int index, long bits = 64) const;
  /// Root boxes of f in handle order, refined to radius <= 2^-bits.
  std::vector<CertifiedInterval> roots(long bits) const;

  std::string element_to_string(const FieldElement& a) const;

 private:
  NumberField() = default;
  void check_dim(const FieldElement& a) const;

  RationalPolynomial f_;
  int d_ = 0;
  Signature sig_;
  RationalMatrix basis_;
  RationalMatrix basis_inv_;
  std::vector<IntegerMatrix> structure_;
  OrderStatus order_status_ = OrderStatus::power_basis_unverified;
  Integer disc_;
  std::vector<EmbeddingHandle> handles_;

  struct RootCache {
    std::mutex mutex;
    std::vector<std::pair<long, std::vector<CertifiedInterval>>> levels;
  };
  std::shared_ptr<RootCache> cache_ = std::make_shared<RootCache>();
};

using FieldPtr = std::shared_ptr<const NumberField>;

}  // namespace torunits
