#pragma once

#include <string>
#include <vector>

#include "torunits/ideal.hpp"
#include "torunits/unit_group.hpp"

namespace torunits {

/// Point of the torus with rational coordinates num[i] / q, 0 <= num[i] < q,
/// where q is the exact common denominator (q = 1 only for the origin).
struct RationalTorusPoint {
  std::vector<Integer> num;
  Integer q = 1;

  bool operator==(const RationalTorusPoint& o) const { return q == o.q && num == o.num; }
  bool operator<(const RationalTorusPoint& o) const;
  int dim() const { return static_cast<int>(num.size()); }
  std::vector<Rational> coords() const;
};

RationalTorusPoint make_point(const std::vector<Rational>& coords);
/// Numerators taken mod q and reduced to the exact denominator.
RationalTorusPoint make_point(const std::vector<Integer>& numerators, const Integer& q);
std::string to_string(const RationalTorusPoint& x);

/// A_a: column j holds the coordinates of a * b_j. Throws for non-integral a.
IntegerMatrix multiplication_matrix(const NumberField& field, const FieldElement& a);

/// rho_J(u) = (B^-1 A_u B)^T with B the ideal basis.
IntegerMatrix toral_matrix(const NumberField& field, const FieldElement& u, const IntegralIdeal& ideal);

/// The representation of a verified unit group on the dual of one ideal.
/// Generator matrices are computed once at construction.
class ToralRep {
 public:
  ToralRep(UnitGroupData units, IntegralIdeal ideal);

  const UnitGroupData& units() const { return units_; }
  const IntegralIdeal& ideal() const { return ideal_; }
  const NumberField& field() const { return *units_.field; }
  int dim() const { return field().degree(); }
  int rank() const { return units_.rank(); }
  long torsion_order() const { return units_.torsion_order; }
  /// Identifier used to reject mixing data from different representations.
  std::string id() const;

  const IntegerMatrix& torsion_matrix() const { return torsion_; }
  const IntegerMatrix& free_matrix(int i) const { return free_[i]; }
  const IntegerMatrix& free_inverse(int i) const { return free_inv_[i]; }
  IntegerMatrix matrix(const UnitWord& word) const;

 private:
  UnitGroupData units_;
  IntegralIdeal ideal_;
  IntegerMatrix torsion_;
  std::vector<IntegerMatrix> free_;
  std::vector<IntegerMatrix> free_inv_;
};

IntegerMatrix toral_matrix(const ToralRep& rep, const UnitWord& word);

struct EigenCheck {
  bool ok = false;
  std::string diagnostics;
};

/// charpoly(rho(u)) == minpoly(u)^(d/deg) exactly, and every root box of the
/// minimal polynomial is hit by an embedding value of u.
EigenCheck verify_eigen_structure(const ToralRep& rep, const UnitWord& word);

RationalTorusPoint act(const RationalTorusPoint& x, const IntegerMatrix& m);
RationalTorusPoint act(const RationalTorusPoint& x, const UnitWord& word, const ToralRep& rep);

}  // namespace torunits
