#pragma once

#include <string>
#include <vector>

#include "torunits/exact/normal_form.hpp"
#include "torunits/number_field.hpp"

namespace torunits {

/// Integral ideal as a full-rank sublattice of O_K. Columns of `basis` are a
/// Z-basis in integral-basis coordinates; the matrix is the transpose of the
/// row Hermite form of the generating vectors, so equal ideals have equal bases.
struct IntegralIdeal {
  std::string label;
  IntegerMatrix basis;

  int dim() const { return static_cast<int>(basis.rows()); }
  bool same_lattice(const IntegralIdeal& o) const { return basis == o.basis; }
};

/// Z-span of g_i * b_j over generators g_i and integral-basis elements b_j.
IntegralIdeal make_ideal_from_generators(const NumberField& field, const std::vector<FieldElement>& generators,
                                         std::string label = "");
/// Columns are basis elements in integral-basis coordinates; closure is verified.
IntegralIdeal make_ideal_from_basis(const NumberField& field, const IntegerMatrix& columns, std::string label = "");
IntegralIdeal unit_ideal(const NumberField& field, std::string label = "O_K");

Integer ideal_norm(const IntegralIdeal& ideal);
/// Least positive integer q with q O_K contained in the ideal.
Integer rational_shrink(const IntegralIdeal& ideal);
bool ideal_contains(const IntegralIdeal& ideal, const std::vector<Integer>& coords);
/// Coordinates of an O_K element (integral-basis coordinates) in the ideal basis.
std::vector<Integer> ideal_coordinates(const IntegralIdeal& ideal, const std::vector<Integer>& coords);

/// J inside I with basis_J = basis_I * c.
struct IdealInclusion {
  IntegralIdeal inner;
  IntegralIdeal outer;
  IntegerMatrix c;
  Integer index;
};

/// Throws ValidationError if inner is not contained in outer.
IdealInclusion make_inclusion(const IntegralIdeal& inner, const IntegralIdeal& outer);

/// Dual restriction I^ -> J^ on torus coordinates, t -> C^T t mod 1.
struct RestrictionMap {
  IntegerMatrix matrix;
  Integer fiber_count;
};

RestrictionMap restriction_map(const IdealInclusion& inclusion);

}  // namespace torunits
