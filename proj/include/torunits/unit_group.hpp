#pragma once

#include <string>
#include <vector>

#include "torunits/number_field.hpp"

namespace torunits {

/// torsion_gen^torsion_exp * prod free_gens[i]^exponents[i]
struct UnitWord {
  long torsion_exp = 0;
  std::vector<long> exponents;

  bool operator==(const UnitWord& o) const { return torsion_exp == o.torsion_exp && exponents == o.exponents; }
};

/// A verified finite-index subgroup W x <free_gens> of the unit group.
struct UnitGroupData {
  FieldPtr field;
  FieldElement torsion_gen;
  long torsion_order = 1;
  std::vector<FieldElement> free_gens;
  /// Enclosure of |det| of the log-embedding matrix; excludes 0.
  RealInterval regulator;
  /// "user-supplied" or "continued fraction (real quadratic)".
  std::string provenance;
  /// True only when the free part is known to be a full system of fundamental units.
  bool fundamental = false;

  int rank() const { return static_cast<int>(free_gens.size()); }
  UnitWord identity() const { return {0, std::vector<long>(free_gens.size(), 0)}; }
};

int unit_rank(const NumberField& field);

struct TorsionUnits {
  FieldElement generator;
  long order = 1;
};

/// Roots of unity: (-1, 2) when there is a real embedding, otherwise short
/// vector enumeration for T2 <= d(1 + 2^-20)^2 and an exact order test. The
/// generator is the one mapped to exp(2 pi i / w) by the first embedding.
TorsionUnits torsion_units(const NumberField& field);

/// Exact multiplicative order of a root of unity, or 0 if a is not one.
long root_of_unity_order(const NumberField& field, const FieldElement& a);

/// Checks candidates (integral, norm +-1, independent) and certifies the
/// regulator. Throws ValidationError for bad or dependent candidates (the
/// message exhibits the relation) and UndeterminedError on precision exhaustion.
UnitGroupData verify_units(FieldPtr field, const std::vector<FieldElement>& candidates,
                           std::string provenance = "user-supplied");

/// Fundamental unit of the order spanned by the integral basis of a real
/// quadratic field, normalized so that sigma_1(u) > 1.
FieldElement fundamental_unit_real_quadratic(const NumberField& field);

FieldElement evaluate_word(const UnitGroupData& g, const UnitWord& word);

/// Certified log|sigma_k(u)| for k = 1..r+s (1-based handles).
RealInterval log_embedding(const NumberField& field, const FieldElement& u, int index, long bits);

std::string to_string(const UnitWord& w);

}  // namespace torunits
