#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "torunits/toral_action.hpp"

namespace torunits {

/// d x d matrix mod q, row-major, entries in [0, q).
using ModMatrix = std::vector<std::int64_t>;

struct ModMatrixHash {
  std::size_t operator()(const ModMatrix& m) const noexcept;
};

ModMatrix reduce_mod(const IntegerMatrix& m, std::int64_t q);
ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, int d, std::int64_t q);
/// Matrix of a unit word mod q.
ModMatrix word_matrix_mod(const ToralRep& rep, const std::vector<Integer>& exponents, std::int64_t q);

/// Exponent vectors are (e_1, ..., e_n, t): free exponents first, torsion last.
std::vector<Integer> to_exponent_vector(const UnitWord& w);
UnitWord to_word(const std::vector<Integer>& v);

/// Image of the unit group in GL_d(Z/q).
struct FiniteGroupModQ {
  std::int64_t q = 1;
  int dim = 0;
  int rank = 0;
  long torsion_order = 1;
  /// free_1..free_n, torsion
  std::vector<ModMatrix> generators;
  std::vector<ModMatrix> elements;
  std::vector<std::vector<long>> labels;
  /// Exponent vectors acting trivially mod q; contains w * e_torsion.
  Lattice relations{1};
  std::string rep_id;

  std::size_t size() const { return elements.size(); }
  long index_of(const ModMatrix& m) const;

  std::unordered_map<ModMatrix, long, ModMatrixHash> lookup;
};

FiniteGroupModQ reduce_group_mod_q(const ToralRep& rep, std::int64_t q);

/// Points x / q with x in [0, q)^d are encoded as base-q integers, first
/// coordinate most significant, so code order is lexicographic order.
std::uint64_t encode_point(const std::vector<std::int64_t>& x, std::int64_t q);
std::vector<std::int64_t> decode_point(std::uint64_t code, int d, std::int64_t q);
std::vector<std::int64_t> mod_apply(const ModMatrix& m, const std::vector<std::int64_t>& x, std::int64_t q);

/// Orbit of a rational point; all points share the exact denominator q.
struct FiniteOrbit {
  std::int64_t q = 1;
  int dim = 0;
  std::uint64_t base = 0;
  /// Sorted point codes.
  std::vector<std::uint64_t> codes;
  std::string rep_id;

  std::size_t size() const { return codes.size(); }
  bool contains(std::uint64_t code) const;
  RationalTorusPoint point(std::size_t i) const;
  RationalTorusPoint base_point() const;
};

FiniteOrbit orbit_of(const RationalTorusPoint& x, const ToralRep& rep);
/// Orbits partitioning the points of exact denominator q, in order of their
/// lexicographically smallest point.
std::vector<FiniteOrbit> partition_denominator(const ToralRep& rep, std::int64_t q);
/// Number of points of exact denominator q in dimension d.
Integer exact_denominator_count(int d, std::int64_t q);

/// Stabilizer H of an orbit point as a lattice in Z^(n+1) containing w e_t.
struct IsotropySubgroup {
  Lattice lattice{1};
  Integer index;                             // [G : H]
  std::vector<Integer> quotient_invariants;  // G/H
  Integer torsion_order;                     // |V|, V = torsion of H
  int free_rank = 0;
  /// Coordinates y = char_basis * (coordinates in lattice basis): y_0 mod
  /// torsion_order is the V-part, y_1..y_n the free part.
  IntegerMatrix char_basis;
  long torsion_exponent_step = 1;  // H meets W in <gen^step>
  std::string rep_id;

  bool contains(const UnitWord& u) const;
};

/// Stabilizer scan in the finite quotient, pulled back through the relations.
/// Cross-checked against Schreier generators of the orbit BFS.
IsotropySubgroup isotropy(const FiniteOrbit& orbit, const FiniteGroupModQ& group, const ToralRep& rep);
/// Stabilizer lattice from Schreier generators of a labelled orbit BFS.
Lattice schreier_stabilizer(const RationalTorusPoint& x, const ToralRep& rep);

struct CharacterGroupDescriptor {
  std::vector<Integer> torsion_invariants;
  int torus_rank = 0;
};

CharacterGroupDescriptor character_group(const IsotropySubgroup& h);

/// Character of H: exp(2 pi i (torsion_index * y_0 / |V| + sum angles_j y_j)).
struct CharacterValue {
  long torsion_index = 0;
  std::vector<Rational> angles;

  bool operator==(const CharacterValue& o) const;
};

CharacterValue trivial_character(const IsotropySubgroup& h);
/// Throws ValidationError when u is not in H.
std::complex<double> evaluate_character(const IsotropySubgroup& h, const CharacterValue& chi, const UnitWord& u);

/// Pushforward along the restriction I^ -> J^.
struct Pushforward {
  FiniteOrbit image;
  std::size_t fiber_size = 0;
};

/// Throws InternalError if the image is not a single orbit or fibres are uneven.
Pushforward pushforward_orbit(const FiniteOrbit& orbit, const RestrictionMap& map, const ToralRep& target);
/// All x with C^T x = y mod 1 (there are |det C| of them).
std::vector<RationalTorusPoint> restriction_preimages(const RestrictionMap& map, const RationalTorusPoint& y);

/// Symbolic point of Prim: a finite quasi-orbit with a character of its
/// isotropy group, or the infinite quasi-orbit.
struct PrimPoint {
  bool omega_infinity = false;
  std::int64_t q = 1;
  std::uint64_t orbit_base = 0;
  CharacterValue character;
  std::string rep_id;

  static PrimPoint omega(std::string rep_id);
};

/// Closure rule on finite data: a sample flagged as an infinite family, or
/// one containing the infinite quasi-orbit, is dense; otherwise the closure
/// of a finite set of finite quasi-orbit points is itself.
bool prim_closure_contains(const PrimPoint& target, const std::vector<PrimPoint>& sample, bool declared_infinite);

struct QuasiOrbitSpace {
  std::vector<FiniteOrbit> finite_quasi_orbits;
  bool omega_infinity = true;
};

}  // namespace torunits
