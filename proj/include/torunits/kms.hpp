#pragma once

#include <complex>
#include <string>
#include <vector>

#include "torunits/berend.hpp"
#include "torunits/orbit.hpp"

namespace torunits {

enum class ClassificationStatus { imaginary_quadratic_complete, rank_one_poulsen, cm_incomplete, non_cm_conjectural, undetermined };
std::string to_string(ClassificationStatus s);

struct StatusReport {
  ClassificationStatus status = ClassificationStatus::undetermined;
  std::string notes;
};

StatusReport classification_status(const IDVerdict& verdict);

enum class MeasureKind { finite_orbit, haar };

/// (ideal class, ergodic measure, character of its isotropy group).
struct ExtremalTraceParam {
  std::string ideal_label;
  MeasureKind kind = MeasureKind::haar;
  FiniteOrbit orbit;            // finite_orbit only
  IsotropySubgroup isotropy;    // finite_orbit only
  CharacterValue character;
  std::string rep_id;
};

ExtremalTraceParam orbit_param(const ToralRep& rep, const FiniteOrbit& orbit, const IsotropySubgroup& h,
                               CharacterValue chi);
/// Haar measure with the trivial character; its isotropy is recorded as trivial.
ExtremalTraceParam haar_param(const ToralRep& rep);

/// tau(delta_j U_u) with j given by its coordinates in the ideal basis.
std::complex<double> evaluate_trace(const ExtremalTraceParam& p, const ToralRep& rep, const std::vector<Integer>& j,
                                    const UnitWord& u);
/// j as a field element; throws ValidationError when j is not in the ideal.
std::complex<double> evaluate_trace(const ExtremalTraceParam& p, const ToralRep& rep, const FieldElement& j,
                                    const UnitWord& u);

/// Gram matrix of tau over the elements delta_{j_a} U_{u_a}; returns its
/// smallest eigenvalue.
double trace_gram_min_eigenvalue(const ExtremalTraceParam& p, const ToralRep& rep,
                                 const std::vector<std::vector<Integer>>& js, const std::vector<UnitWord>& us);

struct OrbitStratum {
  FiniteOrbit orbit;
  IsotropySubgroup isotropy;
  CharacterGroupDescriptor characters;
  /// Number of torsion characters, |V|; the free part is a torus of rank n.
  Integer torsion_characters;
  /// Optional rational grid of characters (torsion index x angle grid).
  std::vector<CharacterValue> sample;
};

struct IdealCatalog {
  std::string label;
  std::string rep_id;
  std::vector<OrbitStratum> strata;
  bool haar = false;
};

struct Catalog {
  std::vector<IdealCatalog> ideals;
  StatusReport status;
  int torus_rank = 0;
  std::int64_t qmax = 1;
  /// Sum of torsion character counts over all strata (all parameters when rank 0).
  Integer discrete_parameters;
};

/// angle_grid > 0 emits characters with angles in (1/angle_grid) Z^n / Z^n.
Catalog enumerate_extremal_params(const std::vector<ToralRep>& reps, std::int64_t qmax, const StatusReport& status,
                                  int angle_grid = 0, Exec exec = Exec::parallel);

/// Isotropy of every orbit of one denominator.
std::vector<IsotropySubgroup> isotropy_all(const std::vector<FiniteOrbit>& orbits, const FiniteGroupModQ& group,
                                           const ToralRep& rep, Exec exec = Exec::parallel);

}  // namespace torunits
