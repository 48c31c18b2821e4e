#pragma once

#include "torunits/berend.hpp"
#include "torunits/orbit.hpp"

namespace torunits {

/// Finite quasi-orbits of denominator <= qmax plus the infinite one. Only
/// valid when the verdict is ID; otherwise throws ValidationError.
QuasiOrbitSpace quasi_orbit_space(const ToralRep& rep, std::int64_t qmax, const IDVerdict& verdict);

/// One stratum {[x]} x (G_x)^ of the primitive ideal space.
struct PrimStratum {
  FiniteOrbit orbit;
  IsotropySubgroup isotropy;
  CharacterGroupDescriptor characters;
};

struct PrimDescription {
  std::vector<PrimStratum> strata;
  bool omega_infinity = false;
};

/// Strata for every finite orbit with q <= qmax; omega_infinity when ID.
PrimDescription prim_description(const ToralRep& rep, std::int64_t qmax, const IDVerdict& verdict);

}  // namespace torunits
