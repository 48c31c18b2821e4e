#include "torunits/quasi_orbits.hpp"

namespace torunits {

QuasiOrbitSpace quasi_orbit_space(const ToralRep& rep, std::int64_t qmax, const IDVerdict& verdict) {
  if (verdict.rep_id != rep.id()) throw ValidationError("verdict was computed for a different representation");
  if (verdict.verdict != Verdict::id)
    throw ValidationError("quasi-orbit space description valid only under ID (verdict: " + to_string(verdict.verdict) +
                          ")");
  QuasiOrbitSpace out;
  for (std::int64_t q = 1; q <= qmax; ++q) {
    auto orbits = partition_denominator(rep, q);
    out.finite_quasi_orbits.insert(out.finite_quasi_orbits.end(), orbits.begin(), orbits.end());
  }
  out.omega_infinity = true;
  return out;
}

PrimDescription prim_description(const ToralRep& rep, std::int64_t qmax, const IDVerdict& verdict) {
  if (verdict.rep_id != rep.id()) throw ValidationError("verdict was computed for a different representation");
  PrimDescription out;
  out.omega_infinity = verdict.verdict == Verdict::id;
  for (std::int64_t q = 1; q <= qmax; ++q) {
    auto group = reduce_group_mod_q(rep, q);
    for (auto& o : partition_denominator(rep, q)) {
      auto h = isotropy(o, group, rep);
      auto c = character_group(h);
      out.strata.push_back({std::move(o), std::move(h), std::move(c)});
    }
  }
  return out;
}

}  // namespace torunits
