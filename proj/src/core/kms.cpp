#include "torunits/kms.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <exception>

namespace torunits {

std::string to_string(ClassificationStatus s) {
  switch (s) {
    case ClassificationStatus::imaginary_quadratic_complete: return "imaginary_quadratic_complete";
    case ClassificationStatus::rank_one_poulsen: return "rank_one_poulsen";
    case ClassificationStatus::cm_incomplete: return "cm_incomplete";
    case ClassificationStatus::non_cm_conjectural: return "non_cm_conjectural";
    case ClassificationStatus::undetermined: return "undetermined";
  }
  return "undetermined";
}

StatusReport classification_status(const IDVerdict& verdict) {
  StatusReport r;
  if (verdict.rank == 0) {
    r.status = ClassificationStatus::imaginary_quadratic_complete;
    r.notes = "finite unit group; every orbit is finite and the catalog is complete";
  } else if (verdict.rank == 1) {
    r.status = ClassificationStatus::rank_one_poulsen;
    r.notes = "rank one; invariant measures are not limited to finite orbits and Haar measure";
  } else if (verdict.cm.state == CMState::cm) {
    r.status = ClassificationStatus::cm_incomplete;
    r.notes = "CM field; real subtori carry further invariant measures, catalog lists finite orbits and Haar only";
  } else if (verdict.cm.state == CMState::not_cm) {
    r.status = ClassificationStatus::non_cm_conjectural;
    r.notes = "complete if the measure rigidity conjecture holds for this action";
  } else {
    r.status = ClassificationStatus::undetermined;
    r.notes = "CM test undetermined: " + verdict.cm.reason;
  }
  return r;
}

ExtremalTraceParam orbit_param(const ToralRep& rep, const FiniteOrbit& orbit, const IsotropySubgroup& h,
                               CharacterValue chi) {
  if (orbit.rep_id != rep.id() || h.rep_id != rep.id())
    throw ValidationError("orbit or isotropy data belong to a different representation");
  if (chi.torsion_index < 0 || Integer(chi.torsion_index) >= h.torsion_order)
    throw ValidationError("torsion character index out of range");
  if (static_cast<int>(chi.angles.size()) != h.free_rank) throw ValidationError("character has the wrong number of angles");
  ExtremalTraceParam p;
  p.ideal_label = rep.ideal().label;
  p.kind = MeasureKind::finite_orbit;
  p.orbit = orbit;
  p.isotropy = h;
  p.character = std::move(chi);
  p.rep_id = rep.id();
  return p;
}

ExtremalTraceParam haar_param(const ToralRep& rep) {
  ExtremalTraceParam p;
  p.ideal_label = rep.ideal().label;
  p.kind = MeasureKind::haar;
  const int n = rep.rank();
  std::vector<Integer> wt(n + 1, Integer(0));
  wt[n] = rep.torsion_order();
  p.isotropy.lattice = Lattice::from_vectors({wt}, n + 1);
  p.isotropy.torsion_order = 1;
  p.isotropy.rep_id = rep.id();
  p.rep_id = rep.id();
  return p;
}

namespace {

bool is_identity(const UnitWord& u, long w) {
  if (u.torsion_exp % w != 0) return false;
  for (long e : u.exponents)
    if (e != 0) return false;
  return true;
}

}  // namespace

std::complex<double> evaluate_trace(const ExtremalTraceParam& p, const ToralRep& rep, const std::vector<Integer>& j,
                                    const UnitWord& u) {
  if (p.rep_id != rep.id()) throw ValidationError("trace parameter belongs to a different representation");
  if (static_cast<int>(j.size()) != rep.dim()) throw ValidationError("j has the wrong dimension");
  if (static_cast<int>(u.exponents.size()) != rep.rank()) throw ValidationError("unit word has the wrong rank");
  if (p.kind == MeasureKind::haar) {
    bool zero = true;
    for (const auto& c : j) zero = zero && c == 0;
    return (zero && is_identity(u, rep.torsion_order())) ? 1.0 : 0.0;
  }
  if (!p.isotropy.contains(u)) return 0.0;
  const auto chi = evaluate_character(p.isotropy, p.character, u);
  const Integer q(static_cast<long>(p.orbit.q));
  std::complex<double> sum = 0.0;
  for (auto code : p.orbit.codes) {
    auto x = decode_point(code, p.orbit.dim, p.orbit.q);
    Integer s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += j[i] * Integer(static_cast<long>(x[i]));
    Integer r = s % q;
    if (r < 0) r += q;
    sum += std::polar(1.0, 2 * M_PI * r.get_d() / q.get_d());
  }
  return chi * sum / static_cast<double>(p.orbit.size());
}

std::complex<double> evaluate_trace(const ExtremalTraceParam& p, const ToralRep& rep, const FieldElement& j,
                                    const UnitWord& u) {
  std::vector<Integer> coords;
  for (const auto& c : j.coords) {
    if (c.get_den() != 1) throw ValidationError("j is not in the ideal " + rep.ideal().label);
    coords.push_back(c.get_num());
  }
  if (!ideal_contains(rep.ideal(), coords)) throw ValidationError("j is not in the ideal " + rep.ideal().label);
  return evaluate_trace(p, rep, ideal_coordinates(rep.ideal(), coords), u);
}

double trace_gram_min_eigenvalue(const ExtremalTraceParam& p, const ToralRep& rep,
                                 const std::vector<std::vector<Integer>>& js, const std::vector<UnitWord>& us) {
  if (js.size() != us.size()) throw ValidationError("js and us differ in length");
  const long n = static_cast<long>(js.size());
  if (n == 0) return 0.0;
  const int d = rep.dim();
  // a_k = delta_{j_k} U_{u_k};  a_a^* a_b = delta_{u_a^-1 (j_b - j_a)} U_{u_a^-1 u_b}
  Eigen::MatrixXcd g(n, n);
  for (long a = 0; a < n; ++a) {
    UnitWord inv{-us[a].torsion_exp, {}};
    for (long e : us[a].exponents) inv.exponents.push_back(-e);
    // action on J in ideal coordinates is rho(u)^T
    IntegerMatrix act_inv = rep.matrix(inv).transpose();
    for (long b = 0; b < n; ++b) {
      std::vector<Integer> diff(d);
      for (int i = 0; i < d; ++i) {
        diff[i] = 0;
        for (int k = 0; k < d; ++k) diff[i] += act_inv(i, k) * (js[b][k] - js[a][k]);
      }
      UnitWord prod{inv.torsion_exp + us[b].torsion_exp, {}};
      for (std::size_t k = 0; k < inv.exponents.size(); ++k) prod.exponents.push_back(inv.exponents[k] + us[b].exponents[k]);
      g(a, b) = evaluate_trace(p, rep, diff, prod);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(g, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

std::vector<IsotropySubgroup> isotropy_all(const std::vector<FiniteOrbit>& orbits, const FiniteGroupModQ& group,
                                           const ToralRep& rep, Exec exec) {
  std::vector<IsotropySubgroup> out(orbits.size());
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < orbits.size(); ++i) out[i] = isotropy(orbits[i], group, rep);
    return out;
  }
  std::exception_ptr error;
  const long count = static_cast<long>(orbits.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = isotropy(orbits[i], group, rep);
    } catch (...) {
#pragma omp critical(torunits_isotropy_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

namespace {

std::vector<CharacterValue> character_sample(const IsotropySubgroup& h, int grid) {
  std::vector<CharacterValue> out;
  const long tors = h.torsion_order.get_si();
  const int n = h.free_rank;
  std::vector<long> idx(n, 0);
  while (true) {
    std::vector<Rational> angles;
    for (long i : idx) angles.emplace_back(Rational(i, grid));
    for (auto& a : angles) a.canonicalize();
    for (long k = 0; k < tors; ++k) out.push_back({k, angles});
    int pos = n - 1;
    while (pos >= 0 && idx[pos] == grid - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return out;
}

}  // namespace

Catalog enumerate_extremal_params(const std::vector<ToralRep>& reps, std::int64_t qmax, const StatusReport& status,
                                  int angle_grid, Exec exec) {
  if (qmax < 1) throw ValidationError("qmax must be at least 1");
  if (angle_grid < 0) throw ValidationError("angle grid must be non-negative");
  Catalog cat;
  cat.status = status;
  cat.qmax = qmax;
  cat.discrete_parameters = 0;
  for (const auto& rep : reps) {
    cat.torus_rank = rep.rank();
    IdealCatalog ic;
    ic.label = rep.ideal().label;
    ic.rep_id = rep.id();
    ic.haar = rep.rank() >= 1;
    for (std::int64_t q = 1; q <= qmax; ++q) {
      auto group = reduce_group_mod_q(rep, q);
      auto orbits = partition_denominator(rep, q);
      auto hs = isotropy_all(orbits, group, rep, exec);
      for (std::size_t i = 0; i < orbits.size(); ++i) {
        OrbitStratum s;
        s.orbit = std::move(orbits[i]);
        s.isotropy = std::move(hs[i]);
        s.characters = character_group(s.isotropy);
        s.torsion_characters = s.isotropy.torsion_order;
        if (angle_grid > 0) s.sample = character_sample(s.isotropy, angle_grid);
        cat.discrete_parameters += s.torsion_characters;
        ic.strata.push_back(std::move(s));
      }
    }
    cat.ideals.push_back(std::move(ic));
  }
  return cat;
}

}  // namespace torunits
