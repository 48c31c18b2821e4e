#include "torunits/berend.hpp"

#include <complex>

#include <Eigen/Dense>

namespace torunits {

namespace {

void shell(int pos, long remaining, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  const int n = static_cast<int>(cur.size());
  if (pos == n - 1) {
    if (remaining == 0) {
      cur[pos] = 0;
      out.push_back(cur);
    } else {
      cur[pos] = -remaining;
      out.push_back(cur);
      cur[pos] = remaining;
      out.push_back(cur);
    }
    return;
  }
  for (long v = -remaining; v <= remaining; ++v) {
    cur[pos] = v;
    shell(pos + 1, remaining - std::labs(v), cur, out);
  }
}

std::vector<std::vector<long>> shell_words(int rank, long length) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(rank, 0);
  shell(0, length, cur, out);
  return out;
}

// deg minpoly(u^m) for m in M(d), stopping at the first drop.
bool power_test(const NumberField& k, const FieldElement& u, const std::vector<long>& ms, std::vector<int>& degrees) {
  degrees.clear();
  FieldElement p = k.one();
  long cur = 0;
  for (long m : ms) {
    p = k.multiply(p, k.pow(u, m - cur));
    cur = m;
    int deg = k.minimal_polynomial(p).degree();
    degrees.push_back(deg);
    if (deg != k.degree()) return false;
  }
  return true;
}

// Best rational approximation with denominator <= max_den, by continued fractions.
std::optional<Rational> reconstruct(long double x, long max_den) {
  long double v = x;
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    long double a = std::floor(v);
    if (std::fabs(a) > 1e15L) break;
    Integer ai(static_cast<long>(a));
    Integer p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    long double frac = v - a;
    if (std::fabs(static_cast<long double>(p1.get_d()) / q1.get_d() - x) < 1e-12L * (1 + std::fabs(x))) break;
    if (frac < 1e-18L) break;
    v = 1 / frac;
  }
  if (q1 == 0) return std::nullopt;
  Rational r(p1, q1);
  r.canonicalize();
  if (std::fabs(static_cast<long double>(r.get_d()) - x) > 1e-9L * (1 + std::fabs(x))) return std::nullopt;
  return r;
}

}  // namespace

FieldElement apply_automorphism(const NumberField& k, const FieldElement& gt, const FieldElement& a) {
  auto c = k.power_coords(a);
  FieldElement out = k.zero(), pw = k.one();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] != 0) {
      FieldElement term = pw;
      for (auto& x : term.coords) x *= c[i];
      out = k.add(out, term);
    }
    pw = k.multiply(pw, gt);
  }
  return out;
}

namespace {

long rank_of_columns(const IntegerMatrix& m) { return static_cast<long>(Lattice::from_rows(m.transpose()).rank()); }

}  // namespace

std::vector<long> power_test_set(int d) {
  const long bound = static_cast<long>(d) * d;
  // phi(m) >= sqrt(m / 2), so m <= 2 bound^2 covers every solution.
  std::vector<long> out;
  for (long m = 1; m <= 2 * bound * bound; ++m)
    if (euler_phi(m) <= bound) out.push_back(m);
  return out;
}

std::vector<std::vector<long>> enumerate_words(int rank, int budget) {
  std::vector<std::vector<long>> out;
  if (rank == 0) return out;
  for (long len = 1; len <= budget; ++len) {
    auto s = shell_words(rank, len);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::optional<TotalIrreducibilityCertificate> totally_irreducible_unit_search(const UnitGroupData& units, int budget,
                                                                              Exec exec) {
  if (units.rank() == 0) throw ValidationError("unit rank 0: no nontorsion unit to test");
  const NumberField& k = *units.field;
  const auto ms = power_test_set(k.degree());
  for (long len = 1; len <= budget; ++len) {
    auto words = shell_words(units.rank(), len);
    std::vector<char> ok(words.size(), 0);
    std::vector<std::vector<int>> degrees(words.size());
    if (exec == Exec::serial) {
      for (std::size_t i = 0; i < words.size(); ++i) {
        ok[i] = power_test(k, evaluate_word(units, {0, words[i]}), ms, degrees[i]);
        if (ok[i]) break;
      }
    } else {
      const long count = static_cast<long>(words.size());
#pragma omp parallel for schedule(dynamic)
      for (long i = 0; i < count; ++i) ok[i] = power_test(k, evaluate_word(units, {0, words[i]}), ms, degrees[i]);
    }
    for (std::size_t i = 0; i < words.size(); ++i)
      if (ok[i]) return TotalIrreducibilityCertificate{{0, words[i]}, ms, degrees[i]};
  }
  return std::nullopt;
}

bool recheck_certificate(const ToralRep& rep, const TotalIrreducibilityCertificate& cert) {
  IntegerMatrix m = rep.matrix(cert.word);
  IntegerMatrix p = IntegerMatrix::identity(rep.dim());
  long cur = 0;
  for (long e : cert.exponents) {
    p = p * matrix_power(m, static_cast<unsigned long>(e - cur));
    cur = e;
    if (!is_irreducible_q(charpoly(p))) return false;
  }
  return true;
}

std::string to_string(CMState s) {
  switch (s) {
    case CMState::cm: return "CM";
    case CMState::not_cm: return "not_CM";
    default: return "undetermined";
  }
}

std::optional<CMCertificate> find_cm_conjugation(const NumberField& k) {
  const int d = k.degree();
  if (k.signature().r != 0 || d % 2 != 0) return std::nullopt;
  const RationalPolynomial& f = k.poly();
  auto roots = isolate_roots(f, 120).all_roots();

  using C = std::complex<long double>;
  Eigen::Matrix<C, Eigen::Dynamic, Eigen::Dynamic> v(d, d);
  Eigen::Matrix<C, Eigen::Dynamic, 1> rhs(d);
  for (int j = 0; j < d; ++j) {
    C a(roots[j].approx_re(), roots[j].approx_im());
    C pw = 1;
    for (int i = 0; i < d; ++i) {
      v(j, i) = pw;
      pw *= a;
    }
    rhs(j) = std::conj(a);
  }
  Eigen::Matrix<C, Eigen::Dynamic, 1> sol = v.fullPivLu().solve(rhs);
  std::vector<Rational> power(d);
  for (int i = 0; i < d; ++i) {
    if (std::fabs(sol(i).imag()) > 1e-8L) return std::nullopt;
    auto r = reconstruct(sol(i).real(), 1000000);
    if (!r) return std::nullopt;
    power[i] = *r;
  }

  CMCertificate cert;
  cert.conjugation = k.from_power_coords(power);
  const FieldElement& g = cert.conjugation;
  // f(g) by Horner
  FieldElement acc = k.zero();
  for (int i = f.degree(); i >= 0; --i) acc = k.add(k.multiply(acc, g), k.from_integer(f.coeff(i).get_num()));
  cert.vanishes = acc.is_zero();
  if (!cert.vanishes) return cert;
  cert.involution = !(g == k.theta()) && apply_automorphism(k, g, g) == k.theta();

  auto boxes = isolate_roots(f, 80).all_roots();
  auto unique_overlap = [&](const CertifiedInterval& z) {
    int found = -1;
    for (std::size_t i = 0; i < boxes.size(); ++i)
      if (z.overlaps(boxes[i])) {
        if (found >= 0) return -2;
        found = static_cast<int>(i);
      }
    return found;
  };
  cert.embeddings_match = true;
  for (const auto& h : k.embeddings()) {
    int a = unique_overlap(k.embed(k.theta(), h, 80));
    int b = a >= 0 ? unique_overlap(boxes[a].conj()) : -1;
    int c = unique_overlap(k.embed(g, h, 80));
    if (a < 0 || b < 0 || c != b) cert.embeddings_match = false;
  }

  // theta^j + g(theta)^j lies in the fixed field; take the first of degree d/2.
  FieldElement tj = k.one(), gj = k.one();
  for (int j = 1; j <= d; ++j) {
    tj = k.multiply(tj, k.theta());
    gj = k.multiply(gj, g);
    auto mp = k.minimal_polynomial(k.add(tj, gj));
    if (mp.degree() != d / 2) continue;
    cert.fixed_field_poly = mp;
    cert.fixed_field_totally_real = isolate_roots(mp, 32).r() == mp.degree();
    break;
  }
  return cert;
}

CMStatus is_cm(const UnitGroupData& units, int budget) {
  const NumberField& k = *units.field;
  CMStatus out;
  if (k.signature().r >= 1) {
    out.state = CMState::not_cm;
    out.reason = "real embedding";
    return out;
  }
  if (units.rank() >= 1) {
    out.ti = totally_irreducible_unit_search(units, budget);
    if (out.ti) {
      out.state = CMState::not_cm;
      out.reason = "totally irreducible unit";
      return out;
    }
  }
  auto cert = find_cm_conjugation(k);
  if (cert && cert->valid()) {
    out.state = CMState::cm;
    out.reason = "conjugation certificate";
    out.cm = cert;
    return out;
  }
  out.state = CMState::undetermined;
  out.reason = "no totally irreducible unit within the word budget and no verified conjugation";
  return out;
}

ExpandingCertificate expanding_unit(const ToralRep& rep, const EmbeddingHandle& embedding, int budget) {
  if (rep.rank() == 0) throw ValidationError("unit rank 0: every unit has absolute value 1 at every embedding");
  const auto& units = rep.units();
  for (const auto& e : enumerate_words(rep.rank(), budget)) {
    UnitWord w{0, e};
    auto z = rep.field().embed(evaluate_word(units, w), embedding, 64);
    Rational lo = z.abs_lower(64);
    if (lo > 1) return {embedding.index, w, lo};
  }
  throw UndeterminedError("no expanding unit for embedding " + std::to_string(embedding.index) + " within budget " +
                          std::to_string(budget));
}

bool BerendConditions::c2_complete() const {
  if (c2.empty()) return false;
  for (const auto& c : c2)
    if (!c) return false;
  return true;
}

BerendConditions berend_conditions(const ToralRep& rep, int budget) {
  BerendConditions out;
  out.rank = rep.rank();
  out.c3 = out.rank >= 2;
  if (out.rank == 0) {
    out.c2.assign(rep.field().embeddings().size(), std::nullopt);
    return out;
  }
  out.c1 = totally_irreducible_unit_search(rep.units(), budget);
  for (const auto& h : rep.field().embeddings()) {
    try {
      out.c2.push_back(expanding_unit(rep, h, budget));
    } catch (const UndeterminedError&) {
      out.c2.push_back(std::nullopt);
    }
  }
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::id: return "ID";
    case Verdict::not_id: return "not_ID";
    default: return "undetermined";
  }
}

IDVerdict id_verdict(const ToralRep& rep, int budget) {
  IDVerdict out;
  out.rep_id = rep.id();
  out.rank = rep.rank();
  out.cm = is_cm(rep.units(), budget);
  out.conditions = berend_conditions(rep, budget);

  if (out.cm.state != CMState::undetermined)
    out.field_route = (out.cm.state == CMState::not_cm && out.rank >= 2) ? Verdict::id : Verdict::not_id;
  const auto& c = out.conditions;
  if (!c.c3) out.matrix_route = Verdict::not_id;
  else if (c.c1 && c.c2_complete()) out.matrix_route = Verdict::id;

  if (out.field_route != Verdict::undetermined && out.matrix_route != Verdict::undetermined &&
      out.field_route != out.matrix_route) {
    out.agreement = false;
    throw InternalError("field-level verdict " + to_string(out.field_route) + " disagrees with the Berend conditions (" +
                        to_string(out.matrix_route) + ")");
  }
  out.verdict = out.field_route != Verdict::undetermined ? out.field_route : out.matrix_route;
  return out;
}

std::vector<Integer> avoid_sublattices(const std::vector<IntegerMatrix>& spans, int d) {
  std::vector<long> ranks;
  for (const auto& s : spans) {
    if (s.rows() != static_cast<std::size_t>(d)) throw ValidationError("sublattice generators have the wrong dimension");
    long r = rank_of_columns(s);
    if (r >= d) throw ValidationError("sublattice of full rank cannot be avoided");
    ranks.push_back(r);
  }
  // A proper subspace meets the moment curve (1, t, ..., t^(d-1)) in at most d - 1 points.
  for (long t = 1;; ++t) {
    std::vector<Integer> m(d);
    Integer p = 1;
    for (int i = 0; i < d; ++i) {
      m[i] = p;
      p *= t;
    }
    bool good = true;
    for (std::size_t i = 0; i < spans.size() && good; ++i) {
      IntegerMatrix ext(d, spans[i].cols() + 1);
      for (int r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < spans[i].cols(); ++c) ext(r, c) = spans[i](r, c);
        ext(r, spans[i].cols()) = m[r];
      }
      good = rank_of_columns(ext) == ranks[i] + 1;
    }
    if (good) return m;
  }
}

}  // namespace torunits
