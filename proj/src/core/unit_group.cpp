#include "torunits/unit_group.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

#include "torunits/exact/normal_form.hpp"

namespace torunits {

namespace {

using cld = std::complex<long double>;

cld approx(const CertifiedInterval& z) { return {z.approx_re(), z.approx_im()}; }

// Numerical sigma_k(b_i) for every basis element and every handle.
std::vector<std::vector<cld>> basis_embeddings(const NumberField& field) {
  const int d = field.degree();
  auto roots = field.roots(64);
  std::vector<std::vector<cld>> out(d);
  for (int i = 0; i < d; ++i) {
    std::vector<Rational> e(d, Rational(0));
    e[i] = 1;
    auto p = field.as_polynomial(FieldElement{e});
    for (const auto& root : roots) {
      cld z = approx(root), acc = 0;
      for (int k = p.degree(); k >= 0; --k) acc = acc * z + cld(to_long_double(p.coeff(k)), 0);
      out[i].push_back(acc);
    }
  }
  return out;
}

// All integer vectors x != 0 with x^T G x <= bound (Fincke-Pohst).
std::vector<std::vector<long>> short_vectors(const std::vector<std::vector<long double>>& g, long double bound) {
  const int n = static_cast<int>(g.size());
  std::vector<std::vector<long double>> q(n, std::vector<long double>(n, 0));
  for (int i = 0; i < n; ++i) {
    long double diag = g[i][i];
    for (int k = 0; k < i; ++k) diag -= q[k][k] * q[k][i] * q[k][i];
    q[i][i] = diag;
    for (int j = i + 1; j < n; ++j) {
      long double v = g[i][j];
      for (int k = 0; k < i; ++k) v -= q[k][k] * q[k][i] * q[k][j];
      q[i][j] = v / diag;
    }
  }
  std::vector<std::vector<long>> found;
  std::vector<long> x(n, 0);
  std::function<void(int, long double)> recurse = [&](int i, long double remaining) {
    if (i < 0) {
      bool nonzero = false;
      for (long v : x) nonzero |= v != 0;
      if (nonzero) found.push_back(x);
      return;
    }
    long double center = 0;
    for (int j = i + 1; j < n; ++j) center -= q[i][j] * x[j];
    long double radius = std::sqrt(std::max(0.0L, remaining / q[i][i]));
    long lo = static_cast<long>(std::ceil(center - radius - 1e-9L));
    long hi = static_cast<long>(std::floor(center + radius + 1e-9L));
    for (long v = lo; v <= hi; ++v) {
      x[i] = v;
      long double t = v - center;
      long double rest = remaining - q[i][i] * t * t;
      if (rest < -1e-9L) continue;
      recurse(i - 1, rest);
    }
    x[i] = 0;
  };
  recurse(n - 1, bound);
  return found;
}

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

int unit_rank(const NumberField& field) { return field.signature().r + field.signature().s - 1; }

long root_of_unity_order(const NumberField& field, const FieldElement& a) {
  if (a.is_zero() || !field.is_integral(a)) return 0;
  const int d = field.degree();
  long max_order = 1;
  for (long m = 1; m <= 2L * d * d + 2; ++m)
    if (euler_phi(m) <= d) max_order = m;
  FieldElement p = a;
  const FieldElement one = field.one();
  for (long k = 1; k <= max_order; ++k) {
    if (p == one) return k;
    p = field.multiply(p, a);
  }
  return 0;
}

TorsionUnits torsion_units(const NumberField& field) {
  if (field.signature().r >= 1) return {field.from_integer(-1), 2};
  const int d = field.degree();
  auto emb = basis_embeddings(field);
  std::vector<std::vector<long double>> gram(d, std::vector<long double>(d, 0));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (std::size_t k = 0; k < emb[i].size(); ++k) gram[i][j] += 2 * std::real(emb[i][k] * std::conj(emb[j][k]));
  const long double eps = std::ldexp(1.0L, -20);
  long double bound = d * (1 + eps) * (1 + eps);
  bound = bound * (1 + 1e-12L) + 1e-9L;

  std::vector<std::pair<FieldElement, long>> roots;
  for (const auto& x : short_vectors(gram, bound)) {
    FieldElement a{std::vector<Rational>(x.begin(), x.end())};
    long order = root_of_unity_order(field, a);
    if (order > 0) roots.emplace_back(std::move(a), order);
  }
  long w = static_cast<long>(roots.size());
  // The roots of unity form a cyclic group containing +-1.
  long max_order = 0;
  for (const auto& [a, o] : roots) max_order = std::max(max_order, o);
  if (w < 2 || max_order != w) throw InternalError("torsion enumeration is inconsistent");

  const long double two_pi = 6.283185307179586476925286766559L;
  long double best_arg = 10;
  FieldElement gen;
  for (const auto& [a, o] : roots) {
    if (o != w) continue;
    cld z = approx(field.embed(a, 1, 64));
    long double arg = std::arg(z);
    if (arg < 0) arg += two_pi;
    if (arg < best_arg) {
      best_arg = arg;
      gen = a;
    }
  }
  return {gen, w};
}

RealInterval log_embedding(const NumberField& field, const FieldElement& u, int index, long bits) {
  return log_abs(field.embed(u, index, bits + 8), bits);
}

UnitGroupData verify_units(FieldPtr field, const std::vector<FieldElement>& candidates, std::string provenance) {
  const int n = unit_rank(*field);
  if (static_cast<int>(candidates.size()) != n) {
    throw ValidationError("expected " + std::to_string(n) + " unit candidates (unit rank is " + std::to_string(n) +
                          "), got " + std::to_string(candidates.size()));
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& u = candidates[i];
    if (!field->is_integral(u))
      throw ValidationError("unit candidate " + std::to_string(i) + " is not integral: " + field->element_to_string(u));
    Rational nm = field->norm(u);
    if (nm != 1 && nm != -1)
      throw ValidationError("unit candidate " + std::to_string(i) + " has norm " + to_string(nm) + ", not +-1");
  }

  UnitGroupData g;
  g.field = field;
  auto tors = torsion_units(*field);
  g.torsion_gen = tors.generator;
  g.torsion_order = tors.order;
  g.free_gens = candidates;
  g.provenance = std::move(provenance);
  if (n == 0) {
    g.regulator = {1, 1};
    return g;
  }

  const auto& handles = field->embeddings();
  bool searched = false;
  for (long bits = 64; bits <= 1024; bits *= 2) {
    std::vector<std::vector<RealInterval>> m(n, std::vector<RealInterval>(n));
    try {
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          Rational c = handles[k].kind == EmbeddingKind::complex ? 2 : 1;
          m[i][k] = scale(log_embedding(*field, candidates[i], k + 1, bits), c);
        }
    } catch (const UndeterminedError&) {
      continue;
    }
    RealInterval det = determinant(m);
    if (!det.contains_zero()) {
      g.regulator = det.lo > 0 ? det : RealInterval{-det.hi, -det.lo};
      return g;
    }
    if (searched || bits < 128) continue;
    searched = true;

    // Small-exponent relation search: is some word a root of unity?
    std::vector<std::vector<long double>> logs(n);
    for (int i = 0; i < n; ++i)
      for (const auto& h : handles) logs[i].push_back(std::log(std::abs(approx(field->embed(candidates[i], h)))));
    long bound = std::max(1L, static_cast<long>(std::pow(20000.0, 1.0 / n) / 2));
    std::vector<long> e(n, -bound);
    std::vector<std::vector<long>> hits;
    while (true) {
      int lead = 0;
      while (lead < n && e[lead] == 0) ++lead;
      if (lead < n && e[lead] > 0) {
        long double worst = 0;
        for (std::size_t k = 0; k < handles.size(); ++k) {
          long double s = 0;
          for (int i = 0; i < n; ++i) s += e[i] * logs[i][k];
          worst = std::max(worst, std::fabs(s));
        }
        if (worst < 1e-6L) hits.push_back(e);
      }
      int pos = 0;
      while (pos < n && e[pos] == bound) e[pos++] = -bound;
      if (pos == n) break;
      ++e[pos];
    }
    auto height = [](const std::vector<long>& v) {
      long h = 0;
      for (long x : v) h = std::max(h, std::labs(x));
      return h;
    };
    std::stable_sort(hits.begin(), hits.end(), [&](const auto& a, const auto& b) { return height(a) < height(b); });
    for (const auto& rel : hits) {
      FieldElement x = field->one();
      for (int i = 0; i < n; ++i) x = field->multiply(x, field->pow(candidates[i], rel[i]));
      if (long o = root_of_unity_order(*field, x); o > 0) {
        std::ostringstream os;
        os << "dependent units: prod u_i^e_i is a root of unity of order " << o << " for e = (";
        for (int i = 0; i < n; ++i) os << (i ? "," : "") << rel[i];
        os << ")";
        throw ValidationError(os.str());
      }
    }
  }
  throw UndeterminedError("could not certify independence of the units; raise precision");
}

FieldElement fundamental_unit_real_quadratic(const NumberField& field) {
  if (field.degree() != 2 || field.signature().r != 2) throw ValidationError("field is not real quadratic");

  // O = Z + Z*omega0 from the HNF of the basis in (theta, 1) coordinates.
  const auto& b = field.basis();
  Integer den = 1;
  for (const auto& v : b.data()) den = lcm(den, v.get_den());
  IntegerMatrix rows(2, 2);
  for (int i = 0; i < 2; ++i) {
    rows(i, 0) = Rational(b(1, i) * den).get_num();
    rows(i, 1) = Rational(b(0, i) * den).get_num();
  }
  auto h = hermite_normal_form(rows).h;
  FieldElement omega = field.from_power_coords({Rational(h(0, 1), den), Rational(h(0, 0), den)});
  Integer t = field.trace(omega).get_num();
  omega = field.sub(omega, field.from_integer(floor_div(t, 2)));
  t = field.trace(omega).get_num();
  const Integer nm = field.norm(omega).get_num();
  const Integer delta = t * t - 4 * nm;
  const Integer s = isqrt(delta);

  // Continued fraction of (t + sqrt(delta)) / 2 via the (P, Q) recurrence.
  Integer P = t, Q = 2;
  Integer p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (long step = 0; step < 1000000; ++step) {
    Integer a = Q > 0 ? floor_div(P + s, Q) : floor_div(P + s + 1, Q);
    Integer p = a * p_prev + p_prev2, q = a * q_prev + q_prev2;
    Integer norm = p * p - t * p * q + nm * q * q;
    if (norm == 1 || norm == -1) {
      FieldElement x = field.sub(field.from_integer(p), field.multiply(field.from_integer(q), omega));
      FieldElement inv = field.invert(x);
      for (const auto& cand : {x, field.neg(x), inv, field.neg(inv)}) {
        if (field.embed(cand, 1, 64).real_lower() > 1) return cand;
      }
      throw InternalError("no normalization of the unit has sigma_1 > 1");
    }
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    Integer P_next = a * Q - P;
    Integer num = delta - P_next * P_next;
    if (num % Q != 0) throw InternalError("continued fraction recurrence lost divisibility");
    Q = num / Q;
    P = P_next;
  }
  throw UndeterminedError("continued fraction period exceeded the iteration budget");
}

FieldElement evaluate_word(const UnitGroupData& g, const UnitWord& word) {
  if (word.exponents.size() != g.free_gens.size())
    throw ValidationError("unit word has " + std::to_string(word.exponents.size()) + " exponents, rank is " +
                          std::to_string(g.free_gens.size()));
  const auto& k = *g.field;
  long te = ((word.torsion_exp % g.torsion_order) + g.torsion_order) % g.torsion_order;
  FieldElement x = k.pow(g.torsion_gen, te);
  for (std::size_t i = 0; i < g.free_gens.size(); ++i)
    if (word.exponents[i] != 0) x = k.multiply(x, k.pow(g.free_gens[i], word.exponents[i]));
  return x;
}

std::string to_string(const UnitWord& w) {
  std::ostringstream os;
  os << "(" << w.torsion_exp << ";";
  for (std::size_t i = 0; i < w.exponents.size(); ++i) os << (i ? "," : "") << w.exponents[i];
  os << ")";
  return os.str();
}

}  // namespace torunits
