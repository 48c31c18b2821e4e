#include "torunits/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_set>

namespace torunits {

namespace {

std::int64_t to_mod(const Integer& v, std::int64_t q) {
  return mod_floor(v, Integer(static_cast<long>(q))).get_si();
}

ModMatrix identity_mod(int d, std::int64_t q) {
  ModMatrix m(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i) m[i * d + i] = 1 % q;
  return m;
}

ModMatrix mod_pow(ModMatrix base, Integer e, int d, std::int64_t q) {
  ModMatrix r = identity_mod(d, q);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mod_mul(r, base, d, q);
    e >>= 1;
    if (e > 0) base = mod_mul(base, base, d, q);
  }
  return r;
}

std::vector<std::int64_t> point_numerators(const RationalTorusPoint& x) {
  std::vector<std::int64_t> v;
  for (const auto& n : x.num) v.push_back(n.get_si());
  return v;
}

std::int64_t checked_q(const Integer& q) {
  if (!q.fits_slong_p() || q > (1L << 31)) throw ValidationError("denominator too large for orbit enumeration");
  return q.get_si();
}

void check_code_range(int d, std::int64_t q) {
  long double total = std::pow(static_cast<long double>(q), d);
  if (total > 1.8e19L) throw ValidationError("q^d exceeds the point encoding range");
}

struct LabelledBfs {
  std::vector<std::uint64_t> codes;
  std::vector<std::vector<long>> labels;
};

// Generator matrices mod q in exponent-vector order (free..., torsion).
std::vector<ModMatrix> generators_mod(const ToralRep& rep, std::int64_t q) {
  std::vector<ModMatrix> gens;
  for (int i = 0; i < rep.rank(); ++i) gens.push_back(reduce_mod(rep.free_matrix(i), q));
  gens.push_back(reduce_mod(rep.torsion_matrix(), q));
  return gens;
}

Rational frac(const Rational& x) {
  Rational f = x - Rational(floor(x));
  f.canonicalize();
  return f;
}

}  // namespace

std::size_t ModMatrixHash::operator()(const ModMatrix& m) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto v : m) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

ModMatrix reduce_mod(const IntegerMatrix& m, std::int64_t q) {
  ModMatrix out;
  out.reserve(m.rows() * m.cols());
  for (const auto& v : m.data()) out.push_back(to_mod(v, q));
  return out;
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, int d, std::int64_t q) {
  ModMatrix c(static_cast<std::size_t>(d) * d, 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      std::int64_t aik = a[i * d + k];
      if (aik == 0) continue;
      for (int j = 0; j < d; ++j) c[i * d + j] += aik * b[k * d + j];
    }
  for (auto& v : c) v %= q;
  return c;
}

std::vector<std::int64_t> mod_apply(const ModMatrix& m, const std::vector<std::int64_t>& x, std::int64_t q) {
  const int d = static_cast<int>(x.size());
  std::vector<std::int64_t> y(d, 0);
  for (int i = 0; i < d; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < d; ++j) acc += m[i * d + j] * x[j];
    y[i] = acc % q;
  }
  return y;
}

ModMatrix word_matrix_mod(const ToralRep& rep, const std::vector<Integer>& exponents, std::int64_t q) {
  const int d = rep.dim();
  const int n = rep.rank();
  if (exponents.size() != static_cast<std::size_t>(n + 1)) throw ValidationError("exponent vector length mismatch");
  ModMatrix m = identity_mod(d, q);
  for (int i = 0; i < n; ++i) {
    const Integer& e = exponents[i];
    if (e == 0) continue;
    ModMatrix g = reduce_mod(e > 0 ? rep.free_matrix(i) : rep.free_inverse(i), q);
    m = mod_mul(m, mod_pow(g, abs(e), d, q), d, q);
  }
  Integer t = mod_floor(exponents[n], Integer(rep.torsion_order()));
  if (t != 0) m = mod_mul(m, mod_pow(reduce_mod(rep.torsion_matrix(), q), t, d, q), d, q);
  return m;
}

std::vector<Integer> to_exponent_vector(const UnitWord& w) {
  std::vector<Integer> v;
  for (long e : w.exponents) v.emplace_back(e);
  v.emplace_back(w.torsion_exp);
  return v;
}

UnitWord to_word(const std::vector<Integer>& v) {
  UnitWord w;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) w.exponents.push_back(v[i].get_si());
  w.torsion_exp = v.back().get_si();
  return w;
}

long FiniteGroupModQ::index_of(const ModMatrix& m) const {
  auto it = lookup.find(m);
  return it == lookup.end() ? -1 : it->second;
}

FiniteGroupModQ reduce_group_mod_q(const ToralRep& rep, std::int64_t q) {
  if (q < 1) throw ValidationError("q must be positive");
  FiniteGroupModQ g;
  g.q = q;
  g.dim = rep.dim();
  g.rank = rep.rank();
  g.torsion_order = rep.torsion_order();
  g.rep_id = rep.id();
  g.generators = generators_mod(rep, q);
  const int d = g.dim;
  const int ng = static_cast<int>(g.generators.size());

  g.elements.push_back(identity_mod(d, q));
  g.labels.emplace_back(ng, 0);
  g.lookup.emplace(g.elements[0], 0);
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    for (int k = 0; k < ng; ++k) {
      ModMatrix next = mod_mul(g.elements[head], g.generators[k], d, q);
      if (g.lookup.count(next)) continue;
      auto label = g.labels[head];
      ++label[k];
      g.lookup.emplace(next, static_cast<long>(g.elements.size()));
      g.elements.push_back(std::move(next));
      g.labels.push_back(std::move(label));
    }
  }

  // Schreier relations of the BFS tree generate the kernel of Z^(n+1) -> G mod q.
  const std::size_t dimz = static_cast<std::size_t>(ng);
  Lattice rel(dimz);
  std::vector<Integer> wt(dimz, Integer(0));
  wt[dimz - 1] = g.torsion_order;
  rel.add(wt);
  const Integer order(static_cast<unsigned long>(g.elements.size()));
  for (std::size_t idx = 0; idx < g.elements.size(); ++idx) {
    if (rel.full_rank() && rel.index() == order) break;
    for (int k = 0; k < ng; ++k) {
      long target = g.index_of(mod_mul(g.elements[idx], g.generators[k], d, q));
      std::vector<Integer> v(dimz);
      for (std::size_t j = 0; j < dimz; ++j) v[j] = g.labels[idx][j] - g.labels[target][j];
      ++v[k];
      rel.add(v);
    }
  }
  if (!rel.full_rank() || rel.index() != order)
    throw InternalError("relation lattice index does not match the group order");
  g.relations = std::move(rel);
  return g;
}

std::uint64_t encode_point(const std::vector<std::int64_t>& x, std::int64_t q) {
  std::uint64_t code = 0;
  for (auto v : x) code = code * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(v);
  return code;
}

std::vector<std::int64_t> decode_point(std::uint64_t code, int d, std::int64_t q) {
  std::vector<std::int64_t> x(d);
  for (int i = d - 1; i >= 0; --i) {
    x[i] = static_cast<std::int64_t>(code % static_cast<std::uint64_t>(q));
    code /= static_cast<std::uint64_t>(q);
  }
  return x;
}

bool FiniteOrbit::contains(std::uint64_t code) const { return std::binary_search(codes.begin(), codes.end(), code); }

RationalTorusPoint FiniteOrbit::point(std::size_t i) const {
  auto x = decode_point(codes[i], dim, q);
  return make_point(std::vector<Integer>(x.begin(), x.end()), Integer(static_cast<long>(q)));
}

RationalTorusPoint FiniteOrbit::base_point() const {
  auto x = decode_point(base, dim, q);
  return make_point(std::vector<Integer>(x.begin(), x.end()), Integer(static_cast<long>(q)));
}

namespace {

FiniteOrbit bfs_orbit(const std::vector<std::int64_t>& start, const std::vector<ModMatrix>& gens, std::int64_t q,
                      const std::string& rep_id) {
  FiniteOrbit orbit;
  orbit.q = q;
  orbit.dim = static_cast<int>(start.size());
  orbit.base = encode_point(start, q);
  orbit.rep_id = rep_id;
  std::unordered_set<std::uint64_t> seen{orbit.base};
  std::deque<std::vector<std::int64_t>> queue{start};
  orbit.codes.push_back(orbit.base);
  while (!queue.empty()) {
    auto x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      auto y = mod_apply(g, x, q);
      auto code = encode_point(y, q);
      if (seen.insert(code).second) {
        orbit.codes.push_back(code);
        queue.push_back(std::move(y));
      }
    }
  }
  std::sort(orbit.codes.begin(), orbit.codes.end());
  return orbit;
}

}  // namespace

FiniteOrbit orbit_of(const RationalTorusPoint& x, const ToralRep& rep) {
  if (x.dim() != rep.dim()) throw ValidationError("point dimension does not match the field degree");
  std::int64_t q = checked_q(x.q);
  check_code_range(rep.dim(), q);
  return bfs_orbit(point_numerators(x), generators_mod(rep, q), q, rep.id());
}

std::vector<FiniteOrbit> partition_denominator(const ToralRep& rep, std::int64_t q) {
  if (q < 1) throw ValidationError("q must be positive");
  const int d = rep.dim();
  check_code_range(d, q);
  const std::uint64_t total = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<long double>(q), d)));
  if (total > (1ULL << 34)) throw ValidationError("too many points to partition at this denominator");
  auto gens = generators_mod(rep, q);
  std::vector<bool> visited(total, false);
  std::vector<FiniteOrbit> orbits;
  const std::string id = rep.id();
  for (std::uint64_t code = 0; code < total; ++code) {
    if (visited[code]) continue;
    auto x = decode_point(code, d, q);
    std::int64_t g = q;
    for (auto v : x) g = std::gcd(g, v);
    if (g != 1) continue;
    FiniteOrbit orbit = bfs_orbit(x, gens, q, id);
    for (auto c : orbit.codes) visited[c] = true;
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Integer exact_denominator_count(int d, std::int64_t q) {
  Integer count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  std::int64_t m = q;
  for (std::int64_t p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    Integer pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    count = count / pd * (pd - 1);
  }
  if (m > 1) {
    Integer pd = 1;
    for (int i = 0; i < d; ++i) pd *= m;
    count = count / pd * (pd - 1);
  }
  return count;
}

Lattice schreier_stabilizer(const RationalTorusPoint& x, const ToralRep& rep) {
  std::int64_t q = checked_q(x.q);
  auto gens = generators_mod(rep, q);
  const std::size_t dimz = gens.size();
  Lattice h(dimz);
  std::vector<Integer> wt(dimz, Integer(0));
  wt[dimz - 1] = rep.torsion_order();
  h.add(wt);

  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<std::vector<std::int64_t>> points{point_numerators(x)};
  std::vector<std::vector<long>> labels{std::vector<long>(dimz, 0)};
  index.emplace(encode_point(points[0], q), 0);
  for (std::size_t head = 0; head < points.size(); ++head) {
    for (std::size_t k = 0; k < dimz; ++k) {
      auto y = mod_apply(gens[k], points[head], q);
      auto code = encode_point(y, q);
      auto it = index.find(code);
      if (it == index.end()) {
        auto label = labels[head];
        ++label[k];
        index.emplace(code, points.size());
        points.push_back(std::move(y));
        labels.push_back(std::move(label));
        continue;
      }
      std::vector<Integer> v(dimz);
      for (std::size_t j = 0; j < dimz; ++j) v[j] = labels[head][j] - labels[it->second][j];
      ++v[k];
      h.add(v);
    }
  }
  return h;
}

bool IsotropySubgroup::contains(const UnitWord& u) const { return lattice.contains(to_exponent_vector(u)); }

IsotropySubgroup isotropy(const FiniteOrbit& orbit, const FiniteGroupModQ& group, const ToralRep& rep) {
  if (orbit.q != group.q) throw ValidationError("orbit and group were reduced modulo different q");
  if (orbit.rep_id != group.rep_id || group.rep_id != rep.id())
    throw ValidationError("orbit and group come from different representations");
  const int d = group.dim;
  const auto base = decode_point(orbit.base, d, group.q);

  IsotropySubgroup h;
  h.rep_id = rep.id();
  h.lattice = group.relations;
  std::size_t stabilizer_size = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (mod_apply(group.elements[i], base, group.q) != base) continue;
    ++stabilizer_size;
    std::vector<Integer> v(group.labels[i].begin(), group.labels[i].end());
    h.lattice.add(v);
  }
  if (group.size() != orbit.size() * stabilizer_size)
    throw InternalError("orbit-stabilizer identity fails");
  h.index = h.lattice.index();
  if (h.index != Integer(static_cast<unsigned long>(orbit.size())))
    throw InternalError("isotropy index differs from the orbit size");
  if (!(schreier_stabilizer(orbit.base_point(), rep) == h.lattice))
    throw InternalError("stabilizer scan and Schreier generators disagree");

  h.free_rank = group.rank;
  auto snf = smith_normal_form(h.lattice.basis());
  for (const auto& v : snf.diagonal())
    if (v != 1) h.quotient_invariants.push_back(v);

  // Torsion part: w e_t in the lattice basis; Z^(n+1) / <c> = Z_gcd(c) x Z^n.
  const std::size_t dimz = static_cast<std::size_t>(group.rank + 1);
  std::vector<Integer> wt(dimz, Integer(0));
  wt[dimz - 1] = group.torsion_order;
  auto c = h.lattice.coordinates(wt);
  IntegerMatrix col(dimz, 1);
  for (std::size_t i = 0; i < dimz; ++i) col(i, 0) = c[i];
  auto csnf = smith_normal_form(col);
  h.char_basis = csnf.u;
  if (csnf.v(0, 0) < 0)
    for (std::size_t j = 0; j < dimz; ++j) h.char_basis(0, j) = -h.char_basis(0, j);
  h.torsion_order = csnf.s(0, 0);

  long step = group.torsion_order;
  for (long m = 1; m <= group.torsion_order; ++m) {
    if (group.torsion_order % m) continue;
    std::vector<Integer> me(dimz, Integer(0));
    me[dimz - 1] = m;
    if (h.lattice.contains(me)) {
      step = m;
      break;
    }
  }
  h.torsion_exponent_step = step;
  if (h.torsion_order != group.torsion_order / step)
    throw InternalError("torsion part of the isotropy group is inconsistent");
  return h;
}

CharacterGroupDescriptor character_group(const IsotropySubgroup& h) {
  CharacterGroupDescriptor out;
  if (h.torsion_order > 1) out.torsion_invariants.push_back(h.torsion_order);
  out.torus_rank = h.free_rank;
  return out;
}

bool CharacterValue::operator==(const CharacterValue& o) const {
  if (torsion_index != o.torsion_index || angles.size() != o.angles.size()) return false;
  for (std::size_t i = 0; i < angles.size(); ++i)
    if (frac(angles[i]) != frac(o.angles[i])) return false;
  return true;
}

CharacterValue trivial_character(const IsotropySubgroup& h) {
  return {0, std::vector<Rational>(h.free_rank, Rational(0))};
}

std::complex<double> evaluate_character(const IsotropySubgroup& h, const CharacterValue& chi, const UnitWord& u) {
  auto v = to_exponent_vector(u);
  if (!h.lattice.contains(v)) throw ValidationError("unit " + to_string(u) + " is not in the isotropy group");
  if (chi.angles.size() != static_cast<std::size_t>(h.free_rank))
    throw ValidationError("character has the wrong number of angles");
  auto c = h.lattice.coordinates(v);
  auto y = h.char_basis * c;
  Rational phase = 0;
  if (h.torsion_order > 1) phase += Rational(Integer(chi.torsion_index) * y[0], h.torsion_order);
  for (int j = 0; j < h.free_rank; ++j) phase += chi.angles[j] * y[j + 1];
  const double t = 2 * M_PI * to_double(frac(phase));
  return {std::cos(t), std::sin(t)};
}

Pushforward pushforward_orbit(const FiniteOrbit& orbit, const RestrictionMap& map, const ToralRep& target) {
  std::map<RationalTorusPoint, std::size_t> counts;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    auto x = orbit.point(i);
    counts[make_point(map.matrix * x.num, x.q)]++;
  }
  Pushforward out;
  out.image = orbit_of(counts.begin()->first, target);
  if (out.image.size() != counts.size())
    throw InternalError("pushforward image is not a single orbit");
  for (const auto& [y, n] : counts) {
    if (y.q != Integer(static_cast<long>(out.image.q)) ||
        !out.image.contains(encode_point(point_numerators(y), out.image.q)))
      throw InternalError("pushforward image is not a single orbit");
    if (out.fiber_size == 0) out.fiber_size = n;
    if (n != out.fiber_size) throw InternalError("pushforward fibres are uneven");
  }
  return out;
}

std::vector<RationalTorusPoint> restriction_preimages(const RestrictionMap& map, const RationalTorusPoint& y) {
  const std::size_t d = map.matrix.rows();
  auto snf = smith_normal_form(map.matrix);
  auto diag = snf.diagonal();
  for (const auto& s : diag)
    if (s == 0) throw ValidationError("restriction map is singular");
  std::vector<Rational> uy(d, Rational(0));
  auto yc = y.coords();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) uy[i] += snf.u(i, j) * yc[j];
  std::vector<RationalTorusPoint> out;
  std::vector<Integer> w(d, Integer(0));
  while (true) {
    std::vector<Rational> xp(d);
    for (std::size_t i = 0; i < d; ++i) xp[i] = (uy[i] + w[i]) / diag[i];
    std::vector<Rational> x(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) x[i] += snf.v(i, j) * xp[j];
    out.push_back(make_point(x));
    std::size_t pos = 0;
    while (pos < d && w[pos] + 1 == diag[pos]) w[pos++] = 0;
    if (pos == d) break;
    ++w[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimPoint PrimPoint::omega(std::string rep_id) {
  PrimPoint p;
  p.omega_infinity = true;
  p.rep_id = std::move(rep_id);
  return p;
}

bool prim_closure_contains(const PrimPoint& target, const std::vector<PrimPoint>& sample, bool declared_infinite) {
  for (const auto& p : sample)
    if (p.rep_id != target.rep_id) throw ValidationError("prim points come from different representations");
  if (sample.empty()) return false;
  if (declared_infinite) return true;
  for (const auto& p : sample)
    if (p.omega_infinity) return true;
  if (target.omega_infinity) return false;
  for (const auto& p : sample)
    if (p.q == target.q && p.orbit_base == target.orbit_base && p.character == target.character) return true;
  return false;
}

}  // namespace torunits
