#include <algorithm>
#include <set>

#include "torunits/exact/polynomial.hpp"
#include "torunits/exact/roots.hpp"

namespace torunits {

namespace {

using u64 = std::uint64_t;
using PolyMod = std::vector<u64>;  // lowest degree first, trimmed

struct FieldP {
  u64 p;
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(PolyMod& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const PolyMod& a) { return static_cast<int>(a.size()) - 1; }

PolyMod rem(PolyMod a, const PolyMod& b, const FieldP& f) {
  trim(a);
  const int db = deg(b);
  const u64 inv_lead = f.inv(b.back());
  while (deg(a) >= db) {
    u64 c = f.mul(a.back(), inv_lead);
    int shift = deg(a) - db;
    for (int j = 0; j <= db; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
    trim(a);
  }
  return a;
}

PolyMod quot(PolyMod a, const PolyMod& b, const FieldP& f) {
  trim(a);
  const int db = deg(b);
  if (deg(a) < db) return {};
  PolyMod q(deg(a) - db + 1, 0);
  const u64 inv_lead = f.inv(b.back());
  while (deg(a) >= db) {
    u64 c = f.mul(a.back(), inv_lead);
    int shift = deg(a) - db;
    q[shift] = c;
    for (int j = 0; j <= db; ++j) a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
    trim(a);
  }
  trim(q);
  return q;
}

PolyMod mulmod(const PolyMod& a, const PolyMod& b, const PolyMod& m, const FieldP& f) {
  if (a.empty() || b.empty()) return {};
  PolyMod c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  return rem(c, m, f);
}

PolyMod gcd_mod(PolyMod a, PolyMod b, const FieldP& f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyMod r = rem(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

PolyMod powmod(PolyMod base, u64 e, const PolyMod& m, const FieldP& f) {
  PolyMod result{1};
  base = rem(base, m, f);
  while (e) {
    if (e & 1) result = mulmod(result, base, m, f);
    base = mulmod(base, base, m, f);
    e >>= 1;
  }
  return result;
}

std::set<int> subset_sums(const std::vector<int>& parts) {
  std::set<int> sums{0};
  for (int d : parts) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Returns 1 if some conjugation-closed root subset of size k yields an integer
// factor, 0 if every subset is excluded, -1 if precision was insufficient.
int recombine(const RationalPolynomial& p, const std::vector<Integer>& prim, const RootIsolation& roots,
              const std::set<int>& sizes, long bits) {
  const int n = p.degree();
  const int items = roots.r() + roots.s();
  const Rational lead(prim.back());
  RationalPolynomial fz(std::vector<Rational>(prim.begin(), prim.end()));
  bool ambiguous = false;
  for (unsigned mask = 1; mask + 1 < (1U << items); ++mask) {
    int k = 0;
    std::vector<CertifiedInterval> chosen;
    for (int i = 0; i < items; ++i) {
      if (!(mask & (1U << i))) continue;
      if (i < roots.r()) {
        ++k;
        chosen.push_back(roots.real_roots[i]);
      } else {
        k += 2;
        chosen.push_back(roots.complex_roots[i - roots.r()]);
        chosen.push_back(roots.complex_roots[i - roots.r()].conj());
      }
    }
    if (2 * k > n || !sizes.count(k)) continue;
    // lead * prod (x - alpha) as a vector of coefficient discs.
    std::vector<CertifiedInterval> coeffs{CertifiedInterval::exact(lead)};
    for (const auto& alpha : chosen) {
      std::vector<CertifiedInterval> next(coeffs.size() + 1);
      for (std::size_t j = 0; j < coeffs.size(); ++j) {
        next[j + 1] = add(next[j + 1], coeffs[j], bits);
        next[j] = sub(next[j], mul(coeffs[j], alpha, bits), bits);
      }
      coeffs = std::move(next);
    }
    std::vector<Rational> candidate;
    bool excluded = false, unsure = false;
    for (const auto& c : coeffs) {
      // Imaginary parts must straddle 0, real parts must contain an integer.
      if (abs(c.im) > c.rad) {
        excluded = true;
        break;
      }
      Integer lo = ceil(c.real_lower()), hi = floor(c.real_upper());
      if (lo > hi) {
        excluded = true;
        break;
      }
      if (lo != hi) {
        unsure = true;
        continue;
      }
      candidate.emplace_back(lo);
    }
    if (excluded) continue;
    if (unsure) {
      ambiguous = true;
      continue;
    }
    RationalPolynomial g(candidate);
    if (g.degree() == k && (fz % g).is_zero()) return 1;
  }
  return ambiguous ? -1 : 0;
}

}  // namespace

std::vector<int> factor_degrees_mod_p(const std::vector<Integer>& primitive, std::uint64_t prime) {
  FieldP f{prime};
  PolyMod a;
  for (const auto& c : primitive) a.push_back(mod_floor(c, Integer(static_cast<unsigned long>(prime))).get_ui());
  if (a.empty() || a.back() == 0) return {};
  trim(a);
  // Monic, squarefree check.
  u64 inv = f.inv(a.back());
  for (auto& c : a) c = f.mul(c, inv);
  PolyMod da;
  for (std::size_t k = 1; k < a.size(); ++k) da.push_back(f.mul(a[k], k % prime));
  trim(da);
  if (da.empty() || deg(gcd_mod(a, da, f)) > 0) return {};

  std::vector<int> degrees;
  PolyMod h{0, 1};
  PolyMod rest = a;
  for (int i = 1; 2 * i <= deg(rest); ++i) {
    h = powmod(h, prime, rest, f);
    PolyMod hx = h;
    hx.resize(std::max<std::size_t>(hx.size(), 2), 0);
    hx[1] = f.sub(hx[1], 1);
    trim(hx);
    PolyMod g = gcd_mod(rest, hx, f);
    if (deg(g) > 0) {
      for (int c = 0; c < deg(g) / i; ++c) degrees.push_back(i);
      rest = quot(rest, g, f);
      h = rem(h, rest, f);
    }
  }
  if (deg(rest) > 0) degrees.push_back(deg(rest));
  return degrees;
}

bool is_irreducible_q(const RationalPolynomial& p) {
  if (p.degree() <= 0) throw ValidationError("constant polynomial");
  const int n = p.degree();
  if (n == 1) return true;
  if (!is_squarefree(p)) return false;
  std::vector<Integer> prim = p.primitive_integer_coeffs();
  if (prim[0] == 0) return false;

  std::set<int> allowed;
  for (int k = 1; k < n; ++k) allowed.insert(k);
  int primes_used = 0, unchanged = 0;
  for (u64 q = 3; primes_used < 40 && unchanged < 8 && q < 2000; q += 2) {
    if (!is_prime(q)) continue;
    auto degrees = factor_degrees_mod_p(prim, q);
    if (degrees.empty()) continue;
    ++primes_used;
    auto sums = subset_sums(degrees);
    std::set<int> next;
    for (int k : allowed)
      if (sums.count(k)) next.insert(k);
    unchanged = next.size() == allowed.size() ? unchanged + 1 : 0;
    allowed = std::move(next);
    if (allowed.empty()) return true;
  }

  // Complete fallback: every factor over Z is lc-scaled product of a root subset.
  RationalPolynomial integral(std::vector<Rational>(prim.begin(), prim.end()));
  for (long bits = 64; bits <= 1 << 14; bits *= 2) {
    RootIsolation roots = isolate_roots(integral, bits);
    int verdict = recombine(integral, prim, roots, allowed, bits + 32);
    if (verdict == 1) return false;
    if (verdict == 0) return true;
  }
  throw UndeterminedError("irreducibility test exhausted its precision budget");
}

}  // namespace torunits
