#include "torunits/number_field.hpp"

#include <algorithm>
#include <sstream>

namespace torunits {

namespace {

RationalPolynomial reduce_mod(const RationalPolynomial& p, const RationalPolynomial& f) {
  return p.degree() < f.degree() ? p : p % f;
}

std::vector<Rational> padded(const RationalPolynomial& p, int d) {
  std::vector<Rational> v(d);
  for (int k = 0; k < d; ++k) v[k] = p.coeff(k);
  return v;
}

// True if |n| is squarefree; false if not, or if trial division gives up.
bool certainly_squarefree(Integer n) {
  n = abs(n);
  if (n == 0) return false;
  for (unsigned long p = 2; p < 1000000; ++p) {
    Integer pp = Integer(p) * p;
    if (pp > n) return true;
    if (n % pp == 0) return false;
    while (n % p == 0) n /= p;
  }
  return n < Integer(1000000) * 1000000;
}

bool overlaps_only(const CertifiedInterval& box, const std::vector<CertifiedInterval>& base, std::size_t k) {
  for (std::size_t j = 0; j < base.size(); ++j)
    if (j != k && box.overlaps(base[j])) return false;
  return box.overlaps(base[k]);
}

}  // namespace

bool FieldElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c == 0; });
}

std::string to_string(OrderStatus status) {
  switch (status) {
    case OrderStatus::maximal_certified: return "maximal (squarefree discriminant)";
    case OrderStatus::maximal_builtin: return "maximal (standard quadratic basis)";
    case OrderStatus::user_supplied: return "user-supplied basis, maximality not verified";
    case OrderStatus::power_basis_unverified: return "power basis, may be a finite-index suborder";
  }
  return "unknown";
}

std::shared_ptr<const NumberField> NumberField::create(const RationalPolynomial& f,
                                                      const std::optional<RationalMatrix>& basis) {
  if (f.degree() < 1) throw ValidationError("field polynomial must have degree >= 1");
  if (!f.is_monic()) throw ValidationError("field polynomial must be monic: " + f.to_string());
  if (!f.has_integer_coefficients()) throw ValidationError("field polynomial must have integer coefficients");
  if (!is_irreducible_q(f)) throw ValidationError("reducible polynomial: " + f.to_string());

  std::shared_ptr<NumberField> k(new NumberField());
  k->f_ = f;
  k->d_ = f.degree();
  const int d = k->d_;

  if (basis) {
    if (basis->rows() != static_cast<std::size_t>(d) || basis->cols() != static_cast<std::size_t>(d))
      throw ValidationError("integral basis must be a " + std::to_string(d) + "x" + std::to_string(d) + " matrix");
    if (determinant(*basis) == 0) throw ValidationError("integral basis is singular");
    k->basis_ = *basis;
    k->order_status_ = OrderStatus::user_supplied;
  } else if (d == 2 && f.coeff(1) == 0 && certainly_squarefree(f.coeff(0).get_num())) {
    Integer D = -f.coeff(0).get_num();
    if (mod_floor(D, Integer(4)) == 1) {
      k->basis_ = RationalMatrix{{1, Rational(1, 2)}, {0, Rational(1, 2)}};
    } else {
      k->basis_ = RationalMatrix::identity(2);
    }
    k->order_status_ = OrderStatus::maximal_builtin;
  } else {
    k->basis_ = RationalMatrix::identity(d);
  }
  k->basis_inv_ = inverse(k->basis_);

  // 1 must be an integer combination of the basis.
  std::vector<Rational> e0(d, Rational(0));
  e0[0] = 1;
  for (const auto& c : k->basis_inv_ * e0)
    if (c.get_den() != 1) throw ValidationError("integral basis does not contain 1");

  // Structure constants: b_i * b_j in basis coordinates must be integral.
  std::vector<RationalPolynomial> elems;
  for (int i = 0; i < d; ++i) elems.emplace_back(k->basis_.column(i));
  for (int i = 0; i < d; ++i) {
    IntegerMatrix m(d, d);
    for (int j = 0; j < d; ++j) {
      auto prod = k->basis_inv_ * padded(reduce_mod(elems[i] * elems[j], f), d);
      for (int r = 0; r < d; ++r) {
        if (prod[r].get_den() != 1) {
          throw ValidationError("basis not closed under multiplication: b" + std::to_string(i) + " * b" +
                                std::to_string(j) + " has coordinate " + to_string(prod[r]));
        }
        m(r, j) = prod[r].get_num();
      }
    }
    k->structure_.push_back(std::move(m));
  }

  // Discriminant from the trace form.
  std::vector<Integer> tr(d);
  for (int i = 0; i < d; ++i) {
    Integer t = 0;
    for (int r = 0; r < d; ++r) t += k->structure_[i](r, r);
    tr[i] = t;
  }
  IntegerMatrix form(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Integer t = 0;
      for (int r = 0; r < d; ++r) t += k->structure_[i](r, j) * tr[r];
      form(i, j) = t;
    }
  k->disc_ = determinant(form);
  if (k->order_status_ != OrderStatus::maximal_builtin && certainly_squarefree(k->disc_))
    k->order_status_ = OrderStatus::maximal_certified;

  auto iso = isolate_roots(f, 64);
  k->sig_ = {iso.r(), iso.s()};
  int idx = 1;
  for (auto it = iso.real_roots.rbegin(); it != iso.real_roots.rend(); ++it)
    k->handles_.push_back({idx++, EmbeddingKind::real, *it});
  for (const auto& c : iso.complex_roots) k->handles_.push_back({idx++, EmbeddingKind::complex, c});
  std::vector<CertifiedInterval> base;
  for (const auto& h : k->handles_) base.push_back(h.root);
  k->cache_->levels.emplace_back(64, std::move(base));
  return k;
}

std::vector<CertifiedInterval> NumberField::roots(long bits) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  for (const auto& [b, boxes] : cache_->levels)
    if (b >= bits) return boxes;
  const auto& base = cache_->levels.front().second;
  for (long work = bits;; work += 16) {
    auto iso = isolate_roots(f_, work);
    std::vector<CertifiedInterval> fresh;
    for (auto it = iso.real_roots.rbegin(); it != iso.real_roots.rend(); ++it) fresh.push_back(*it);
    for (const auto& c : iso.complex_roots) fresh.push_back(c);
    std::vector<CertifiedInterval> ordered(base.size());
    bool ok = fresh.size() == base.size();
    std::vector<bool> used(fresh.size(), false);
    for (std::size_t k = 0; k < base.size() && ok; ++k) {
      int match = -1;
      for (std::size_t j = 0; j < fresh.size(); ++j)
        if (!used[j] && overlaps_only(fresh[j], base, k)) {
          match = static_cast<int>(j);
          break;
        }
      if (match < 0) {
        ok = false;
        break;
      }
      used[match] = true;
      ordered[k] = fresh[match];
    }
    if (!ok) continue;
    cache_->levels.emplace_back(work, ordered);
    std::sort(cache_->levels.begin(), cache_->levels.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return ordered;
  }
}

void NumberField::check_dim(const FieldElement& a) const {
  if (a.coords.size() != static_cast<std::size_t>(d_))
    throw ValidationError("element has " + std::to_string(a.coords.size()) + " coordinates, field degree is " +
                          std::to_string(d_));
}

FieldElement NumberField::zero() const { return {std::vector<Rational>(d_, Rational(0))}; }

FieldElement NumberField::one() const { return from_integer(1); }

FieldElement NumberField::from_integer(const Integer& n) const {
  std::vector<Rational> p(d_, Rational(0));
  p[0] = n;
  return from_power_coords(p);
}

FieldElement NumberField::theta() const {
  std::vector<Rational> p(d_, Rational(0));
  if (d_ == 1) {
    p[0] = -f_.coeff(0);
  } else {
    p[1] = 1;
  }
  return from_power_coords(p);
}

FieldElement NumberField::from_coords(std::vector<Rational> coords) const {
  FieldElement a{std::move(coords)};
  check_dim(a);
  for (auto& c : a.coords) c.canonicalize();
  return a;
}

FieldElement NumberField::from_power_coords(const std::vector<Rational>& power) const {
  if (power.size() != static_cast<std::size_t>(d_)) throw ValidationError("power coordinate length mismatch");
  return {basis_inv_ * power};
}

std::vector<Rational> NumberField::power_coords(const FieldElement& a) const {
  check_dim(a);
  return basis_ * a.coords;
}

RationalPolynomial NumberField::as_polynomial(const FieldElement& a) const { return RationalPolynomial(power_coords(a)); }

FieldElement NumberField::add(const FieldElement& a, const FieldElement& b) const {
  check_dim(a);
  check_dim(b);
  FieldElement c = a;
  for (int k = 0; k < d_; ++k) c.coords[k] += b.coords[k];
  return c;
}

FieldElement NumberField::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement NumberField::neg(const FieldElement& a) const {
  FieldElement c = a;
  for (auto& v : c.coords) v = -v;
  return c;
}

FieldElement NumberField::multiply(const FieldElement& a, const FieldElement& b) const {
  check_dim(a);
  check_dim(b);
  std::vector<Rational> out(d_, Rational(0));
  for (int i = 0; i < d_; ++i) {
    if (a.coords[i] == 0) continue;
    const IntegerMatrix& m = structure_[i];
    for (int r = 0; r < d_; ++r) {
      Rational acc = 0;
      for (int j = 0; j < d_; ++j)
        if (b.coords[j] != 0 && m(r, j) != 0) acc += m(r, j) * b.coords[j];
      out[r] += a.coords[i] * acc;
    }
  }
  return {std::move(out)};
}

RationalMatrix NumberField::multiplication_matrix(const FieldElement& a) const {
  check_dim(a);
  RationalMatrix m(d_, d_);
  for (int i = 0; i < d_; ++i) {
    if (a.coords[i] == 0) continue;
    for (int r = 0; r < d_; ++r)
      for (int j = 0; j < d_; ++j) m(r, j) += a.coords[i] * structure_[i](r, j);
  }
  return m;
}

FieldElement NumberField::invert(const FieldElement& a) const {
  check_dim(a);
  if (a.is_zero()) throw ValidationError("division by zero in number field");
  return {solve(multiplication_matrix(a), one().coords)};
}

FieldElement NumberField::pow(const FieldElement& a, long e) const {
  FieldElement base = e < 0 ? invert(a) : a;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement result = one();
  while (n) {
    if (n & 1) result = multiply(result, base);
    n >>= 1;
    if (n) base = multiply(base, base);
  }
  return result;
}

Rational NumberField::norm(const FieldElement& a) const { return determinant(multiplication_matrix(a)); }

Rational NumberField::trace(const FieldElement& a) const {
  auto m = multiplication_matrix(a);
  Rational t = 0;
  for (int k = 0; k < d_; ++k) t += m(k, k);
  return t;
}

RationalPolynomial NumberField::minimal_polynomial(const FieldElement& a) const {
  check_dim(a);
  std::vector<std::vector<Rational>> powers{one().coords};
  FieldElement p = one();
  for (int k = 1; k <= d_; ++k) {
    p = multiply(p, a);
    powers.push_back(p.coords);
    auto m = RationalMatrix::from_columns(powers, d_);
    auto ker = rational_kernel(m);
    if (!ker.empty()) {
      RationalPolynomial mp(ker.front());
      return mp.monic();
    }
  }
  throw InternalError("no linear relation among d+1 powers");
}

bool NumberField::is_integral(const FieldElement& a) const {
  check_dim(a);
  return std::all_of(a.coords.begin(), a.coords.end(), [](const Rational& c) { return c.get_den() == 1; });
}

CertifiedInterval NumberField::embed(const FieldElement& a, const EmbeddingHandle& e, long bits) const {
  return embed(a, e.index, bits);
}

CertifiedInterval NumberField::embed(const FieldElement& a, int index, long bits) const {
  if (index < 1 || index > static_cast<int>(handles_.size()))
    throw ValidationError("embedding index " + std::to_string(index) + " out of range");
  RationalPolynomial p = as_polynomial(a);
  const Rational target = pow2(-bits);
  CertifiedInterval value;
  for (long work = bits + 16, tries = 0; tries < 8; work *= 2, ++tries) {
    auto boxes = roots(work);
    value = evaluate(p, boxes[index - 1], work + 16);
    if (value.rad <= target) break;
  }
  return value;
}

std::string NumberField::element_to_string(const FieldElement& a) const { return as_polynomial(a).to_string("t"); }

}  // namespace torunits
