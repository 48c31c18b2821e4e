#include "torunits/toral_action.hpp"

#include <sstream>

namespace torunits {

bool RationalTorusPoint::operator<(const RationalTorusPoint& o) const {
  if (q != o.q) return q < o.q;
  return num < o.num;
}

std::vector<Rational> RationalTorusPoint::coords() const {
  std::vector<Rational> c;
  for (const auto& n : num) {
    Rational v(n, q);
    v.canonicalize();
    c.push_back(v);
  }
  return c;
}

RationalTorusPoint make_point(const std::vector<Integer>& numerators, const Integer& q) {
  if (q <= 0) throw ValidationError("torus point denominator must be positive");
  Integer g = q;
  std::vector<Integer> reduced;
  for (const auto& n : numerators) {
    reduced.push_back(mod_floor(n, q));
    g = gcd(g, reduced.back());
  }
  RationalTorusPoint x;
  x.q = q / g;
  for (auto& n : reduced) x.num.push_back(n / g);
  return x;
}

RationalTorusPoint make_point(const std::vector<Rational>& coords) {
  Integer q = 1;
  for (const auto& c : coords) q = lcm(q, c.get_den());
  std::vector<Integer> num;
  for (const auto& c : coords) num.push_back(Rational(c * q).get_num());
  return make_point(num, q);
}

std::string to_string(const RationalTorusPoint& x) {
  std::ostringstream os;
  os << "(";
  auto c = x.coords();
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << to_string(c[i]);
  os << ")";
  return os.str();
}

IntegerMatrix multiplication_matrix(const NumberField& field, const FieldElement& a) {
  if (!field.is_integral(a))
    throw ValidationError("multiplication matrix needs an integral element: " + field.element_to_string(a));
  return to_integer(field.multiplication_matrix(a));
}

IntegerMatrix toral_matrix(const NumberField& field, const FieldElement& u, const IntegralIdeal& ideal) {
  RationalMatrix b = to_rational(ideal.basis);
  RationalMatrix m = inverse(b) * field.multiplication_matrix(u) * b;
  if (!is_integral(m)) throw ValidationError("element does not preserve ideal " + ideal.label);
  return to_integer(m).transpose();
}

ToralRep::ToralRep(UnitGroupData units, IntegralIdeal ideal) : units_(std::move(units)), ideal_(std::move(ideal)) {
  const auto& k = field();
  torsion_ = toral_matrix(k, units_.torsion_gen, ideal_);
  for (const auto& u : units_.free_gens) {
    free_.push_back(toral_matrix(k, u, ideal_));
    free_inv_.push_back(toral_matrix(k, k.invert(u), ideal_));
  }
}

std::string ToralRep::id() const {
  std::ostringstream os;
  os << field().poly().to_string() << "|" << ideal_.basis << "|" << units_.torsion_order;
  for (const auto& u : units_.free_gens) os << "|" << field().element_to_string(u);
  return os.str();
}

IntegerMatrix ToralRep::matrix(const UnitWord& word) const {
  if (word.exponents.size() != free_.size()) throw ValidationError("unit word length does not match the unit rank");
  const long w = units_.torsion_order;
  IntegerMatrix m = matrix_power(torsion_, static_cast<unsigned long>(((word.torsion_exp % w) + w) % w));
  for (std::size_t i = 0; i < free_.size(); ++i) {
    long e = word.exponents[i];
    if (e == 0) continue;
    m = m * matrix_power(e > 0 ? free_[i] : free_inv_[i], static_cast<unsigned long>(e > 0 ? e : -e));
  }
  return m;
}

IntegerMatrix toral_matrix(const ToralRep& rep, const UnitWord& word) { return rep.matrix(word); }

EigenCheck verify_eigen_structure(const ToralRep& rep, const UnitWord& word) {
  const auto& k = rep.field();
  const int d = k.degree();
  FieldElement u = evaluate_word(rep.units(), word);
  RationalPolynomial cp = charpoly(rep.matrix(word));
  RationalPolynomial mp = k.minimal_polynomial(u);
  EigenCheck out;
  if (d % mp.degree() != 0) {
    out.diagnostics = "minimal polynomial degree does not divide d";
    return out;
  }
  if (cp != mp.pow(static_cast<unsigned>(d / mp.degree()))) {
    out.diagnostics = "charpoly " + cp.to_string() + " != (" + mp.to_string() + ")^" + std::to_string(d / mp.degree());
    return out;
  }
  auto boxes = isolate_roots(mp, 64).all_roots();
  std::vector<bool> hit(boxes.size(), false);
  for (const auto& h : k.embeddings()) {
    CertifiedInterval v = k.embed(u, h, 64);
    std::vector<CertifiedInterval> values{v};
    if (h.kind == EmbeddingKind::complex) values.push_back(v.conj());
    for (const auto& val : values) {
      int matches = 0;
      for (std::size_t i = 0; i < boxes.size(); ++i)
        if (val.overlaps(boxes[i])) {
          ++matches;
          hit[i] = true;
        }
      if (matches != 1) {
        out.diagnostics = "embedding " + std::to_string(h.index) + " matches " + std::to_string(matches) + " root boxes";
        return out;
      }
    }
  }
  for (std::size_t i = 0; i < hit.size(); ++i)
    if (!hit[i]) {
      out.diagnostics = "root box " + std::to_string(i) + " is not an embedding value";
      return out;
    }
  out.ok = true;
  return out;
}

RationalTorusPoint act(const RationalTorusPoint& x, const IntegerMatrix& m) {
  return make_point(m * x.num, x.q);
}

RationalTorusPoint act(const RationalTorusPoint& x, const UnitWord& word, const ToralRep& rep) {
  return act(x, rep.matrix(word));
}

}  // namespace torunits
