#include "torunits/ideal.hpp"

#include <sstream>

namespace torunits {

namespace {

IntegerMatrix canonical_columns(const std::vector<std::vector<Integer>>& vectors, int d) {
  Lattice lat = Lattice::from_vectors(vectors, d);
  if (!lat.full_rank()) throw ValidationError("generators do not span a full-rank lattice (zero ideal?)");
  return lat.basis().transpose();
}

std::string vector_string(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

void verify_closure(const NumberField& field, const IntegerMatrix& basis) {
  const int d = field.degree();
  RationalMatrix inv = inverse(to_rational(basis));
  for (int i = 0; i < d; ++i) {
    IntegerMatrix image = field.structure_matrix(i) * basis;
    RationalMatrix coords = inv * to_rational(image);
    for (int j = 0; j < d; ++j)
      for (int r = 0; r < d; ++r)
        if (coords(r, j).get_den() != 1) {
          std::vector<Rational> elem(d);
          for (int k = 0; k < d; ++k) elem[k] = image(k, j);
          throw ValidationError("not an ideal: b" + std::to_string(i) + " times basis vector " + std::to_string(j) +
                                " = " + vector_string(elem) + " lies outside the lattice");
        }
  }
}

}  // namespace

IntegralIdeal make_ideal_from_generators(const NumberField& field, const std::vector<FieldElement>& generators,
                                         std::string label) {
  const int d = field.degree();
  std::vector<std::vector<Integer>> vectors;
  for (const auto& g : generators) {
    if (!field.is_integral(g)) throw ValidationError("ideal generator is not integral: " + field.element_to_string(g));
    for (int j = 0; j < d; ++j) {
      std::vector<Rational> e(d, Rational(0));
      e[j] = 1;
      FieldElement prod = field.multiply(g, FieldElement{e});
      std::vector<Integer> v;
      for (const auto& c : prod.coords) v.push_back(c.get_num());
      vectors.push_back(std::move(v));
    }
  }
  if (vectors.empty()) throw ValidationError("zero ideal: no generators");
  IntegralIdeal ideal{std::move(label), canonical_columns(vectors, d)};
  verify_closure(field, ideal.basis);
  return ideal;
}

IntegralIdeal make_ideal_from_basis(const NumberField& field, const IntegerMatrix& columns, std::string label) {
  const int d = field.degree();
  if (columns.rows() != static_cast<std::size_t>(d)) throw ValidationError("ideal basis has wrong row count");
  std::vector<std::vector<Integer>> vectors;
  for (std::size_t j = 0; j < columns.cols(); ++j) vectors.push_back(columns.column(j));
  IntegralIdeal ideal{std::move(label), canonical_columns(vectors, d)};
  verify_closure(field, ideal.basis);
  return ideal;
}

IntegralIdeal unit_ideal(const NumberField& field, std::string label) {
  return {std::move(label), IntegerMatrix::identity(field.degree())};
}

Integer ideal_norm(const IntegralIdeal& ideal) { return abs(determinant(ideal.basis)); }

Integer rational_shrink(const IntegralIdeal& ideal) {
  RationalMatrix inv = inverse(to_rational(ideal.basis));
  Integer q = 1;
  for (const auto& v : inv.data()) q = lcm(q, v.get_den());
  return q;
}

bool ideal_contains(const IntegralIdeal& ideal, const std::vector<Integer>& coords) {
  std::vector<Rational> b(coords.begin(), coords.end());
  for (const auto& c : solve(to_rational(ideal.basis), b))
    if (c.get_den() != 1) return false;
  return true;
}

std::vector<Integer> ideal_coordinates(const IntegralIdeal& ideal, const std::vector<Integer>& coords) {
  std::vector<Rational> b(coords.begin(), coords.end());
  std::vector<Integer> out;
  for (const auto& c : solve(to_rational(ideal.basis), b)) {
    if (c.get_den() != 1) throw ValidationError("element is not in ideal " + ideal.label);
    out.push_back(c.get_num());
  }
  return out;
}

IdealInclusion make_inclusion(const IntegralIdeal& inner, const IntegralIdeal& outer) {
  RationalMatrix c = inverse(to_rational(outer.basis)) * to_rational(inner.basis);
  if (!is_integral(c))
    throw ValidationError("ideal " + inner.label + " is not contained in ideal " + outer.label);
  IntegerMatrix ci = to_integer(c);
  return {inner, outer, ci, abs(determinant(ci))};
}

RestrictionMap restriction_map(const IdealInclusion& inclusion) {
  return {inclusion.c.transpose(), inclusion.index};
}

}  // namespace torunits
