#pragma once

#include <vector>

#include "torunits/exact/matrix.hpp"

namespace torunits {

/// Row-operation Hermite normal form: `h == u * m`, `u` unimodular.
///
/// `h` is in row echelon form: each nonzero row starts with a positive pivot
/// strictly to the right of the previous row's pivot, entries above a pivot
/// lie in [0, pivot), and zero rows are at the bottom. The row space of `m`
/// (the lattice generated by its rows) equals that of `h`.
struct HermiteDecomposition {
  IntegerMatrix h;
  IntegerMatrix u;
  std::vector<std::size_t> pivot_columns;
};

HermiteDecomposition hermite_normal_form(const IntegerMatrix& m);

/// `u * m * v == s` with `s` diagonal, d1 | d2 | ..., nonnegative entries.
struct SNFDecomposition {
  IntegerMatrix s;
  IntegerMatrix u;
  IntegerMatrix v;

  /// Diagonal of `s` (length min(rows, cols)).
  std::vector<Integer> diagonal() const;
  /// Diagonal entries different from 1, as invariant factors of a quotient group
  /// (zeros mean free Z factors).
  std::vector<Integer> nontrivial_factors() const;
};

SNFDecomposition smith_normal_form(const IntegerMatrix& m);

/// Saturated basis (as rows) of {x in Z^cols : m x = 0}.
IntegerMatrix integer_kernel(const IntegerMatrix& m);

/// Sublattice of Z^dim stored as the nonzero rows of its Hermite normal form.
class Lattice {
 public:
  explicit Lattice(std::size_t dim) : dim_(dim), basis_(0, dim) {}
  static Lattice from_rows(const IntegerMatrix& generators);
  static Lattice from_vectors(const std::vector<std::vector<Integer>>& generators, std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.rows(); }
  bool full_rank() const { return rank() == dim_; }
  /// Rows of the canonical HNF basis.
  const IntegerMatrix& basis() const { return basis_; }
  /// |Z^dim / L|; throws unless full rank.
  Integer index() const;
  bool contains(const std::vector<Integer>& v) const;
  /// Integer coordinates of v in the canonical basis; throws if v is not in the lattice.
  std::vector<Integer> coordinates(const std::vector<Integer>& v) const;
  /// Adds a generator; returns false if it was already contained.
  bool add(const std::vector<Integer>& v);
  Lattice sum(const Lattice& other) const;
  bool operator==(const Lattice& other) const { return dim_ == other.dim_ && basis_ == other.basis_; }

 private:
  std::size_t dim_;
  IntegerMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace torunits
