#include "torunits/exact/normal_form.hpp"

#include <algorithm>
#include <cstdlib>

namespace torunits {

namespace {

// rows (a, b) <- (s*a + t*b, x*a + y*b) for a unimodular 2x2 [[s,t],[x,y]].
void combine_rows(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                  const Integer& x, const Integer& y) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer ra = m(a, j), rb = m(b, j);
    m(a, j) = s * ra + t * rb;
    m(b, j) = x * ra + y * rb;
  }
}

void add_row_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(target, j) += factor * m(source, j);
}

void add_col_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, target) += factor * m(i, source);
}

void negate_row(IntegerMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

HermiteDecomposition hermite_normal_form(const IntegerMatrix& m) {
  HermiteDecomposition out{m, IntegerMatrix::identity(m.rows()), {}};
  IntegerMatrix& h = out.h;
  IntegerMatrix& u = out.u;
  std::size_t row = 0;
  for (std::size_t col = 0; col < h.cols() && row < h.rows(); ++col) {
    for (std::size_t i = row + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      Integer a = h(row, col), b = h(i, col), s, t;
      Integer g = extended_gcd(a, b, s, t);
      Integer x = -b / g, y = a / g;
      combine_rows(h, row, i, s, t, x, y);
      combine_rows(u, row, i, s, t, x, y);
    }
    if (h(row, col) == 0) continue;
    if (h(row, col) < 0) {
      negate_row(h, row);
      negate_row(u, row);
    }
    for (std::size_t k = 0; k < row; ++k) {
      Integer q = floor_div(h(k, col), h(row, col));
      add_row_multiple(h, k, row, -q);
      add_row_multiple(u, k, row, -q);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

std::vector<Integer> SNFDecomposition::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(s.rows(), s.cols()); ++i) d.push_back(s(i, i));
  return d;
}

std::vector<Integer> SNFDecomposition::nontrivial_factors() const {
  std::vector<Integer> d;
  for (const auto& v : diagonal())
    if (v != 1) d.push_back(v);
  return d;
}

SNFDecomposition smith_normal_form(const IntegerMatrix& m) {
  SNFDecomposition out{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  IntegerMatrix& s = out.s;
  IntegerMatrix& u = out.u;
  IntegerMatrix& v = out.v;
  const std::size_t limit = std::min(s.rows(), s.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
          if (s(i, j) == 0) continue;
          Integer a = abs(s(i, j));
          if (!found || a < best) {
            best = a;
            pi = i;
            pj = j;
            found = true;
          }
        }
      if (!found) return out;
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Integer q = s(i, t) / s(t, t);
        add_row_multiple(s, i, t, -q);
        add_row_multiple(u, i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Integer q = s(t, j) / s(t, t);
        add_col_multiple(s, j, t, -q);
        add_col_multiple(v, j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < s.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < s.cols(); ++j) {
          if (s(i, j) % s(t, t) != 0) {
            add_row_multiple(s, t, i, 1);
            add_row_multiple(u, t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (s(t, t) < 0) {
      negate_row(s, t);
      negate_row(u, t);
    }
  }
  return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& m) {
  auto hd = hermite_normal_form(m.transpose());
  const std::size_t r = hd.pivot_columns.size();
  IntegerMatrix k(hd.u.rows() - r, m.cols());
  for (std::size_t i = r; i < hd.u.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k(i - r, j) = hd.u(i, j);
  return Lattice::from_rows(k).basis();
}

Lattice Lattice::from_rows(const IntegerMatrix& generators) {
  Lattice l(generators.cols());
  auto hd = hermite_normal_form(generators);
  const std::size_t r = hd.pivot_columns.size();
  l.basis_ = IntegerMatrix(r, generators.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) l.basis_(i, j) = hd.h(i, j);
  l.pivots_ = hd.pivot_columns;
  return l;
}

Lattice Lattice::from_vectors(const std::vector<std::vector<Integer>>& generators, std::size_t dim) {
  if (generators.empty()) return Lattice(dim);
  return from_rows(IntegerMatrix::from_rows(generators, dim));
}

Integer Lattice::index() const {
  if (!full_rank()) throw ValidationError("index of a lattice that is not of full rank");
  Integer idx = 1;
  for (std::size_t i = 0; i < rank(); ++i) idx *= basis_(i, pivots_[i]);
  return idx;
}

std::vector<Integer> Lattice::coordinates(const std::vector<Integer>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("lattice vector dimension mismatch");
  std::vector<Integer> rest = v;
  std::vector<Integer> coords(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    const Integer& p = basis_(i, pivots_[i]);
    if (rest[pivots_[i]] % p != 0) throw ValidationError("vector not in lattice");
    coords[i] = rest[pivots_[i]] / p;
    for (std::size_t j = 0; j < dim_; ++j) rest[j] -= coords[i] * basis_(i, j);
  }
  for (const auto& x : rest)
    if (x != 0) throw ValidationError("vector not in lattice");
  return coords;
}

bool Lattice::contains(const std::vector<Integer>& v) const {
  if (v.size() != dim_) throw std::invalid_argument("lattice vector dimension mismatch");
  std::vector<Integer> rest = v;
  for (std::size_t i = 0; i < rank(); ++i) {
    const Integer& p = basis_(i, pivots_[i]);
    if (rest[pivots_[i]] % p != 0) return false;
    Integer c = rest[pivots_[i]] / p;
    if (c == 0) continue;
    for (std::size_t j = pivots_[i]; j < dim_; ++j) rest[j] -= c * basis_(i, j);
  }
  return std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; });
}

bool Lattice::add(const std::vector<Integer>& v) {
  if (contains(v)) return false;
  IntegerMatrix g(rank() + 1, dim_);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) g(i, j) = basis_(i, j);
  for (std::size_t j = 0; j < dim_; ++j) g(rank(), j) = v[j];
  *this = from_rows(g);
  return true;
}

Lattice Lattice::sum(const Lattice& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("lattice dimension mismatch");
  IntegerMatrix g(rank() + other.rank(), dim_);
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) g(i, j) = basis_(i, j);
  for (std::size_t i = 0; i < other.rank(); ++i)
    for (std::size_t j = 0; j < dim_; ++j) g(rank() + i, j) = other.basis_(i, j);
  if (g.rows() == 0) return Lattice(dim_);
  return from_rows(g);
}

}  // namespace torunits
