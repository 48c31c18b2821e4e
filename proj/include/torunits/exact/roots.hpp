#pragma once

#include <vector>

#include "torunits/exact/interval.hpp"

namespace torunits {

/// Certified isolation of the complex roots of a squarefree rational polynomial.
///
/// Real roots are isolated by Sturm-sequence bisection; each real box is the
/// disc around the midpoint of an interval with exactly one root. Non-real
/// roots are located by Aberth iteration, polished by exact Newton steps and
/// certified with Weierstrass inclusion discs: the discs of radius
/// deg * |p(z_i) / (lc * prod_{j != i}(z_i - z_j))| contain all roots, and a
/// disc disjoint from the others contains exactly one. Complex roots are
/// reported by their upper-half-plane representative.
struct RootIsolation {
  std::vector<CertifiedInterval> real_roots;     // ascending
  std::vector<CertifiedInterval> complex_roots;  // im > 0, sorted by (re, im)
  long precision_bits = 0;

  int r() const { return static_cast<int>(real_roots.size()); }
  int s() const { return static_cast<int>(complex_roots.size()); }
  /// real roots, then each complex representative followed by its conjugate.
  std::vector<CertifiedInterval> all_roots() const;
};

/// Every returned disc has radius <= 2^-precision_bits and contains exactly one
/// root; discs are pairwise disjoint. Throws ValidationError for constant or
/// non-squarefree input (the message names the repeated-factor gcd).
RootIsolation isolate_roots(const RationalPolynomial& p, long precision_bits = 64);

}  // namespace torunits
