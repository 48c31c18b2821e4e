#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "torunits/berend.hpp"

namespace torunits {

enum class Scheme { ball_enumeration, random_walk };
std::string to_string(Scheme s);

struct SimConfig {
  Scheme scheme = Scheme::random_walk;
  int radius = 1;             // ball_enumeration
  std::int64_t steps = 1000;  // random_walk
  std::uint64_t seed = 0;
  std::vector<double> start;
};

/// Row-major sample storage, one torus point per row.
struct Samples {
  int dim = 0;
  std::vector<double> coords;

  std::size_t size() const { return dim ? coords.size() / dim : 0; }
  const double* operator[](std::size_t i) const { return coords.data() + i * dim; }
  void push(const std::vector<double>& x) { coords.insert(coords.end(), x.begin(), x.end()); }
};

/// ball_enumeration: rho(g) x0 for every word with |free exponents|_1 <= R
/// and every torsion power. random_walk: N steps, each by a uniformly chosen
/// free generator or inverse (torsion generator when the rank is 0).
Samples simulate_orbit(const ToralRep& rep, const SimConfig& config);

std::vector<double> random_start(int d, std::uint64_t seed);

/// Invariant subtorus of a CM field: the annihilator of the conjugation-fixed
/// part F of the ideal. Points are basis * t for t in the coordinate torus,
/// and each free generator acts on t by an integer matrix.
struct Subtorus {
  IntegerMatrix basis;  // d x m, columns span the subtorus
  IntegerMatrix fixed;  // rows: basis of F in ideal coordinates
  std::vector<IntegerMatrix> free_action;
  std::vector<IntegerMatrix> free_inverse;
  int dim() const { return static_cast<int>(basis.cols()); }
};

/// Throws ValidationError when the ideal is not stable under the conjugation.
Subtorus real_subtorus(const ToralRep& rep, const CMCertificate& cm);
/// Random walk on the subtorus started at basis * t0, sampled in torus coordinates.
Samples simulate_subtorus_walk(const ToralRep& rep, const Subtorus& sub, const std::vector<double>& t0,
                               std::int64_t steps, std::uint64_t seed);

struct EquidistReport {
  std::vector<std::vector<long>> frequencies;
  std::vector<double> magnitudes;  // |S(k)|
  std::size_t samples = 0;
  std::string scheme;
  double max_magnitude() const;
};

/// |(1/N) sum_t exp(2 pi i k . x_t)|; throws ValidationError on an empty sample set.
EquidistReport weyl_sums(const Samples& samples, const std::vector<std::vector<long>>& frequencies,
                         Exec exec = Exec::parallel);

/// Independent random walks from random starts, one per seed, in parallel across seeds.
std::vector<EquidistReport> equidistribution_trials(const ToralRep& rep, const std::vector<std::uint64_t>& seeds,
                                                    std::int64_t steps,
                                                    const std::vector<std::vector<long>>& frequencies,
                                                    Exec exec = Exec::parallel);

/// Columns t, x1..xd; values printed with %.12g.
void write_samples_csv(std::ostream& os, const Samples& samples);

}  // namespace torunits
