#include "torunits/sim.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <random>

#include "torunits/exact/normal_form.hpp"

namespace torunits {

std::string to_string(Scheme s) { return s == Scheme::ball_enumeration ? "ball_enumeration" : "random_walk"; }

namespace {

struct DMatrix {
  int rows = 0, cols = 0;
  std::vector<double> a;
};

DMatrix to_double(const IntegerMatrix& m) {
  DMatrix out{static_cast<int>(m.rows()), static_cast<int>(m.cols()), {}};
  out.a.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.a.push_back(m(i, j).get_d());
  return out;
}

double frac(double v) {
  double f = v - std::floor(v);
  return f >= 1.0 ? 0.0 : f;
}

void apply_mod1(const DMatrix& m, const std::vector<double>& x, std::vector<double>& y) {
  y.assign(m.rows, 0.0);
  for (int i = 0; i < m.rows; ++i) {
    long double s = 0;
    for (int j = 0; j < m.cols; ++j) s += static_cast<long double>(m.a[i * m.cols + j]) * x[j];
    y[i] = frac(static_cast<double>(s - std::floor(s)));
  }
}

std::vector<DMatrix> walk_generators(const ToralRep& rep) {
  std::vector<DMatrix> gens;
  if (rep.rank() == 0) {
    gens.push_back(to_double(rep.torsion_matrix()));
    gens.push_back(to_double(rep.matrix({rep.torsion_order() - 1, {}})));
    return gens;
  }
  for (int i = 0; i < rep.rank(); ++i) {
    gens.push_back(to_double(rep.free_matrix(i)));
    gens.push_back(to_double(rep.free_inverse(i)));
  }
  return gens;
}

void check_start(const std::vector<double>& x, int d) {
  if (static_cast<int>(x.size()) != d) throw ValidationError("start point has the wrong dimension");
  for (double v : x)
    if (!std::isfinite(v)) throw ValidationError("start point is not finite");
}

std::vector<double> reduced(const std::vector<double>& x) {
  std::vector<double> out;
  for (double v : x) out.push_back(frac(v));
  return out;
}

Samples walk(const std::vector<DMatrix>& gens, std::vector<double> x, std::int64_t steps, std::uint64_t seed,
             const DMatrix* embed, int dim) {
  Samples out;
  out.dim = dim;
  out.coords.reserve(static_cast<std::size_t>(steps) * dim);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
  std::vector<double> y, z;
  for (std::int64_t t = 0; t < steps; ++t) {
    apply_mod1(gens[pick(rng)], x, y);
    x.swap(y);
    if (embed) {
      apply_mod1(*embed, x, z);
      out.push(z);
    } else {
      out.push(x);
    }
  }
  return out;
}

// R with basis * R = m * basis; basis has full column rank.
IntegerMatrix restrict_to(const IntegerMatrix& basis, const IntegerMatrix& m) {
  RationalMatrix b = to_rational(basis), bt = to_rational(basis.transpose());
  RationalMatrix r = inverse(bt * b) * bt * to_rational(m * basis);
  if (!is_integral(r)) throw InternalError("subtorus is not invariant under a generator");
  IntegerMatrix ri = to_integer(r);
  if (!(basis * ri == m * basis)) throw InternalError("subtorus is not invariant under a generator");
  return ri;
}

}  // namespace

std::vector<double> random_start(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(d);
  for (auto& v : x) v = u(rng);
  return x;
}

Samples simulate_orbit(const ToralRep& rep, const SimConfig& config) {
  const int d = rep.dim();
  check_start(config.start, d);
  if (config.scheme == Scheme::random_walk) {
    if (config.steps <= 0) throw ValidationError("steps must be positive");
    return walk(walk_generators(rep), reduced(config.start), config.steps, config.seed, nullptr, d);
  }
  if (config.radius <= 0) throw ValidationError("radius must be positive");
  auto words = enumerate_words(rep.rank(), config.radius);
  words.insert(words.begin(), std::vector<long>(rep.rank(), 0));
  Samples out;
  out.dim = d;
  const auto x0 = reduced(config.start);
  std::vector<double> y;
  for (long t = 0; t < rep.torsion_order(); ++t)
    for (const auto& e : words) {
      apply_mod1(to_double(rep.matrix({t, e})), x0, y);
      out.push(y);
    }
  return out;
}

Subtorus real_subtorus(const ToralRep& rep, const CMCertificate& cm) {
  if (!cm.valid()) throw ValidationError("conjugation certificate is not valid");
  const auto& k = rep.field();
  const int d = rep.dim();
  RationalMatrix g(d, d);
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> e(d, Rational(0));
    e[j] = 1;
    auto img = apply_automorphism(k, cm.conjugation, k.from_coords(e));
    for (int i = 0; i < d; ++i) g(i, j) = img.coords[i];
  }
  RationalMatrix b = to_rational(rep.ideal().basis);
  RationalMatrix gj = inverse(b) * g * b;
  if (!is_integral(gj)) throw ValidationError("ideal " + rep.ideal().label + " is not stable under the conjugation");
  IntegerMatrix shifted = to_integer(gj);
  for (int i = 0; i < d; ++i) shifted(i, i) -= 1;

  Subtorus sub;
  sub.fixed = integer_kernel(shifted);
  sub.basis = integer_kernel(sub.fixed).transpose();
  for (int i = 0; i < rep.rank(); ++i) {
    sub.free_action.push_back(restrict_to(sub.basis, rep.free_matrix(i)));
    sub.free_inverse.push_back(restrict_to(sub.basis, rep.free_inverse(i)));
  }
  return sub;
}

Samples simulate_subtorus_walk(const ToralRep& rep, const Subtorus& sub, const std::vector<double>& t0,
                               std::int64_t steps, std::uint64_t seed) {
  check_start(t0, sub.dim());
  if (steps <= 0) throw ValidationError("steps must be positive");
  if (rep.rank() == 0) throw ValidationError("subtorus walk needs free generators");
  std::vector<DMatrix> gens;
  for (std::size_t i = 0; i < sub.free_action.size(); ++i) {
    gens.push_back(to_double(sub.free_action[i]));
    gens.push_back(to_double(sub.free_inverse[i]));
  }
  const DMatrix embed = to_double(sub.basis);
  return walk(gens, reduced(t0), steps, seed, &embed, rep.dim());
}

double EquidistReport::max_magnitude() const {
  double m = 0;
  for (double v : magnitudes) m = std::max(m, v);
  return m;
}

EquidistReport weyl_sums(const Samples& samples, const std::vector<std::vector<long>>& frequencies, Exec exec) {
  if (samples.size() == 0) throw ValidationError("empty sample set");
  EquidistReport r;
  r.frequencies = frequencies;
  r.samples = samples.size();
  const long n = static_cast<long>(samples.size());
  const int d = samples.dim;
  for (const auto& k : frequencies) {
    if (static_cast<int>(k.size()) != d) throw ValidationError("frequency has the wrong dimension");
    double re = 0, im = 0;
    auto phase = [&](long t) {
      const double* x = samples[t];
      double s = 0;
      for (int i = 0; i < d; ++i) s += static_cast<double>(k[i]) * x[i];
      return 2 * M_PI * (s - std::floor(s));
    };
    if (exec == Exec::serial) {
      for (long t = 0; t < n; ++t) {
        const double a = phase(t);
        re += std::cos(a);
        im += std::sin(a);
      }
    } else {
#pragma omp parallel for reduction(+ : re, im) schedule(static)
      for (long t = 0; t < n; ++t) {
        const double a = phase(t);
        re += std::cos(a);
        im += std::sin(a);
      }
    }
    r.magnitudes.push_back(std::min(1.0, std::hypot(re, im) / static_cast<double>(n)));
  }
  return r;
}

std::vector<EquidistReport> equidistribution_trials(const ToralRep& rep, const std::vector<std::uint64_t>& seeds,
                                                    std::int64_t steps,
                                                    const std::vector<std::vector<long>>& frequencies, Exec exec) {
  std::vector<EquidistReport> out(seeds.size());
  auto run = [&](std::size_t i) {
    SimConfig c;
    c.scheme = Scheme::random_walk;
    c.steps = steps;
    c.seed = seeds[i];
    c.start = random_start(rep.dim(), seeds[i]);
    out[i] = weyl_sums(simulate_orbit(rep, c), frequencies, Exec::serial);
    out[i].scheme = to_string(c.scheme);
  };
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < seeds.size(); ++i) run(i);
    return out;
  }
  std::exception_ptr error;
  const long count = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      run(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(torunits_trials_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

void write_samples_csv(std::ostream& os, const Samples& samples) {
  os << "t";
  for (int i = 1; i <= samples.dim; ++i) os << ",x" << i;
  os << "\n";
  char buf[32];
  for (std::size_t t = 0; t < samples.size(); ++t) {
    os << t;
    for (int i = 0; i < samples.dim; ++i) {
      std::snprintf(buf, sizeof buf, "%.12g", samples[t][i]);
      os << "," << buf;
    }
    os << "\n";
  }
}

}  // namespace torunits
