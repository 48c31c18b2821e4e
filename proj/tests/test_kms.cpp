#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "torunits/kms.hpp"

using namespace torunits;

namespace {

ToralRep rep_of(const std::string& name) {
  auto ws = testing::suite(name);
  return ToralRep(ws.units, ws.ideals.front());
}

RationalTorusPoint pt(std::initializer_list<long> num, long q) {
  std::vector<Integer> n;
  for (long x : num) n.emplace_back(x);
  return make_point(n, Integer(q));
}

std::vector<Integer> ivec(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("classification status") {
  CHECK(classification_status(id_verdict(rep_of("gaussian"), 4)).status ==
        ClassificationStatus::imaginary_quadratic_complete);
  CHECK(classification_status(id_verdict(rep_of("sqrt2"), 4)).status == ClassificationStatus::rank_one_poulsen);
  CHECK(classification_status(id_verdict(rep_of("zeta7"), 4)).status == ClassificationStatus::cm_incomplete);
  CHECK(classification_status(id_verdict(rep_of("real-cubic"), 4)).status == ClassificationStatus::non_cm_conjectural);
  IDVerdict v;
  v.rank = 2;
  v.cm.state = CMState::undetermined;
  CHECK(classification_status(v).status == ClassificationStatus::undetermined);
  CHECK(to_string(ClassificationStatus::cm_incomplete) == "cm_incomplete");
}

TEST_CASE("catalog for Q(i)") {
  auto rep = rep_of("gaussian");
  auto status = classification_status(id_verdict(rep, 4));
  auto cat = enumerate_extremal_params({rep}, 2, status);
  REQUIRE(cat.ideals.size() == 1);
  CHECK_FALSE(cat.ideals[0].haar);
  CHECK(cat.discrete_parameters == 10);
  std::vector<std::size_t> sizes;
  std::vector<Integer> orders;
  for (const auto& s : cat.ideals[0].strata) {
    sizes.push_back(s.orbit.size());
    orders.push_back(s.torsion_characters);
    CHECK(s.characters.torus_rank == 0);
  }
  CHECK(sizes == std::vector<std::size_t>{1, 2, 1});
  CHECK(orders == std::vector<Integer>{4, 2, 4});
}

TEST_CASE("catalog for Q(sqrt2) has Haar and continuous characters") {
  auto rep = rep_of("sqrt2");
  auto cat = enumerate_extremal_params({rep}, 5, classification_status(id_verdict(rep, 4)), 3);
  CHECK(cat.ideals[0].haar);
  for (const auto& s : cat.ideals[0].strata) {
    CHECK(s.characters.torus_rank == 1);
    CHECK(s.sample.size() == static_cast<std::size_t>(3 * s.torsion_characters.get_si()));
  }
  auto serial = enumerate_extremal_params({rep}, 5, cat.status, 0, Exec::serial);
  REQUIRE(serial.ideals[0].strata.size() == cat.ideals[0].strata.size());
  for (std::size_t i = 0; i < serial.ideals[0].strata.size(); ++i)
    CHECK(serial.ideals[0].strata[i].isotropy.lattice == cat.ideals[0].strata[i].isotropy.lattice);
}

TEST_CASE("trace values") {
  auto rep = rep_of("sqrt2");
  auto g5 = reduce_group_mod_q(rep, 5);
  auto o = orbit_of(pt({1, 0}, 5), rep);
  auto h = isotropy(o, g5, rep);
  auto p = orbit_param(rep, o, h, trivial_character(h));
  // the orbit hits each nonzero first coordinate three times: 3 * (-1) / 12
  auto t = evaluate_trace(p, rep, ivec({1, 0}), {0, {0}});
  CHECK(std::abs(t - std::complex<double>(-0.25, 0)) < 1e-10);
  // as a field element
  const auto& k = rep.field();
  CHECK(std::abs(evaluate_trace(p, rep, k.one(), {0, {0}}) - t) < 1e-12);
  REQUIRE_THROWS_AS(evaluate_trace(p, rep, k.from_coords({Rational(1, 2), Rational(0)}), {0, {0}}), ValidationError);
  // u outside H gives exactly zero
  CHECK(evaluate_trace(p, rep, ivec({1, 0}), {0, {1}}) == std::complex<double>(0, 0));
  CHECK(evaluate_trace(p, rep, ivec({1, 0}), {1, {0}}) == std::complex<double>(0, 0));
  // j = 0 and u in H: the character value
  CharacterValue chi{0, {Rational(1, 4)}};
  auto pc = orbit_param(rep, o, h, chi);
  auto z = evaluate_trace(pc, rep, ivec({0, 0}), {1, {6}});
  CHECK(std::abs(z - std::polar(1.0, M_PI / 2)) < 1e-12);

  auto haar = haar_param(rep);
  CHECK(evaluate_trace(haar, rep, ivec({0, 0}), {0, {0}}) == std::complex<double>(1, 0));
  CHECK(evaluate_trace(haar, rep, ivec({0, 0}), {2, {0}}) == std::complex<double>(1, 0));
  CHECK(evaluate_trace(haar, rep, ivec({1, 0}), {0, {0}}) == std::complex<double>(0, 0));
  CHECK(evaluate_trace(haar, rep, ivec({0, 0}), {0, {1}}) == std::complex<double>(0, 0));
}

TEST_CASE("trace over an orbit matches a direct sum of the orbit points") {
  auto rep = rep_of("real-cubic");
  for (std::int64_t q : {3, 4, 5}) {
    for (const auto& o : partition_denominator(rep, q)) {
      auto h = isotropy(o, reduce_group_mod_q(rep, q), rep);
      auto p = orbit_param(rep, o, h, trivial_character(h));
      std::vector<Integer> j{2, -1, 3};
      std::complex<double> direct = 0.0;
      for (std::size_t i = 0; i < o.size(); ++i) {
        auto c = o.point(i).coords();
        double phase = 0;
        for (int k = 0; k < 3; ++k) phase += j[k].get_d() * c[k].get_d();
        direct += std::polar(1.0, 2 * M_PI * phase);
      }
      direct /= static_cast<double>(o.size());
      CHECK(std::abs(evaluate_trace(p, rep, j, {0, {0, 0}}) - direct) < 1e-10);
    }
  }
}

TEST_CASE("trace Gram matrices are positive semidefinite") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  for (const char* name : {"sqrt2", "gaussian", "real-cubic", "sqrt-5"}) {
    INFO(name);
    auto rep = rep_of(name);
    const int d = rep.dim(), n = rep.rank();
    for (std::int64_t q : {3, 5, 7}) {
      auto g = reduce_group_mod_q(rep, q);
      for (const auto& o : partition_denominator(rep, q)) {
        auto h = isotropy(o, g, rep);
        std::vector<CharacterValue> chis{trivial_character(h)};
        if (h.torsion_order > 1) chis.push_back({1, std::vector<Rational>(n, Rational(0))});
        if (n > 0) chis.push_back({0, std::vector<Rational>(n, Rational(2, 7))});
        for (const auto& chi : chis) {
          auto p = orbit_param(rep, o, h, chi);
          std::vector<std::vector<Integer>> js;
          std::vector<UnitWord> us;
          // include stabilizer elements so the character enters the matrix
          for (std::size_t r = 0; r < h.lattice.rank() && r < 3; ++r) {
            auto row = h.lattice.basis().row(r);
            us.push_back(to_word(std::vector<Integer>(row.begin(), row.end())));
            js.emplace_back(d, Integer(0));
          }
          for (int k = 0; k < 6; ++k) {
            std::vector<Integer> j(d);
            for (auto& c : j) c = small(rng);
            UnitWord u{small(rng), std::vector<long>(n)};
            for (auto& e : u.exponents) e = small(rng) % 2;
            js.push_back(j);
            us.push_back(u);
          }
          CHECK(trace_gram_min_eigenvalue(p, rep, js, us) >= -1e-8);
        }
      }
    }
  }
}
