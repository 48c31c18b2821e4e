#include <catch_amalgamated.hpp>

#include <numeric>

#include "support.hpp"
#include "torunits/quasi_orbits.hpp"

using namespace torunits;

namespace {

ToralRep rep_of(const std::string& name) {
  auto ws = testing::suite(name);
  return ToralRep(ws.units, ws.ideals.front());
}

}  // namespace

TEST_CASE("power test set") {
  CHECK(power_test_set(2) == std::vector<long>{1, 2, 3, 4, 5, 6, 8, 10, 12});
  // oracle: phi by counting coprime residues
  for (long m = 1; m <= 200; ++m) {
    long count = 0;
    for (long a = 1; a <= m; ++a)
      if (std::gcd(a, m) == 1) ++count;
    CHECK(euler_phi(m) == count);
  }
  auto m3 = power_test_set(3);
  CHECK(m3.back() == 30);
  CHECK(std::find(m3.begin(), m3.end(), 11) == m3.end());
}

TEST_CASE("word enumeration order") {
  auto w = enumerate_words(2, 2);
  REQUIRE(w.size() == 4 + 8);
  CHECK(w[0] == std::vector<long>{-1, 0});
  CHECK(w[1] == std::vector<long>{0, -1});
  CHECK(w[2] == std::vector<long>{0, 1});
  CHECK(w[3] == std::vector<long>{1, 0});
  CHECK(enumerate_words(0, 3).empty());
}

TEST_CASE("totally irreducible unit search") {
  auto ws = testing::suite("sqrt2");
  auto cert = totally_irreducible_unit_search(ws.units, 3);
  REQUIRE(cert);
  CHECK(cert->exponents == power_test_set(2));
  for (int deg : cert->minpoly_degrees) CHECK(deg == 2);
  CHECK(recheck_certificate(ToralRep(ws.units, ws.ideals[0]), *cert));

  REQUIRE_THROWS_AS(totally_irreducible_unit_search(testing::suite("gaussian").units, 3), ValidationError);
  CHECK_FALSE(totally_irreducible_unit_search(testing::suite("zeta5").units, 4));

  for (const char* name : {"real-cubic", "x4m2", "cbrt2", "sqrt5"}) {
    INFO(name);
    auto w = testing::suite(name);
    auto serial = totally_irreducible_unit_search(w.units, 3, Exec::serial);
    auto parallel = totally_irreducible_unit_search(w.units, 3, Exec::parallel);
    REQUIRE(serial);
    REQUIRE(parallel);
    CHECK(serial->word == parallel->word);
    CHECK(recheck_certificate(ToralRep(w.units, w.ideals[0]), *serial));
  }
}

TEST_CASE("CM detection") {
  CHECK(is_cm(testing::suite("x4m2").units, 3).state == CMState::not_cm);
  CHECK(is_cm(testing::suite("x4m2").units, 3).reason == "real embedding");

  auto gi = testing::suite("gaussian");
  auto ci = is_cm(gi.units, 3);
  REQUIRE(ci.state == CMState::cm);
  CHECK(ci.cm->conjugation == gi.field->neg(gi.field->theta()));

  auto z5 = testing::suite("zeta5");
  auto c5 = is_cm(z5.units, 3);
  REQUIRE(c5.state == CMState::cm);
  const auto& k = *z5.field;
  CHECK(c5.cm->conjugation == k.pow(k.theta(), 4));
  CHECK(c5.cm->fixed_field_poly.degree() == 2);
  CHECK(c5.cm->fixed_field_totally_real);

  auto z7 = testing::suite("zeta7");
  auto c7 = is_cm(z7.units, 3);
  REQUIRE(c7.state == CMState::cm);
  CHECK(c7.cm->conjugation == z7.field->pow(z7.field->theta(), 6));

  // x^4 + 5 has no real embedding; its Galois closure is not abelian, so the
  // field is not CM, and a totally irreducible unit decides it.
  auto q = NumberField::create(RationalPolynomial({5, 0, 0, 0, 1}));
  auto cq = find_cm_conjugation(*q);
  CHECK_FALSE((cq && cq->valid()));
}

TEST_CASE("expanding units") {
  auto rep = rep_of("sqrt2");
  const auto& h = rep.field().embeddings();
  auto e1 = expanding_unit(rep, h[0], 6);
  CHECK(e1.word.exponents == std::vector<long>{1});
  CHECK(e1.abs_lower > Rational(24, 10));
  auto e2 = expanding_unit(rep, h[1], 6);
  CHECK(e2.word.exponents == std::vector<long>{-1});
  REQUIRE_THROWS_AS(expanding_unit(rep_of("gaussian"), rep_of("gaussian").field().embeddings()[0], 6), ValidationError);
}

TEST_CASE("berend conditions and verdicts") {
  auto cubic = berend_conditions(rep_of("real-cubic"), 4);
  CHECK(cubic.c1.has_value());
  CHECK(cubic.c2_complete());
  CHECK(cubic.c3);
  auto s2 = berend_conditions(rep_of("sqrt2"), 4);
  CHECK(s2.c1.has_value());
  CHECK(s2.c2_complete());
  CHECK_FALSE(s2.c3);
  auto z5 = berend_conditions(rep_of("zeta5"), 4);
  CHECK_FALSE(z5.c1.has_value());
  CHECK(z5.c2_complete());
  CHECK_FALSE(z5.c3);

  const std::vector<std::pair<const char*, Verdict>> expected{
      {"sqrt2", Verdict::not_id},      {"sqrt5", Verdict::not_id}, {"gaussian", Verdict::not_id},
      {"sqrt-5", Verdict::not_id},     {"cbrt2", Verdict::not_id}, {"real-cubic", Verdict::id},
      {"x4m2", Verdict::id},           {"zeta5", Verdict::not_id}, {"zeta7", Verdict::not_id}};
  for (const auto& [name, v] : expected) {
    INFO(name);
    auto verdict = id_verdict(rep_of(name), 4);
    CHECK(verdict.verdict == v);
    CHECK(verdict.agreement);
  }
  auto z7 = id_verdict(rep_of("zeta7"), 4);
  CHECK(z7.cm.state == CMState::cm);
  CHECK(z7.rank == 2);
  CHECK(z7.matrix_route == Verdict::undetermined);
}

TEST_CASE("avoid_sublattices") {
  IntegerMatrix e1{{1}, {0}}, e2{{0}, {1}}, diag{{1}, {1}};
  CHECK(avoid_sublattices({e1}, 2) == std::vector<Integer>{1, 1});
  CHECK(avoid_sublattices({e1, e2}, 2) == std::vector<Integer>{1, 1});
  auto m = avoid_sublattices({diag}, 2);
  CHECK(m[0] != m[1]);
  REQUIRE_THROWS_AS(avoid_sublattices({IntegerMatrix::identity(2)}, 2), ValidationError);

  IntegerMatrix plane{{1, 0}, {0, 1}, {0, 0}}, line{{1}, {1}, {1}};
  auto v = avoid_sublattices({plane, line}, 3);
  for (const auto& s : std::vector<IntegerMatrix>{plane, line}) {
    IntegerMatrix ext(3, s.cols() + 1);
    for (int r = 0; r < 3; ++r) {
      for (std::size_t c = 0; c < s.cols(); ++c) ext(r, c) = s(r, c);
      ext(r, s.cols()) = v[r];
    }
    CHECK(Lattice::from_rows(ext.transpose()).rank() == Lattice::from_rows(s.transpose()).rank() + 1);
  }
}

TEST_CASE("quasi-orbit space") {
  auto rep = rep_of("real-cubic");
  auto v = id_verdict(rep, 4);
  auto s = quasi_orbit_space(rep, 2, v);
  CHECK(s.omega_infinity);
  std::size_t points = 0;
  for (const auto& o : s.finite_quasi_orbits) points += o.size();
  CHECK(points == 8);
  auto s1 = quasi_orbit_space(rep, 1, v);
  REQUIRE(s1.finite_quasi_orbits.size() == 1);
  CHECK(s1.finite_quasi_orbits[0].size() == 1);

  auto r2 = rep_of("sqrt2");
  REQUIRE_THROWS_WITH(quasi_orbit_space(r2, 2, id_verdict(r2, 4)), Catch::Matchers::ContainsSubstring("only under ID"));
}
