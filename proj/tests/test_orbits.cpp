#include <catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "support.hpp"
#include "torunits/orbit.hpp"

using namespace torunits;

namespace {

RationalTorusPoint pt(std::initializer_list<long> num, long q) {
  std::vector<Integer> n;
  for (long x : num) n.emplace_back(x);
  return make_point(n, Integer(q));
}

ToralRep rep_of(const std::string& name) {
  auto ws = testing::suite(name);
  return ToralRep(ws.units, ws.ideals.front());
}

std::set<std::set<std::vector<std::int64_t>>> bfs_partition(const ToralRep& rep, std::int64_t q) {
  std::set<std::set<std::vector<std::int64_t>>> out;
  for (const auto& o : partition_denominator(rep, q)) {
    std::set<std::vector<std::int64_t>> s;
    for (auto c : o.codes) s.insert(decode_point(c, rep.dim(), q));
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST_CASE("reduce_group_mod_q examples") {
  auto rep = rep_of("sqrt2");
  auto g = reduce_group_mod_q(rep, 5);
  CHECK(g.size() == 12);
  CHECK(g.relations.index() == 12);
  CHECK(g.relations.contains({Integer(12), Integer(0)}));
  CHECK(g.relations.contains({Integer(6), Integer(1)}));
  CHECK_FALSE(g.relations.contains({Integer(6), Integer(0)}));
  // M^6 = -I mod 5 by direct multiplication
  auto m6 = word_matrix_mod(rep, {Integer(6), Integer(0)}, 5);
  CHECK(m6 == ModMatrix({4, 0, 0, 4}));

  CHECK(reduce_group_mod_q(rep, 1).size() == 1);

  auto repi = rep_of("gaussian");
  auto gi = reduce_group_mod_q(repi, 2);
  CHECK(gi.size() == 2);
  CHECK(gi.relations.contains({Integer(2)}));
  CHECK_FALSE(gi.relations.contains({Integer(1)}));
}

TEST_CASE("orbit_of examples") {
  auto rep = rep_of("sqrt2");
  CHECK(orbit_of(pt({0, 0}, 1), rep).size() == 1);
  auto o = orbit_of(pt({1, 0}, 5), rep);
  REQUIRE(o.size() == 12);
  for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 0}, {1, 2}, {3, 4}, {2, 0}, {2, 4}, {1, 3},
                                                       {4, 0}, {4, 3}, {2, 1}, {3, 0}, {3, 1}, {4, 2}})
    CHECK(o.contains(encode_point({a, b}, 5)));

  auto repi = rep_of("gaussian");
  CHECK(orbit_of(pt({1, 1}, 2), repi).size() == 1);
}

TEST_CASE("partition_denominator examples") {
  auto rep = rep_of("sqrt2");
  auto p5 = partition_denominator(rep, 5);
  REQUIRE(p5.size() == 2);
  CHECK(p5[0].size() == 12);
  CHECK(p5[1].size() == 12);
  CHECK(p5[0].base == encode_point({0, 1}, 5));
  auto p1 = partition_denominator(rep, 1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].size() == 1);

  auto repi = rep_of("gaussian");
  auto p2 = partition_denominator(repi, 2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].size() == 2);
  CHECK(p2[0].contains(encode_point({1, 0}, 2)));
  CHECK(p2[0].contains(encode_point({0, 1}, 2)));
  CHECK(p2[1].size() == 1);
  CHECK(p2[1].contains(encode_point({1, 1}, 2)));

  CHECK(exact_denominator_count(2, 5) == 24);
  CHECK(exact_denominator_count(2, 2) == 3);
  CHECK(exact_denominator_count(3, 12) == 1728 - 216 - 64 + 8);
}

TEST_CASE("isotropy examples") {
  auto rep = rep_of("sqrt2");
  auto g5 = reduce_group_mod_q(rep, 5);
  auto o = orbit_of(pt({1, 0}, 5), rep);
  auto h = isotropy(o, g5, rep);
  CHECK(h.index == 12);
  CHECK(h.lattice == Lattice::from_vectors({{Integer(6), Integer(1)}, {Integer(12), Integer(0)}}, 2));
  CHECK(h.quotient_invariants == std::vector<Integer>{12});
  CHECK(h.torsion_order == 1);
  CHECK(h.free_rank == 1);
  auto cg = character_group(h);
  CHECK(cg.torsion_invariants.empty());
  CHECK(cg.torus_rank == 1);

  auto g1 = reduce_group_mod_q(rep, 1);
  auto h0 = isotropy(orbit_of(pt({0, 0}, 1), rep), g1, rep);
  CHECK(h0.index == 1);
  CHECK(character_group(h0).torsion_invariants == std::vector<Integer>{2});

  auto repi = rep_of("gaussian");
  auto gi = reduce_group_mod_q(repi, 2);
  auto hi = isotropy(orbit_of(pt({1, 0}, 2), repi), gi, repi);
  CHECK(hi.index == 2);
  CHECK(hi.torsion_order == 2);
  CHECK(character_group(hi).torsion_invariants == std::vector<Integer>{2});
  CHECK(character_group(hi).torus_rank == 0);
  auto hi1 = isotropy(orbit_of(pt({1, 1}, 2), repi), gi, repi);
  CHECK(hi1.torsion_order == 4);

  REQUIRE_THROWS_WITH(isotropy(o, reduce_group_mod_q(rep, 7), rep), Catch::Matchers::ContainsSubstring("different q"));
}

TEST_CASE("characters") {
  auto rep = rep_of("sqrt2");
  auto g5 = reduce_group_mod_q(rep, 5);
  auto h = isotropy(orbit_of(pt({1, 0}, 5), rep), g5, rep);
  CharacterValue chi{0, {Rational(1, 3)}};
  // H = <(6,1)> is infinite cyclic; chi sends its generator to exp(2 pi i / 3)
  auto v = evaluate_character(h, chi, {1, {6}});
  CHECK(std::abs(v - std::polar(1.0, 2 * M_PI / 3)) < 1e-12);
  CHECK(std::abs(evaluate_character(h, chi, {0, {12}}) - std::polar(1.0, 4 * M_PI / 3)) < 1e-12);
  REQUIRE_THROWS_AS(evaluate_character(h, chi, {0, {1}}), ValidationError);

  auto repi = rep_of("gaussian");
  auto gi = reduce_group_mod_q(repi, 1);
  auto hi = isotropy(orbit_of(pt({0, 0}, 1), repi), gi, repi);
  CHECK(hi.torsion_order == 4);
  for (long k = 0; k < 4; ++k) {
    auto z = evaluate_character(hi, CharacterValue{k, {}}, {1, {}});
    CHECK(std::abs(z - std::polar(1.0, 2 * M_PI * k / 4)) < 1e-12);
  }
  CHECK(CharacterValue{0, {Rational(1, 3)}} == CharacterValue{0, {Rational(4, 3)}});
}

TEST_CASE("prim closure truth table") {
  const std::string id = "rep";
  PrimPoint omega = PrimPoint::omega(id);
  PrimPoint a{false, 5, 1, {0, {Rational(1, 3)}}, id};
  PrimPoint b{false, 5, 1, {0, {Rational(1, 4)}}, id};
  PrimPoint c{false, 7, 3, {1, {}}, id};

  CHECK(prim_closure_contains(a, {omega}, false));
  CHECK(prim_closure_contains(omega, {omega}, false));
  CHECK_FALSE(prim_closure_contains(omega, {a, c}, false));
  CHECK(prim_closure_contains(omega, {a, c}, true));
  CHECK(prim_closure_contains(a, {a}, false));
  CHECK_FALSE(prim_closure_contains(b, {a, c}, false));
  CHECK(prim_closure_contains(b, {a, c}, true));
  CHECK_FALSE(prim_closure_contains(a, {}, false));
  PrimPoint other = a;
  other.rep_id = "other";
  REQUIRE_THROWS_AS(prim_closure_contains(a, {other}, false), ValidationError);
}

TEST_CASE("BFS partition agrees with a naive closure oracle") {
  for (const char* name : {"sqrt2", "sqrt5", "gaussian", "sqrt-5"}) {
    auto rep = rep_of(name);
    for (std::int64_t q = 1; q <= 12; ++q) {
      INFO(name << " q=" << q);
      CHECK(bfs_partition(rep, q) == testing::naive_partition(rep, q));
    }
  }
  auto rep = rep_of("real-cubic");
  for (std::int64_t q = 1; q <= 6; ++q) CHECK(bfs_partition(rep, q) == testing::naive_partition(rep, q));
}

TEST_CASE("orbit invariants") {
  for (const char* name : {"sqrt2", "gaussian", "sqrt-5", "cbrt2", "real-cubic"}) {
    auto ws = testing::suite(name);
    for (const auto& ideal : ws.ideals) {
      ToralRep rep(ws.units, ideal);
      for (std::int64_t q = 1; q <= 8; ++q) {
        INFO(name << " " << ideal.label << " q=" << q);
        auto g = reduce_group_mod_q(rep, q);
        auto orbits = partition_denominator(rep, q);
        std::size_t total = 0;
        for (const auto& o : orbits) {
          total += o.size();
          auto h = isotropy(o, g, rep);
          CHECK(h.lattice.full_rank());
          // isotropy is the same from another point of the orbit
          auto other = orbit_of(o.point(o.size() - 1), rep);
          CHECK(isotropy(other, g, rep).lattice == h.lattice);
          // membership matches point fixing
          for (std::size_t r = 0; r < h.lattice.rank(); ++r) {
            auto row = h.lattice.basis().row(r);
            auto w = to_word(std::vector<Integer>(row.begin(), row.end()));
            CHECK(act(o.base_point(), w, rep) == o.base_point());
          }
        }
        CHECK(Integer(static_cast<unsigned long>(total)) == exact_denominator_count(rep.dim(), q));
      }
    }
  }
}
