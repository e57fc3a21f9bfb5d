#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chambers/weyl.hpp"

using namespace chambers;

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

const std::vector<RatVec> sample3 = {
    rv({Rat(1), Rat(0), Rat(0)}),
    rv({rat_of(5, 3), rat_of(-7, 2), rat_of(17, 6)}),
    rv({rat_of(-2, 5), rat_of(9, 5), rat_of(-2, 5)}),
};

}  // namespace

TEST_CASE("simple reflections") {
  CHECK(simple_reflect(1, rv({rat_of(1, 2), Rat(0), rat_of(1, 2)})) ==
        rv({rat_of(1, 2), Rat(0), rat_of(1, 2)}));
  CHECK(simple_reflect(1, rv({Rat(1), Rat(2), Rat(3)})) == rv({Rat(3), Rat(-2), Rat(5)}));
  CHECK(simple_reflect(1, rv({Rat(5), Rat(2)})) == rv({Rat(9), Rat(-2)}));
  CHECK(simple_reflect(0, rv({Rat(2), Rat(-1)})) == rv({Rat(-2), Rat(3)}));
  CHECK_THROWS_AS(simple_reflect(0, rv({Rat(1)})), std::invalid_argument);

  for (const auto& theta : sample3) {
    for (Int i = 0; i < 3; ++i) {
      CHECK(simple_reflect(i, simple_reflect(i, theta)) == theta);
      CHECK(vec_sum(simple_reflect(i, theta)) == vec_sum(theta));
    }
    // braid relations of the Coxeter presentation (indices mod ell)
    for (Int i = 0; i < 3; ++i) {
      const Int j = (i + 1) % 3;
      const RatVec lhs = simple_reflect(i, simple_reflect(j, simple_reflect(i, theta)));
      const RatVec rhs = simple_reflect(j, simple_reflect(i, simple_reflect(j, theta)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("reduction to the fundamental domain") {
  {
    const auto [psi, g] = to_fundamental(one_point(4));
    CHECK(psi == one_point(4));
    CHECK(g.word.empty());
  }
  {
    const auto [psi, g] = to_fundamental(rv({Rat(1), Rat(0)}));
    CHECK(psi == rv({Rat(1), Rat(0)}));
    CHECK(g.word.empty());
  }
  {
    const auto [psi, g] = to_fundamental(rv({Rat(2), Rat(-1)}));
    CHECK(psi == rv({Rat(0), Rat(1)}));
    CHECK(g.word == std::vector<Int>{1});
  }
  CHECK_THROWS_AS(to_fundamental(rv({Rat(1), Rat(1)})), std::invalid_argument);

  const std::vector<RatVec> pts = {
      rv({rat_of(22, 7), rat_of(-19, 7), rat_of(4, 7)}),
      rv({rat_of(-31, 5), rat_of(11, 5), rat_of(5, 1)}),
      rv({rat_of(1, 3), rat_of(1, 3), rat_of(1, 3)}),
      rv({Rat(9), Rat(-3), Rat(-5)}),
  };
  for (const auto& theta : pts) {
    const auto [psi, g] = to_fundamental(theta);
    CHECK(vec_sum(psi) == 1);
    for (const auto& x : psi) CHECK(x >= 0);
    CHECK(apply_word(g.word, theta) == psi);   // the word does map theta to psi
    CHECK(apply_map(g, theta) == psi);         // and the matrix agrees with the word
    CHECK(apply_word_inverse(g.word, psi) == theta);
  }
}

TEST_CASE("orbit point extraction") {
  // every (s, v)-translate of the base point is read back exactly
  const std::vector<Charge> charges = {Charge(IntVec{0, 0, 0}), Charge(IntVec{2, -1, -1}),
                                       Charge(IntVec{-3, 1, 2})};
  for (const auto& s : charges) {
    for (const auto& v : all_permutations(3)) {
      const RatVec pt = apply_finite_perm(v, charge_base_point(s));
      const auto [s2, pi] = charge_perm_of_orbit_point(pt);
      CHECK(s2 == s);
      CHECK(apply_finite_perm(perm_inverse(pi), charge_base_point(s2)) == pt);
    }
  }
}

TEST_CASE("alcove data fixtures") {
  {
    const AlcoveData d = alcove_data(ParamPoint(2, Rat(-1), {rat_of(1, 2)}), 3);
    CHECK(d.sign == +1);
    CHECK(d.s == Charge(IntVec{0, 0}));
    CHECK(d.w == perm_identity(2));
    CHECK(d.psi == rv({rat_of(1, 2), rat_of(1, 2)}));
    CHECK(d.J.empty());
    CHECK(d.scale == 1);
  }
  {
    // theta proportional to (1,0): wall of type {1}
    const AlcoveData d = alcove_data(ParamPoint(2, Rat(-1), {Rat(0)}), 1);
    CHECK(d.psi == rv({Rat(1), Rat(0)}));
    CHECK(d.J == std::set<Int>{1});
  }
  {
    // theta proportional to (0,1): wall of type {0}
    const AlcoveData d = alcove_data(ParamPoint(2, Rat(-1), {Rat(1)}), 1);
    CHECK(d.psi == rv({Rat(0), Rat(1)}));
    CHECK(d.J == std::set<Int>{0});
  }
  {
    // theta = 1 exactly: the fundamental base point
    const AlcoveData d = alcove_data(ParamPoint(3, Rat(-1), {rat_of(1, 3), rat_of(1, 3)}), 2);
    CHECK(d.s == Charge(IntVec{0, 0, 0}));
    CHECK(d.w == perm_identity(3));
    CHECK(d.J.empty());
    CHECK(d.psi == one_point(3));
  }
  {
    // scaling only changes the recorded scale
    const AlcoveData d = alcove_data(ParamPoint(2, Rat(-2), {Rat(1)}), 2);
    CHECK(d.scale == 2);
    CHECK(d.psi == rv({rat_of(1, 2), rat_of(1, 2)}));
  }
  {
    // h > 0 classifies the barred point with sign -
    const AlcoveData d = alcove_data(ParamPoint(2, Rat(1), {Rat(0)}), 1);
    CHECK(d.sign == -1);
    CHECK(d.psi == rv({Rat(1), Rat(0)}));
    CHECK(d.J == std::set<Int>{1});
  }
  {
    // ell = 1 degenerates to a sign
    const AlcoveData d = alcove_data(ParamPoint(1, rat_of(-7, 3), {}), 4);
    CHECK(d.sign == +1);
    CHECK(d.s == Charge(IntVec{0}));
    CHECK(d.psi == rv({Rat(1)}));
    CHECK(d.scale == rat_of(7, 3));
  }
  CHECK_THROWS_AS(alcove_data(ParamPoint(2, Rat(0), {Rat(1)}), 2), std::invalid_argument);

  CHECK(facet_type(ParamPoint(2, Rat(-1), {rat_of(1, 2)}), 3).empty());
  CHECK(facet_type(ParamPoint(2, Rat(-1), {Rat(0)}), 1) == std::set<Int>{1});
}

TEST_CASE("one-letter update between adjacent alcoves") {
  // For theta and sigma_i.theta both alcove-interior, the labelled base
  // points are related by the same reflection.
  const RatVec theta = rv({rat_of(22, 7), rat_of(-19, 7), rat_of(4, 7)});
  for (Int i = 0; i < 3; ++i) {
    const RatVec other = simple_reflect(i, theta);
    const auto base_of = [](const RatVec& t) {
      const auto [psi, g] = to_fundamental(t);
      for (const auto& x : psi) REQUIRE(x > 0);
      return apply_word_inverse(g.word, one_point(3));
    };
    CHECK(base_of(other) == simple_reflect(i, base_of(theta)));
  }
}

TEST_CASE("upper closure mode") {
  // (0,1): canonical reduction stays put, upper closure picks the alcove
  // above the wall theta.alpha_1 = 1.
  const ParamPoint p(2, Rat(-1), {Rat(1)});
  const AlcoveData canon = alcove_data(p, 2, AlcoveMode::Canonical);
  const AlcoveData upper = alcove_data(p, 2, AlcoveMode::UpperClosure);
  CHECK(canon.s == Charge(IntVec{0, 0}));
  CHECK(canon.w == perm_identity(2));
  CHECK(upper.s == Charge(IntVec{1, -1}));
  CHECK(upper.psi == canon.psi);
  CHECK(upper.J == canon.J);
  // the upper label's base point sits on the positive side of the wall
  const RatVec base = apply_finite_perm(perm_inverse(upper.w), charge_base_point(upper.s));
  CHECK(root_pairing(base, 1, 1) > 1);
  CHECK(root_pairing(base, 1, 1) < 2);

  // interior points ignore the mode
  const ParamPoint q(2, Rat(-1), {rat_of(1, 3)});
  const AlcoveData a = alcove_data(q, 2, AlcoveMode::Canonical);
  const AlcoveData b = alcove_data(q, 2, AlcoveMode::UpperClosure);
  CHECK(a.s == b.s);
  CHECK(a.w == b.w);
}

TEST_CASE("alcove json") {
  const AlcoveData d = alcove_data(ParamPoint(2, Rat(-1), {rat_of(1, 2)}), 3);
  CHECK(alcove_json(d) ==
        "{\"sign\":\"+\",\"s\":[0,0],\"w\":[1,2],\"psi\":[\"1/2\",\"1/2\"],\"J\":[],"
        "\"scale\":\"1\",\"mode\":\"canonical\"}");
}
