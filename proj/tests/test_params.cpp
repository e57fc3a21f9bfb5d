#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "chambers/params.hpp"

using namespace chambers;

namespace {

// bar as a substitution on coefficient vectors: h -> -h, H_i -> -H_{ell-i}
WallForm bar_form(const WallForm& f) {
  IntVec c(f.coeffs().size());
  c[0] = -f.coeffs()[0];
  const size_t ell = f.coeffs().size();
  for (size_t i = 1; i < ell; ++i) c[i] = -f.coeffs()[ell - i];
  return WallForm(c);
}

}  // namespace

TEST_CASE("theta coordinates") {
  const ParamPoint p2(2, Rat(-1), {Rat(0)});
  CHECK(p2.theta() == RatVec{Rat(1), Rat(0)});
  const ParamPoint p3(3, Rat(-1), {Rat(0), Rat(0)});
  CHECK(p3.theta() == RatVec{Rat(1), Rat(0), Rat(0)});

  // theta . delta = -h, and the two coordinate systems invert each other
  for (const auto& h : {rat_of(-1), rat_of(3, 7), rat_of(-11, 4)}) {
    for (const auto& x : {rat_of(1, 3), rat_of(-2, 5), rat_of(9, 2)}) {
      const ParamPoint p(3, h, {x, x / 2});
      CHECK(vec_sum(p.theta()) == -h);
      const ParamPoint q = param_of_theta(p.theta());
      CHECK(q.h() == p.h());
      CHECK(q.H() == p.H());
      CHECK(p.H0() + vec_sum(RatVec(p.H().begin(), p.H().end())) == 0);
    }
  }
  CHECK(ParamPoint(2, Rat(-1), {rat_of(1, 3)}).str() == "h=-1 H=1/3");
  CHECK_THROWS_AS(ParamPoint(2, Rat(1), {}), std::invalid_argument);
}

TEST_CASE("wall form normalization and rendering") {
  CHECK(WallForm({2, 4}).coeffs() == IntVec{1, 2});
  CHECK(WallForm({-2, -4}).coeffs() == IntVec{1, 2});
  CHECK(WallForm({0, -3}).coeffs() == IntVec{0, 1});
  CHECK_THROWS_AS(WallForm({0, 0}), std::invalid_argument);
  CHECK(WallForm({0, 1}).str() == "H1");
  CHECK(WallForm({2, 1}).str() == "H1+2h");
  CHECK(WallForm({-2, 1}).str() == "-H1+2h");
  CHECK(WallForm({1, 0}).str() == "h");
  CHECK(WallForm({1, 1, 1}).str() == "H1+H2+h");

  const ParamPoint p(2, Rat(-1), {Rat(2)});
  CHECK(WallForm({2, 1}).evaluate(p) == 0);
  CHECK(WallForm({0, 1}).evaluate(p) == 2);
}

TEST_CASE("git walls") {
  const auto w1 = git_walls(1, 5);
  REQUIRE(w1.size() == 1);
  CHECK(w1.begin()->str() == "h");

  CHECK(git_walls(2, 1).size() == 2);
  const auto w23 = git_walls(2, 3);
  CHECK(w23.size() == 6);
  for (const char* s : {"h", "H1", "H1+h", "-H1+h", "H1+2h", "-H1+2h"}) {
    const bool found = std::any_of(w23.begin(), w23.end(),
                                   [&](const WallForm& f) { return f.str() == s; });
    CHECK(found);
  }
  for (Int n = 1; n <= 6; ++n) CHECK(git_walls(2, n).size() == static_cast<size_t>(2 * n));

  // bar maps the wall set to itself
  for (Int n : {1, 2, 3}) {
    for (Int ell : {2, 3}) {
      const auto walls = git_walls(ell, n);
      for (const auto& f : walls) CHECK(walls.count(bar_form(f)) == 1);
    }
  }
}

TEST_CASE("c wall forms") {
  const auto c12 = c_wall_forms(1, 2);
  REQUIRE(c12.size() == 1);
  CHECK(c12.begin()->str() == "h");

  const auto c21 = c_wall_forms(2, 1);
  REQUIRE(c21.size() == 1);
  CHECK(c21.begin()->str() == "H1");

  const auto cw = c_wall_forms(2, 3);
  for (const auto& f : git_walls(2, 3)) CHECK(cw.count(f) == 1);
}

TEST_CASE("regularity") {
  CHECK(is_git_regular(ParamPoint(2, Rat(-1), {rat_of(1, 3)}), 3));
  CHECK_FALSE(is_git_regular(ParamPoint(2, Rat(0), {rat_of(22, 7)}), 3));
  const ParamPoint on_wall(2, Rat(-1), {Rat(2)});
  CHECK_FALSE(is_git_regular(on_wall, 3));
  const auto through = walls_through(on_wall, 3);
  REQUIRE(through.size() == 1);
  CHECK(through.begin()->str() == "H1+2h");
}

TEST_CASE("bar involution") {
  const ParamPoint p(3, rat_of(-3, 2), {rat_of(1, 3), rat_of(-2, 7)});
  const ParamPoint b = bar_param(p);
  CHECK(b.h() == rat_of(3, 2));
  CHECK(b.H() == RatVec{rat_of(2, 7), rat_of(-1, 3)});
  const ParamPoint bb = bar_param(b);
  CHECK(bb.h() == p.h());
  CHECK(bb.H() == p.H());

  // regularity is preserved on the 6-wall arrangement
  for (const auto& x : {rat_of(1, 3), rat_of(5, 4), rat_of(-7, 2), rat_of(12, 5)}) {
    const ParamPoint q(2, Rat(-1), {x});
    CHECK(is_git_regular(q, 3) == is_git_regular(bar_param(q), 3));
  }
}
