#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace gbfan;
using namespace testing;

TEST_CASE("fourier-motzkin feasibility") {
  // x + y >= 2, x - y >= 0, y >= 1/2
  std::vector<Inequality> sys{{{1, 1}, 2}, {{1, -1}, 0}, {{0, 1}, mpq_class(1, 2)}};
  auto w = fourier_motzkin(sys, 2);
  REQUIRE(w);
  for (const auto& q : sys) CHECK((*w)[0] * q.a[0] + (*w)[1] * q.a[1] >= q.b);
  // x >= 1, -x >= 0
  CHECK_FALSE(fourier_motzkin({{{1}, 1}, {{-1}, 0}}, 1));
  CHECK(kind_of([] { fourier_motzkin({{{1, 2}, 0}}, 3); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("positive witnesses") {
  auto w = cone_math::strictly_positive_witness({{1, -1}}, 2);
  REQUIRE(w);
  CHECK((*w)[0] > (*w)[1]);
  CHECK((*w)[1] > 0);
  CHECK_FALSE(cone_math::strictly_positive_witness({{1, -1}, {-1, 1}}, 2));
  CHECK_FALSE(cone_math::strictly_positive_witness({{-1, 0}}, 2));
  auto far = cone_math::strictly_positive_witness({{1, -9}, {-1, 10}}, 2);
  REQUIRE(far);
  CHECK((*far)[0] - 9 * (*far)[1] > 0);
  CHECK(-(*far)[0] + 10 * (*far)[1] > 0);
  CHECK(cone_math::implied({2, -1}, {{1, -1}}, 2));
  CHECK_FALSE(cone_math::implied({1, -1}, {{2, -1}}, 2));
  CHECK(cone_math::primitive({4, -6, 2}) == IntVector{2, -3, 1});
}

TEST_CASE("cone of a marked basis") {
  auto r = ring("QQ", {"x", "y"});
  auto I = ideal(r, {"x^2 + x*y + y^2", "x^3", "x^2*y", "x*y^2", "y^3"});
  const auto& g = I.reduced_basis(TermOrdering::lex(2));
  auto c = cone_of(g);
  CHECK(c.contains({2, 1}));
  CHECK_FALSE(c.contains({1, 2}));
  CHECK(c.contains({1, 1}));  // boundary
  CHECK(c.inequalities() == std::vector<IntVector>{{1, -1}});
  CHECK(c.to_string() == "[[1, -1]]");
  CHECK(c.contains_perturbed({1, 1}, {1, 0}));
  CHECK_FALSE(c.contains_perturbed({1, 1}, {0, 1}));
}

TEST_CASE("inconsistent markings") {
  auto r = ring("QQ", {"x", "y"});
  auto basis = polys(r, {"x + y"});
  CHECK(kind_of([&] { cone_of(basis, {Term{1, 1}}); }) == ErrorKind::InconsistentMarking);
  // y marked in x^2 + y is consistent; x^2 marked in x + x^2 never is
  CHECK_NOTHROW(cone_of(polys(r, {"x^2 + y"}), {Term{0, 1}}));
  CHECK(kind_of([&] { cone_of(polys(r, {"x^2 + x"}), {Term{1, 0}}); }) == ErrorKind::InconsistentMarking);
  CHECK(kind_of([&] { cone_of(polys(r, {"x - y", "x + y"}), {Term{1, 0}, Term{0, 1}}); }) ==
        ErrorKind::InconsistentMarking);
}

TEST_CASE("linear forms") {
  auto r2 = ring("QQ", {"x", "y"});
  auto f2 = enumerate_fan(ideal(r2, {"x + y"}));
  CHECK(f2.size() == 2);
  CHECK(gfan_number(ideal(r2, {"x + y"})) == 2);
  auto r3 = ring("QQ", {"x", "y", "z"});
  CHECK(gfan_number(ideal(r3, {"x + y + z"})) == 3);
  CHECK(gfan_number(ideal(r3, {"x*y*z + x + 1"})) == 1);
}

TEST_CASE("fan errors") {
  auto r = ring("QQ", {"x", "y"});
  CHECK(kind_of([&] { enumerate_fan(Ideal(r)); }) == ErrorKind::ZeroIdeal);
  CHECK(kind_of([&] { enumerate_fan(ideal(r, {"0"})); }) == ErrorKind::ZeroIdeal);
  auto unit = enumerate_fan(ideal(r, {"x", "x + 1"}));
  CHECK(unit.size() == 1);
  auto line = enumerate_fan(ideal(r, {"x - y^2"}));
  CHECK(line.size() == 2);
  CHECK(kind_of([&] { gbasic_sets(line); }) == ErrorKind::NotZeroDimensional);
  CHECK(kind_of([&] { enumerate_basic_sets(ideal(r, {"x*y"})); }) == ErrorKind::NotZeroDimensional);
  auto r3 = ring("QQ", {"x", "y", "z"});
  CHECK(kind_of([&] { fan_equal(line, enumerate_fan(ideal(r3, {"x"}))); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("symmetric ideal has a basic set that is not G-basic") {
  auto r = ring("QQ", {"x", "y"});
  auto I = ideal(r, {"x^2 + x*y + y^2", "x^3", "x^2*y", "x*y^2", "y^3"});
  auto fan = enumerate_fan(I);
  CHECK(fan.size() == 2);
  auto lts = fan.lt_ideals();
  std::vector<MonomialIdeal> expected{M(r, {"x^2", "x*y^2", "y^3"}), M(r, {"x^3", "x^2*y", "y^2"})};
  std::sort(lts.begin(), lts.end(), [](auto& a, auto& b) { return a.generators() < b.generators(); });
  std::sort(expected.begin(), expected.end(), [](auto& a, auto& b) { return a.generators() < b.generators(); });
  CHECK(lts == expected);

  auto basic = enumerate_basic_sets(I);
  std::vector<Term> sym{Term{0, 0}, Term{0, 1}, Term{0, 2}, Term{1, 0}, Term{2, 0}};
  CHECK(std::find(basic.begin(), basic.end(), sym) != basic.end());
  auto gbasic = gbasic_sets(fan);
  CHECK(gbasic.size() == 2);
  for (auto& s : gbasic) std::sort(s.begin(), s.end());
  CHECK(std::find(gbasic.begin(), gbasic.end(), sym) == gbasic.end());
  CHECK(fan_equal(fan, fan_oracle_zerodim(I)));
  CHECK_FALSE(unique_gb_fast_check(I));
}

TEST_CASE("basic set bound") {
  auto r = ring("QQ", {"x", "y"});
  auto I = ideal(r, {"x^4", "y^4"});
  CHECK(kind_of([&] { enumerate_basic_sets(I, {8}); }) == ErrorKind::BoundExceeded);
  auto sets = enumerate_basic_sets(ideal(r, {"x^2", "y"}));
  CHECK(sets.size() == 1);
  CHECK(enumerate_basic_sets(ideal(r, {"1"})) == std::vector<std::vector<Term>>{{}});
}

TEST_CASE("cubic cycle") {
  auto r = ring("QQ", {"x", "y", "z"});
  auto I = ideal(r, {"x^2 - y", "y^2 - z", "z^2 - x"});
  auto fan = enumerate_fan(I);
  CHECK(fan.size() == 7);
  CHECK(fan_equal(fan, fan_oracle_zerodim(I)));
  for (const auto& c : fan.cones()) CHECK(mark(c.basis).cone == c.cone);
}

TEST_CASE("minimal models") {
  auto r = ring("QQ", {"x", "y"});
  auto I = ideal(r, {"x - y", "y^2 - 1"});
  auto models = minimal_models(P(r, "x*y + x"), I);
  CHECK(same_set(models, polys(r, {"y + 1", "x + 1"})));
  CHECK(kind_of([&] { minimal_models(P(r, "x"), ideal(r, {"x + y"})); }) == ErrorKind::NotZeroDimensional);
}

TEST_CASE("univariate degrees") {
  auto r = ring("QQ", {"x", "y"});
  CHECK(univariate_degrees(ideal(r, {"x^2 + x*y + y^2", "x^3", "x^2*y", "x*y^2", "y^3"})) == std::vector<std::size_t>{3, 3});
  CHECK(univariate_degrees(ideal(r, {"x - y", "y^2 - 2"})) == std::vector<std::size_t>{2, 2});
}

// ---------------------------------------------------------------------------
// properties

TEST_CASE("every cone of a random fan realises its own basis") {
  Rng rng(41);
  for (auto field : {"QQ", "GF(5)"}) {
    auto r = ring(field, {"x", "y"});
    for (int k = 0; k < 30; ++k) {
      auto I = random_zero_dim_ideal(r, 7, rng);
      auto fan = enumerate_fan(I);
      for (const auto& c : fan.cones()) {
        auto w = cone_math::strictly_positive_witness(c.cone.inequalities(), 2);
        REQUIRE(w);
        CHECK(c.cone.contains(*w));
        CHECK(I.reduced_basis(TermOrdering::weight(*w)).leading_term_ideal() == c.lt_ideal);
      }
      CHECK(unique_gb_fast_check(I) == (fan.size() == 1));
    }
  }
}

TEST_CASE("fan agrees with the basic-set oracle on random ideals") {
  Rng rng(43);
  auto r = ring("QQ", {"x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    auto I = random_zero_dim_ideal(r, 6, rng);
    CHECK(fan_equal(enumerate_fan(I), fan_oracle_zerodim(I)));
  }
}
