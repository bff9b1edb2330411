// One line per criterion; every comparison is exact.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>

#include "support.hpp"

using namespace gbfan;
using namespace testing;

namespace {

struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void operator()(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

bool fan_has_basis(const GroebnerFan& fan, const std::vector<Polynomial>& basis) {
  for (const auto& c : fan.cones())
    if (same_set(c.basis.elements(), basis)) return true;
  return false;
}

std::set<std::vector<Term>> lt_set(const GroebnerFan& fan) {
  std::set<std::vector<Term>> out;
  for (const auto& m : fan.lt_ideals()) out.insert(m.generators());
  return out;
}

std::vector<Term> lex_sorted(std::vector<Term> ts) {
  auto lex = TermOrdering::lex(ts.empty() ? 0 : ts[0].size());
  std::sort(ts.begin(), ts.end(), [&](const Term& a, const Term& b) { return lex.less(a, b); });
  return ts;
}

std::set<Term> as_set(const std::vector<Term>& ts) { return {ts.begin(), ts.end()}; }

Ideal intersect_all(const RingPtr& r, const std::vector<Ideal>& parts) {
  Ideal acc(r, {P(r, "1")});
  for (const auto& p : parts) acc = ideal_intersection(acc, p);
  return acc;
}

// -------------------------------------------------------------------------

void lac_operon(Check& check) {
  auto r = ring("GF(2)", {"x", "y", "z"});
  auto X = parse_points("1,0,0\n0,1,0\n1,0,1\n", r->field(), r->names());
  auto I = ideal_of_points(X).ideal();
  auto fan = enumerate_fan(I);
  check(fan.size() == 2, "lac fan has 2 cones");
  check(fan_has_basis(fan, polys(r, {"x^2 + x", "z^2 + z", "y + x + 1", "x*z + z"})), "lac basis with x first");
  check(fan_has_basis(fan, polys(r, {"y^2 + y", "z^2 + z", "x + y + 1", "y*z"})), "lac basis with y first");
  check(same_set(minimal_models(P(r, "y*z + y"), I), polys(r, {"x + 1", "y"})), "lac minimal models");
}

void symmetric_and_linear(Check& check) {
  auto r = ring("QQ", {"x", "y"});
  auto I = ideal(r, {"x^2 + x*y + y^2", "x^3", "x^2*y", "x*y^2", "y^3"});
  auto fan = enumerate_fan(I);
  check(gfan_number(I) == 2, "symmetric ideal GFNum 2");
  std::set<std::vector<Term>> want{M(r, {"x^2", "x*y^2", "y^3"}).generators(), M(r, {"x^3", "x^2*y", "y^2"}).generators()};
  check(lt_set(fan) == want, "symmetric ideal LT ideals");
  check(gfan_number(ideal(r, {"x + y"})) == 2, "<x+y> GFNum 2");
  auto r3 = ring("QQ", {"x", "y", "z"});
  check(gfan_number(ideal(r3, {"x + y + z"})) == 3, "<x+y+z> GFNum 3");
  auto q = r->field();
  auto shifted = shift_ideal(I, LinearShift::translation({FieldElement(q, 1), FieldElement(q, -2)}));
  check(ideal_equal(shifted, ideal(r, {"(x+1)^2 + (x+1)*(y-2) + (y-2)^2", "(x+1)^3", "(x+1)^2*(y-2)", "(x+1)*(y-2)^2", "(y-2)^3"})),
        "shift substitutes x+1, y-2");
  check(lt_set(enumerate_fan(shifted)) == want, "shifted ideal LT ideals");
}

void nonradical_grid(Check& check) {
  auto r = ring("QQ", {"x", "y"});
  auto J = ideal(r, {"x*(x^2+1)^2*(x-1)", "(y^3-1)*(y+2)"});
  auto I1 = intersect_all(r, {ideal(r, {"x - 1", "y^2 + y + 1"}), ideal(r, {"y + 2", "x"}), ideal(r, {"y + 2", "x^4 + 2*x^2 + 1"})});
  auto I2 = ideal_colon(J, I1);
  auto I2_direct = intersect_all(r, {ideal(r, {"x", "y^2 + y + 1"}), ideal(r, {"y - 1", "x - 1"}), ideal(r, {"y - 1", "x"}),
                                     ideal(r, {"y + 2", "x - 1"}), ideal(r, {"y - 1", "x^4 + 2*x^2 + 1"}),
                                     ideal(r, {"y^2 + y + 1", "x^4 + 2*x^2 + 1"})});
  check(ideal_equal(I2, I2_direct), "J : I1 is the complementary intersection");
  check(multiplicity(J) == 24 && multiplicity(I1) == 7 && multiplicity(I2) == 17, "multiplicities 24, 7, 17");

  auto b1 = polys(r, {"x*y + 2*x - y - 2", "y^3 + 3*y^2 + 3*y + 2", "x^5 + 2*x^3 + (4/3)*y^2 + x + (4/3)*y - 8/3"});
  auto b2 = polys(r, {"y^4 + 2*y^3 - y - 2", "x*y^3 - y^3 - x + 1", "x^5*y - x^5 + 2*x^3*y - 2*x^3 + (-4/3)*y^3 + x*y - x + 4/3",
                      "x^6 - x^5 + 2*x^4 - 2*x^3 + x^2 - x"});
  check(same_set(I1.reduced_basis().elements(), b1), "I1 reduced basis");
  check(same_set(I2.reduced_basis().elements(), b2), "I2 reduced basis");
  check(term_strings(quotient_basis(I1, TermOrdering::degrevlex(2)), *r) ==
            std::vector<std::string>{"1", "y", "x", "y^2", "x^2", "x^3", "x^4"},
        "sorted quotient basis of I1");
  check(term_strings(quotient_basis(I2, TermOrdering::degrevlex(2)), *r) ==
            std::vector<std::string>{"1", "y", "x", "y^2", "x*y", "x^2", "y^3", "x*y^2", "x^2*y", "x^3", "x^2*y^2", "x^3*y",
                                     "x^4", "x^3*y^2", "x^4*y", "x^5", "x^4*y^2"},
        "sorted quotient basis of I2");

  auto f1 = enumerate_fan(I1), f2 = enumerate_fan(I2);
  check(f1.size() == 2 && f2.size() == 2, "GFNum(I1) = GFNum(I2) = 2");
  check(fan_equal(f1, f2), "fan_equal(I1, I2)");
  check(fan_has_basis(f1, b1) && fan_has_basis(f2, b2), "first printed fan bases");
  check(fan_has_basis(f1, polys(r, {"x*y - y + 2*x - 2", "y^2 + (3/4)*x^5 + (3/2)*x^3 + y + (3/4)*x - 2",
                                    "x^6 - x^5 + 2*x^4 - 2*x^3 + x^2 - x"})),
        "second printed basis of I1");
  check(fan_has_basis(f2, polys(r, {"y^3 + (-3/4)*x^5*y + (-3/2)*x^3*y + (3/4)*x^5 + (-3/4)*x*y + (3/2)*x^3 + (3/4)*x - 1",
                                    "x^5*y^2 + 2*x^3*y^2 + x^5*y + x*y^2 + 2*x^3*y - 2*x^5 + x*y - 4*x^3 - 2*x",
                                    "x^6 - x^5 + 2*x^4 - 2*x^3 + x^2 - x"})),
        "second printed basis of I2");

  auto grid = GridIdeal::opaque(r, J.generators());
  auto comps = grid_primary_components(grid, {polys(r, {"x", "x^4 + 2*x^2 + 1", "x - 1"}), polys(r, {"y + 2", "y - 1", "y^2 + y + 1"})});
  check(comps.size() == 9, "nine primary components");
  check(ideal_equal(intersect_all(r, comps), J), "components intersect to J");
  check(complementary_pair(grid, I1).certificate.ok(), "complementarity certificate");
}

void radical_grid(Check& check) {
  auto r = ring("QQ", {"x", "y"});
  auto I = ideal(r, {"(x^2+1)*(x-1)*(x-2)", "(y^2-2)*(y+2)"});
  auto J1 = ideal_sum(I, ideal(r, {"x - 1 + y^2 - 2"}));
  auto J2 = ideal_colon(I, J1);
  check(multiplicity(I) == 12 && multiplicity(J1) == 2 && multiplicity(J2) == 10, "multiplicities 12, 2, 10");
  check(same_set(J1.reduced_basis().elements(), polys(r, {"x - 1", "y^2 - 2"})), "J1 reduced basis");
  auto b2 = polys(r, {"y^3 + 2*y^2 - 2*y - 4", "x^3*y + 2*x^3 - 2*x^2*y - 4*x^2 + x*y + 2*x - 2*y - 4", "x^4 - 3*x^3 + 3*x^2 - 3*x + 2"});
  check(same_set(J2.reduced_basis().elements(), b2), "J2 reduced basis");
  auto f1 = enumerate_fan(J1), f2 = enumerate_fan(J2);
  check(f1.size() == 1 && f2.size() == 1, "both fans have one cone");
  check(fan_has_basis(f2, b2), "fan basis of J2");
  auto qb1 = quotient_basis(J1, TermOrdering::degrevlex(2));
  auto qb2 = quotient_basis(J2, TermOrdering::degrevlex(2));
  check(term_strings(lex_sorted(qb1), *r) == std::vector<std::string>{"1", "y"}, "quotient basis of J1");
  check(term_strings(lex_sorted(qb2), *r) ==
            std::vector<std::string>{"1", "y", "y^2", "x", "x*y", "x*y^2", "x^2", "x^2*y", "x^2*y^2", "x^3"},
        "quotient basis of J2");
}

void field_equations(Check& check) {
  auto r = ring("GF(3)", {"x", "y", "z"});
  auto grid = field_equation_ideal(r);
  auto I = grid.ideal();
  auto J1 = ideal_sum(I, ideal(r, {"x^2 - y - z"}));
  auto J2 = ideal_colon(I, J1);
  check(multiplicity(I) == 27 && multiplicity(J1) == 9 && multiplicity(J2) == 18, "multiplicities 27, 9, 18");
  check(ideal_equal(complementary_pair(grid, J1).second, J2), "J2 = I : J1");
  check(same_set(J1.reduced_basis().elements(), polys(r, {"y^2 - y*z + z^2 - y - z", "x*y + x*z - x", "x^2 - y - z", "z^3 - z"})),
        "J1 reduced basis");
  check(same_set(J2.reduced_basis().elements(), polys(r, {"z^3 - z", "y^3 - y", "x*y^2 - x*y*z + x*z^2 + x*y + x*z",
                                                          "x^2*y + x^2*z + x^2 + y^2 - y*z + z^2 - 1", "x^3 - x"})),
        "J2 reduced basis");
  check(term_strings(lex_sorted(quotient_basis(J1, TermOrdering::degrevlex(3))), *r) ==
            std::vector<std::string>{"1", "z", "z^2", "y", "y*z", "y*z^2", "x", "x*z", "x*z^2"},
        "quotient basis of J1");
  check(term_strings(lex_sorted(quotient_basis(J2, TermOrdering::degrevlex(3))), *r) ==
            std::vector<std::string>{"1", "z", "z^2", "y", "y*z", "y*z^2", "y^2", "y^2*z", "y^2*z^2", "x", "x*z", "x*z^2",
                                     "x*y", "x*y*z", "x*y*z^2", "x^2", "x^2*z", "x^2*z^2"},
        "quotient basis of J2");

  auto f1 = enumerate_fan(J1), f2 = enumerate_fan(J2);
  check(f1.size() == 4 && f2.size() == 4, "both fans have four cones");
  check(fan_equal(f1, f2), "fan_equal(J1, J2)");
  std::vector<std::vector<std::string>> gf1{
      {"x^2 - y - z", "z^3 - z", "x*y + x*z - x", "y^2 - y*z + z^2 - y - z"},
      {"x^2 - z - y", "y^3 - y", "x*z + x*y - x", "z^2 - y*z + y^2 - z - y"},
      {"y - x^2 + z", "x^3 - x", "z^3 - z"},
      {"z + y - x^2", "x^3 - x", "y^3 - y"}};
  std::vector<std::vector<std::string>> gf2{
      {"z^3 - z", "y^3 - y", "x*y^2 - x*y*z + x*z^2 + x*y + x*z", "x^2*y + x^2*z + x^2 + y^2 - y*z + z^2 - 1", "x^3 - x"},
      {"y^3 - y", "x^3 - x", "x^2*z + x^2*y + z^2 + x^2 - y*z + y^2 - 1", "x*z^2 - x*y*z + x*y^2 + x*z + x*y", "z^3 - z"},
      {"x^3 - x", "z^3 - z", "y^2 + x^2*y - y*z + x^2*z + z^2 + x^2 - 1"},
      {"x^3 - x", "z^2 - y*z + y^2 + x^2*z + x^2*y + x^2 - 1", "y^3 - y"}};
  for (std::size_t k = 0; k < 4; ++k) {
    check(fan_has_basis(f1, polys(r, gf1[k])), "printed basis " + std::to_string(k + 1) + " of J1");
    check(fan_has_basis(f2, polys(r, gf2[k])), "printed basis " + std::to_string(k + 1) + " of J2");
  }
}

void grid_minus_grid(Check& check) {
  auto r = ring("QQ", {"x", "y"});
  auto I = ideal(r, {"x*(x-1)*(x-2)*(x-3)*(x-4)", "y*(y-1)*(y-2)*(y-3)"});
  auto white = parse_points("0,1\n0,3\n1,1\n1,3\n3,1\n3,3\n", r->field(), r->names());
  auto J1 = ideal_of_points(white).ideal();
  auto J2 = ideal_colon(I, J1);
  auto fan = enumerate_fan(J2);
  check(fan.size() == 1, "fan of the black dots has one cone");
  check(fan_has_basis(fan, polys(r, {"x^2*y^2 - 2*x^2*y - 6*x*y^2 + 12*x*y + 8*y^2 - 16*y", "y^4 - 6*y^3 + 11*y^2 - 6*y",
                                     "x^5 - 10*x^4 + 35*x^3 - 50*x^2 + 24*x"})),
        "basis of the black dots");
  auto X = grid_points(GridIdeal::factored(r, {{FieldElement(r->field(), 0), FieldElement(r->field(), 1), FieldElement(r->field(), 2),
                                                FieldElement(r->field(), 3), FieldElement(r->field(), 4)},
                                               {FieldElement(r->field(), 0), FieldElement(r->field(), 1), FieldElement(r->field(), 2),
                                                FieldElement(r->field(), 3)}}));
  auto [iy, iblack] = subset_complement_ideals(X, white);
  check(ideal_equal(iblack, J2), "I(X) : I(white) is I(black)");
  check(multiplicity(J2) == 14, "14 black dots");
}

void distractions(Check& check, Rng& rng) {
  auto r = ring("QQ", {"x", "y"});
  auto q = r->field();
  auto e = [&](long v) { return FieldElement(q, v); };
  DistractionSpec spec{{{e(3), e(2), e(5)}, {e(2), e(-1), e(3), e(12)}}};
  auto d1 = distraction_term(r, Term{3, 1}, spec), d2 = distraction_term(r, Term{2, 4}, spec);
  check(d1 == P(r, "(x-3)*(x-2)*(x-5)*(y-2)"), "D(x^3*y)");
  check(d2 == P(r, "(x-3)*(x-2)*(y-2)*(y+1)*(y-3)*(y-12)"), "D(x^2*y^4)");
  auto D = distraction_ideal(r, M(r, {"x^3*y", "x^2*y^4"}), spec);
  check(same_set(D.reduced_basis().elements(), {d1.monic(TermOrdering::degrevlex(2)), d2.monic(TermOrdering::degrevlex(2))}) &&
            same_set(D.reduced_basis(TermOrdering::lex(2)).elements(), {d1, d2}),
        "distraction is its own reduced basis");
  check(gfan_number(D) == 1, "distraction has one reduced basis");

  auto r5 = ring("GF(5)", {"x", "y"});
  auto f5 = r5->field();
  DistractionSpec spec5{{{FieldElement(f5, 1), FieldElement(f5, 3), FieldElement(f5, 0)},
                         {FieldElement(f5, 0), FieldElement(f5, 1), FieldElement(f5, 2), FieldElement(f5, 3)}}};
  check(distraction_term(r5, Term{3, 1}, spec5) == P(r5, "(x-1)*(x-3)*x*y"), "D(x^3*y) over GF(5)");
  check(distraction_term(r5, Term{2, 4}, spec5) == P(r5, "(x-1)*(x-3)*y*(y-1)*(y-2)*(y-3)"), "D(x^2*y^4) over GF(5)");

  DistractionSpec spec7{{{e(0), FieldElement::rational(1, 5), e(2), e(-1)}, {e(0), e(1), e(2)}}};
  auto J = M(r, {"x^4", "y^3", "x^2*y", "x*y^2"});
  auto DJ = distraction_ideal(r, J, spec7);
  auto seven = parse_points("0,0\n0,1\n0,2\n1/5,0\n1/5,1\n2,0\n-1,0\n", q, r->names());
  check(ideal_equal(DJ, ideal_of_points(seven).ideal()), "seven points are a distraction");
  check(ideal_equal(DJ, ideal(r, {"x*(x-1/5)*(x-2)*(x+1)", "y*(y-1)*(y-2)", "x*(x-1/5)*y", "x*y*(y-1)"})), "distraction generators");
  check(gfan_number(DJ) == 1, "seven points have one reduced basis");

  auto nat = natural_distraction(r, M(r, {"x^5", "x^4*y", "x*y^2", "y^4"}));
  check(same_set(nat.generators(), polys(r, {"x*(x-1)*(x-2)*(x-3)*(x-4)", "x*(x-1)*(x-2)*(x-3)*y", "x*y*(y-1)", "y*(y-1)*(y-2)*(y-3)"})),
        "natural distraction generators");
  check(ideal_equal(nat, ideal_of_points(staircase(M(r, {"x^5", "x^4*y", "x*y^2", "y^4"}), r)).ideal()), "natural distraction is the staircase ideal");

  int checked = 0;
  for (int k = 0; k < 50; ++k) {
    std::size_t n = 1 + rng() % 3;
    auto rn = ring("QQ", default_variable_names(n));
    auto m = random_monomial_ideal(n, 4, rng);
    bool ok = ideal_equal(natural_distraction(rn, m), ideal_of_points(staircase(m, rn)).ideal());
    check(ok, "staircase equality on " + m.to_string(rn->names()));
    ++checked;
  }
  check(checked == 50, "50 random staircase checks");
}

// Random zero-dimensional corpus shared by the property suites.
struct Sample {
  Ideal ideal;
  GroebnerFan fan;
};

std::vector<Sample> corpus(Rng& rng, std::size_t per_field, std::size_t max_mult) {
  std::vector<Sample> out;
  for (auto field : {"QQ", "GF(5)"}) {
    for (std::size_t k = 0; k < per_field; ++k) {
      std::size_t n = 2 + rng() % 2;
      auto r = ring(field, default_variable_names(n));
      auto I = random_zero_dim_ideal(r, max_mult, rng);
      out.push_back({I, enumerate_fan(I)});
    }
  }
  return out;
}

void properties(Check& check, Rng& rng) {
  auto samples = corpus(rng, 75, 10);

  // fan against the basic-set oracle, and the fast uniqueness test
  std::size_t agree = 0, fast = 0;
  for (const auto& s : samples) {
    if (multiplicity(s.ideal) > 10) continue;
    agree += fan_equal(s.fan, fan_oracle_zerodim(s.ideal));
    fast += unique_gb_fast_check(s.ideal) == (s.fan.size() == 1);
  }
  check.notes.push_back("fan vs oracle: " + std::to_string(agree) + "/" + std::to_string(samples.size()));
  check(samples.size() >= 100 && agree == samples.size(), "fan equals oracle on " + std::to_string(agree) + "/" + std::to_string(samples.size()));
  check(fast == samples.size(), "fast check matches GFNum 1 on " + std::to_string(fast) + "/" + std::to_string(samples.size()));

  // one basic set when the fan has one cone
  std::size_t unique_seen = 0, unique_ok = 0;
  for (const auto& s : samples) {
    if (s.fan.size() != 1 || multiplicity(s.ideal) > 8) continue;
    ++unique_seen;
    unique_ok += enumerate_basic_sets(s.ideal).size() == 1;
  }
  for (int k = 0; k < 30; ++k) {  // distractions always have one basis
    std::size_t n = 2 + rng() % 2;
    auto r = ring("QQ", default_variable_names(n));
    auto m = random_monomial_ideal(n, 3, rng);
    if (m.order_ideal().size() > 8) continue;
    auto I = shift_ideal(natural_distraction(r, m), random_shift(r, rng));
    if (gfan_number(I) != 1) {
      check(false, "shifted distraction with more than one basis");
      continue;
    }
    ++unique_seen;
    unique_ok += enumerate_basic_sets(I).size() == 1;
  }
  check.notes.push_back("single basic set: " + std::to_string(unique_ok) + "/" + std::to_string(unique_seen));
  check(unique_seen >= 20 && unique_ok == unique_seen, "one basic set on " + std::to_string(unique_ok) + "/" + std::to_string(unique_seen));

  // linear shifts keep the set of leading term ideals
  std::size_t shifts = 0, shift_ok = 0;
  for (std::size_t k = 0; k < samples.size(); k += 3) {
    const auto& s = samples[k];
    auto base = lt_set(s.fan);
    for (int j = 0; j < 5; ++j) {
      ++shifts;
      shift_ok += lt_set(enumerate_fan(shift_ideal(s.ideal, random_shift(s.ideal.ring(), rng)))) == base;
    }
  }
  check.notes.push_back("shifts: " + std::to_string(shift_ok) + "/" + std::to_string(shifts));
  check(shift_ok == shifts && shifts >= 250, "shift invariance on " + std::to_string(shift_ok) + "/" + std::to_string(shifts));

  // complementary pairs: equal fans and the socle bijection
  std::size_t pairs = 0, pair_ok = 0;
  auto socle_bijection = [](const GridIdeal& grid, const Ideal& i1, const Ideal& i2, const GroebnerFan& fan) {
    auto house = grid.ideal().reduced_basis().leading_term_ideal().order_ideal();
    auto soc = socle_term(grid);
    for (const auto& c : fan.cones()) {
      const auto& ord = c.basis.ordering();
      auto o1 = as_set(quotient_basis(i1, ord));
      std::set<Term> image;
      for (const auto& t : house)
        if (!o1.count(t)) image.insert(t.quotient_of(soc));
      if (image != as_set(quotient_basis(i2, ord))) return false;
    }
    return true;
  };
  for (int k = 0; k < 45; ++k) {
    auto field = k % 2 ? "GF(5)" : "QQ";
    auto r = ring(field, {"x", "y"});
    std::vector<std::vector<FieldElement>> roots(2);
    for (auto& rs : roots) {
      std::size_t d = 2 + rng() % 3;
      while (rs.size() < d) {
        auto c = random_element(r->field(), rng, 4);
        if (std::find(rs.begin(), rs.end(), c) == rs.end()) rs.push_back(c);
      }
    }
    auto grid = GridIdeal::factored(r, roots);
    auto X = grid_points(grid);
    std::vector<Point> ys;
    for (const auto& p : X.points())
      if (rng() % 3 == 0) ys.push_back(p);
    if (ys.empty() || ys.size() == X.size()) ys = {X.points()[rng() % X.size()]};
    PointSet Y(r, ys);
    auto [i1, i2] = subset_complement_ideals(X, Y);
    auto pair = complementary_pair(grid, i1);
    auto f1 = enumerate_fan(i1), f2 = enumerate_fan(i2);
    ++pairs;
    pair_ok += pair.certificate.ok() && ideal_equal(pair.second, i2) && fan_equal(f1, f2) && socle_bijection(grid, i1, i2, f1);
  }
  {
    // non-radical grid, random unions of primary components
    auto r = ring("QQ", {"x", "y"});
    auto grid = GridIdeal::opaque(r, polys(r, {"x*(x^2+1)^2*(x-1)", "(y^3-1)*(y+2)"}));
    auto comps = grid_primary_components(grid, {polys(r, {"x", "x^4 + 2*x^2 + 1", "x - 1"}), polys(r, {"y + 2", "y - 1", "y^2 + y + 1"})});
    for (int k = 0; k < 8; ++k) {
      std::vector<Ideal> pick;
      for (const auto& c : comps)
        if (rng() % 3 == 0) pick.push_back(c);
      if (pick.empty() || pick.size() == comps.size()) pick = {comps[rng() % comps.size()]};
      auto i1 = intersect_all(r, pick);
      auto pair = complementary_pair(grid, i1);
      auto f1 = enumerate_fan(i1), f2 = enumerate_fan(pair.second);
      ++pairs;
      pair_ok += pair.certificate.ok() && fan_equal(f1, f2) && socle_bijection(grid, i1, pair.second, f1);
    }
  }
  check.notes.push_back("complementary pairs: " + std::to_string(pair_ok) + "/" + std::to_string(pairs));
  check(pairs >= 50 && pair_ok == pairs, "complementary pairs on " + std::to_string(pair_ok) + "/" + std::to_string(pairs));

  // monomial identities under distraction
  std::size_t mono = 0, mono_ok = 0;
  for (int k = 0; k < 50; ++k) {
    std::size_t n = 2 + rng() % 2;
    auto r = ring("QQ", default_variable_names(n));
    auto m1 = random_monomial_ideal(n, 4, rng), m2 = random_monomial_ideal(n, 4, rng);
    DistractionSpec spec;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<FieldElement> cs;
      while (cs.size() < 4) {
        auto c = FieldElement::rational(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 3));
        if (std::find(cs.begin(), cs.end(), c) == cs.end()) cs.push_back(c);
      }
      spec.pi.push_back(cs);
    }
    auto meet = intersect(m1, m2);
    bool a = ideal_equal(distraction_ideal(r, meet, spec), ideal_intersection(distraction_ideal(r, m1, spec), distraction_ideal(r, m2, spec)));
    auto o1 = as_set(m1.order_ideal()), o2 = as_set(m2.order_ideal());
    std::set<Term> both, either = o1;
    for (const auto& t : o1)
      if (o2.count(t)) both.insert(t);
    either.insert(o2.begin(), o2.end());
    bool b = as_set((m1 + m2).order_ideal()) == both;
    bool c = as_set(meet.order_ideal()) == either;
    auto rows = [&](const MonomialIdeal& m) {
      auto stair = staircase(m, r);
      return std::set<Point>(stair.points().begin(), stair.points().end());
    };
    auto s1 = rows(meet), s2 = rows(m1);
    s2.merge(rows(m2));
    ++mono;
    mono_ok += a && b && c && s1 == s2;
  }
  check.notes.push_back("monomial pairs: " + std::to_string(mono_ok) + "/" + std::to_string(mono));
  check(mono == 50 && mono_ok == mono, "monomial identities on " + std::to_string(mono_ok) + "/" + std::to_string(mono));
}

}  // namespace

int main() {
  Rng rng(20240917);
  std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"lac operon fan, bases and models", lac_operon},
      {"symmetric ideal, linear forms and shift", symmetric_and_linear},
      {"non-radical grid complementary pair", nonradical_grid},
      {"radical grid complementary pair", radical_grid},
      {"field equations over GF(3)", field_equations},
      {"grid minus a subgrid", grid_minus_grid},
      {"distractions and staircases", [&](Check& c) { distractions(c, rng); }},
      {"random property suites", [&](Check& c) { properties(c, rng); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = check.failures.empty();
    failed += !ok;
    std::printf("criterion %zu %s: %s (%.1fs)\n", k + 1, criteria[k].first.c_str(), ok ? "PASS" : "FAIL", secs);
    for (const auto& n : check.notes) std::printf("    %s\n", n.c_str());
    for (const auto& f : check.failures) std::printf("    failed: %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
