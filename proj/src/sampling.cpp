#include "gbfan/sampling.hpp"

#include <algorithm>
#include <set>

namespace gbfan {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

FieldElement random_element(const FieldSpec& field, Rng& rng, long range) {
  if (!field.is_rationals()) return FieldElement(field, uniform(rng, 0, static_cast<long>(field.characteristic()) - 1));
  // Mostly integers, sometimes a small fraction.
  if (uniform(rng, 0, 4) == 0) return FieldElement::rational(uniform(rng, -range, range), uniform(rng, 1, 3));
  return FieldElement(field, uniform(rng, -range, range));
}

Point random_point(const RingPtr& ring, Rng& rng, long range) {
  Point p;
  for (std::size_t i = 0; i < ring->nvars(); ++i) p.push_back(random_element(ring->field(), rng, range));
  return p;
}

PointSet random_points(const RingPtr& ring, std::size_t count, Rng& rng, long range) {
  std::set<Point> seen;
  std::vector<Point> pts;
  for (std::size_t attempts = 0; pts.size() < count && attempts < 50 * count + 50; ++attempts) {
    auto p = random_point(ring, rng, range);
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  return PointSet(ring, std::move(pts));
}

MonomialIdeal random_monomial_ideal(std::size_t nvars, unsigned max_degree, Rng& rng) {
  std::vector<Term> gens;
  std::vector<Term::Exponent> pure(nvars);
  for (std::size_t i = 0; i < nvars; ++i) {
    pure[i] = static_cast<Term::Exponent>(uniform(rng, 1, max_degree));
    gens.push_back(Term::variable(nvars, i, pure[i]));
  }
  long extra = nvars > 1 ? uniform(rng, 0, 3) : 0;
  for (long k = 0; k < extra; ++k) {
    Term t(nvars);
    for (std::size_t i = 0; i < nvars; ++i) t[i] = static_cast<Term::Exponent>(uniform(rng, 0, pure[i] - 1));
    if (!t.is_one()) gens.push_back(t);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

Ideal random_zero_dim_ideal(const RingPtr& ring, std::size_t max_multiplicity, Rng& rng) {
  std::size_t n = ring->nvars();
  const auto& field = ring->field();
  auto ord = TermOrdering::degrevlex(n);
  while (true) {
    long kind = uniform(rng, 0, 3);
    Ideal candidate(ring);
    if (kind == 0) {
      auto pts = random_points(ring, static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_multiplicity))), rng);
      candidate = ideal_of_points(pts).ideal();
    } else {
      // t + (random combination of smaller standard terms) for each generator t.
      unsigned top = std::max<unsigned>(1, std::min<unsigned>(4, static_cast<unsigned>(max_multiplicity)));
      auto m = random_monomial_ideal(n, top, rng);
      auto std_terms = m.order_ideal();
      if (std_terms.size() > max_multiplicity + 4) continue;
      std::vector<Polynomial> gens;
      for (const auto& t : m.generators()) {
        Polynomial g = Polynomial::monomial(ring, t);
        for (const auto& o : std_terms) {
          if (!ord.less(o, t) || uniform(rng, 0, 2) != 0) continue;
          auto c = random_element(field, rng, 2);
          if (!c.is_zero()) g.add_term(o, c);
        }
        gens.push_back(std::move(g));
      }
      candidate = Ideal(ring, std::move(gens));
      if (kind == 3) {
        auto pts = random_points(ring, static_cast<std::size_t>(uniform(rng, 1, 2)), rng);
        candidate = ideal_intersection(candidate, ideal_of_points(pts).ideal());
      }
    }
    if (!is_zero_dimensional(candidate)) continue;
    auto mult = multiplicity(candidate);
    if (mult >= 1 && mult <= max_multiplicity) return candidate;
  }
}

LinearShift random_shift(const RingPtr& ring, Rng& rng) {
  std::vector<FieldElement> scales, offsets;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    FieldElement a = random_element(ring->field(), rng);
    while (a.is_zero()) a = random_element(ring->field(), rng);
    scales.push_back(a);
    offsets.push_back(random_element(ring->field(), rng));
  }
  return LinearShift(std::move(scales), std::move(offsets));
}

TermOrdering random_ordering(std::size_t nvars, Rng& rng) {
  switch (uniform(rng, 0, 3)) {
    case 0:
      return TermOrdering::lex(nvars);
    case 1:
      return TermOrdering::degrevlex(nvars);
    default: {
      TermOrdering::Row w(nvars);
      for (auto& x : w) x = uniform(rng, 1, 9);
      return TermOrdering::weight(w);
    }
  }
}

}  // namespace gbfan
