#pragma once

#include <random>
#include <vector>

#include "gbfan/points.hpp"

namespace gbfan {

// Random inputs for property checks.  Everything is driven by the caller's
// engine so runs are reproducible from a seed.
using Rng = std::mt19937_64;

FieldElement random_element(const FieldSpec& field, Rng& rng, long range = 3);
Point random_point(const RingPtr& ring, Rng& rng, long range = 3);
/// `count` distinct points (fewer if the field is too small).
PointSet random_points(const RingPtr& ring, std::size_t count, Rng& rng, long range = 3);

/// Zero-dimensional: a pure power of every variable plus a few mixed terms.
MonomialIdeal random_monomial_ideal(std::size_t nvars, unsigned max_degree, Rng& rng);

/// Zero-dimensional ideal with 1 <= multiplicity <= max_multiplicity; mixes
/// ideals of points, perturbed monomial ideals and products.
Ideal random_zero_dim_ideal(const RingPtr& ring, std::size_t max_multiplicity, Rng& rng);

/// An affine substitution with nonzero scales.
LinearShift random_shift(const RingPtr& ring, Rng& rng);

/// A random term ordering: lex, degrevlex, or a random positive weight.
TermOrdering random_ordering(std::size_t nvars, Rng& rng);

}  // namespace gbfan
