#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace gbfan {

/// a . w >= b over the rationals.
struct Inequality {
  std::vector<mpq_class> a;
  mpq_class b;
};

/// Exact Fourier-Motzkin elimination.  Returns a rational point satisfying
/// every inequality, or nullopt when the system is infeasible.
std::optional<std::vector<mpq_class>> fourier_motzkin(std::vector<Inequality> system, std::size_t dim);

using IntVector = std::vector<std::int64_t>;

/// Inequality helpers for homogeneous cones inside the closed positive orthant.
namespace cone_math {

/// A strictly positive w with v . w > 0 for every v, scaled to a primitive
/// integer vector; nullopt if none exists.
std::optional<IntVector> strictly_positive_witness(const std::vector<IntVector>& strict, std::size_t dim);

/// True iff `candidate . w >= 0` holds on {w >= 0, v . w >= 0 for v in others}.
bool implied(const IntVector& candidate, const std::vector<IntVector>& others, std::size_t dim);

/// A positive integer point on {facet . w = 0} with v . w > 0 for all others,
/// or nullopt when the facet has no such relative-interior point.
std::optional<IntVector> facet_interior_point(const IntVector& facet, const std::vector<IntVector>& others, std::size_t dim);

/// Divides by the gcd of the entries.
IntVector primitive(IntVector v);

}  // namespace cone_math

}  // namespace gbfan
