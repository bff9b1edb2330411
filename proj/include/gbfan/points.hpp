#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbfan/groebner.hpp"
#include "gbfan/monomial_ideal.hpp"

namespace gbfan {

using Point = std::vector<FieldElement>;

/// Pairwise distinct points of K^n, K the ring's field.
class PointSet {
 public:
  PointSet(RingPtr ring, std::vector<Point> points);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Point>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const Point& p) const;

  /// One row per point, comma separated, in the stored order.
  std::string to_csv() const;

 private:
  RingPtr ring_;
  std::vector<Point> points_;
};

/// Points file: `# field: ...` and `# vars: x,y` headers are optional.
/// Explicit arguments win over headers.
PointSet parse_points(std::string_view text, std::optional<FieldSpec> field = std::nullopt,
                      std::optional<std::vector<std::string>> vars = std::nullopt);

/// x, y, z for up to three variables, otherwise x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

struct PointsIdeal {
  ReducedGB basis;
  std::vector<Term> quotient_basis;  // increasing in the ordering
  Ideal ideal() const { return Ideal(basis.ring(), basis.elements()); }
};

/// Buchberger-Moeller: walk terms upward in `ord`, keep those whose
/// evaluation vectors stay independent.
PointsIdeal ideal_of_points(const PointSet& points, const TermOrdering& ord);
PointsIdeal ideal_of_points(const PointSet& points);

// ---------------------------------------------------------------------------
// Grids

/// <g_1(x_1), ..., g_n(x_n)>, either with explicit roots per variable or with
/// opaque univariate polynomials.
class GridIdeal {
 public:
  static GridIdeal factored(RingPtr ring, std::vector<std::vector<FieldElement>> roots);
  static GridIdeal opaque(RingPtr ring, std::vector<Polynomial> univariates);

  const RingPtr& ring() const { return ring_; }
  bool is_factored() const { return roots_.has_value(); }
  const std::vector<std::vector<FieldElement>>& roots() const;
  /// Monic g_i, one per variable.
  const std::vector<Polynomial>& polynomials() const { return polys_; }
  std::vector<std::size_t> degrees() const;
  /// Factored with pairwise distinct roots in every variable.
  bool is_radical_grid() const;
  Ideal ideal() const { return Ideal(ring_, polys_); }

 private:
  GridIdeal(RingPtr ring, std::optional<std::vector<std::vector<FieldElement>>> roots, std::vector<Polynomial> polys)
      : ring_(std::move(ring)), roots_(std::move(roots)), polys_(std::move(polys)) {}

  RingPtr ring_;
  std::optional<std::vector<std::vector<FieldElement>>> roots_;
  std::vector<Polynomial> polys_;
};

/// Grid file: `x: 0, 1/5, 2` or `x: poly <expr>`, one line per variable.
GridIdeal parse_grid_spec(std::string_view text, std::optional<FieldSpec> field = std::nullopt,
                          std::optional<std::vector<std::string>> vars = std::nullopt);

Ideal grid_ideal(const GridIdeal& grid);
PointSet grid_points(const GridIdeal& grid);
Term socle_term(const GridIdeal& grid);
/// Largest grid ideal inside a zero-dimensional ideal, via elimination.
GridIdeal mgrid(const Ideal& ideal);
/// <x_i^p - x_i> over GF(p).
GridIdeal field_equation_ideal(const RingPtr& ring);
/// Every <q_1(x_1), ..., q_n(x_n)> with q_i one of the supplied factors of g_i.
std::vector<Ideal> grid_primary_components(const GridIdeal& grid, const std::vector<std::vector<Polynomial>>& factors);

// ---------------------------------------------------------------------------
// Staircases and distractions

/// The points (a_1, ..., a_n) for x^a outside M.
PointSet staircase(const MonomialIdeal& m, const RingPtr& ring);

struct DistractionSpec {
  std::vector<std::vector<FieldElement>> pi;
};
/// (0, 1, ..., d_i - 1) per variable.
DistractionSpec natural_spec(const std::vector<Term::Exponent>& degrees, const FieldSpec& field);

Polynomial distraction_term(const RingPtr& ring, const Term& t, const DistractionSpec& spec);
Ideal distraction_ideal(const RingPtr& ring, const MonomialIdeal& m, const DistractionSpec& spec);
Ideal natural_distraction(const RingPtr& ring, const MonomialIdeal& m);

// ---------------------------------------------------------------------------
// Complementary ideals

struct ComplementarityCertificate {
  bool intersection_is_grid = false;  // I1 cap I2 == J
  bool sum_is_unit = false;           // I1 + I2 == <1>
  bool colon_recovers_first = false;  // J : I2 == I1
  std::size_t multiplicity_grid = 0;
  std::size_t multiplicity_first = 0;
  std::size_t multiplicity_second = 0;
  bool ok() const {
    return intersection_is_grid && sum_is_unit && colon_recovers_first &&
           multiplicity_grid == multiplicity_first + multiplicity_second;
  }
};

struct ComplementaryPair {
  Ideal second;
  ComplementarityCertificate certificate;
};

/// I2 = J : I1 with the identities checked; throws when they fail.
ComplementaryPair complementary_pair(const GridIdeal& grid, const Ideal& first);

/// I(Y) and I(X \ Y) for a full grid X and a nonempty Y inside it.
std::pair<Ideal, Ideal> subset_complement_ideals(const PointSet& grid, const PointSet& subset);

/// <Phi(g)> over the generators.
Ideal shift_ideal(const Ideal& ideal, const LinearShift& shift);

}  // namespace gbfan
