#pragma once

#include <string>
#include <vector>

#include "gbfan/groebner.hpp"
#include "gbfan/polyhedral.hpp"

namespace gbfan {

/// {w in R^n_+ : v . w >= 0 for every listed v}.  The list holds only
/// inequalities not implied by the others and the orthant, each a
/// primitive integer vector, sorted lexicographically.
class Cone {
 public:
  Cone(std::size_t dim, std::vector<IntVector> inequalities);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& inequalities() const { return ineqs_; }
  bool contains(const IntVector& w) const;
  /// w lies in the interior, or on the boundary with the cone on the side of
  /// `direction` (tested lexicographically on (v.w, v.direction)).
  bool contains_perturbed(const IntVector& w, const IntVector& direction) const;
  std::string to_string() const;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend auto operator<=>(const Cone& a, const Cone& b) { return a.ineqs_ <=> b.ineqs_; }

 private:
  std::size_t dim_;
  std::vector<IntVector> ineqs_;
};

/// The cone of a reduced basis whose element i is marked by marking[i].
/// Throws InconsistentMarking if no strictly positive weight realises it.
Cone cone_of(const std::vector<Polynomial>& basis, const std::vector<Term>& marking);
Cone cone_of(const ReducedGB& basis);

/// One cone of the fan together with its reduced basis.
struct MarkedReducedGB {
  ReducedGB basis;
  Cone cone;
  MonomialIdeal lt_ideal;
  /// Canonical sorted minimal generators of the leading-term ideal.
  std::string key;

  const std::vector<Term>& marking() const { return basis.leading_terms(); }
};

MarkedReducedGB mark(const ReducedGB& basis);

class GroebnerFan {
 public:
  explicit GroebnerFan(std::size_t nvars) : nvars_(nvars) {}
  GroebnerFan(std::size_t nvars, std::vector<MarkedReducedGB> cones);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return cones_.size(); }
  /// Sorted by key.
  const std::vector<MarkedReducedGB>& cones() const { return cones_; }
  std::vector<MonomialIdeal> lt_ideals() const;
  /// Sorted cone inequality lists, for set comparison.
  std::vector<Cone> canonical_cones() const;

 private:
  std::size_t nvars_;
  std::vector<MarkedReducedGB> cones_;
};

/// Traverses the restricted Groebner fan by facet flips, starting from the
/// degrevlex basis.  Throws ZeroIdeal or UnsupportedIdealClass.
GroebnerFan enumerate_fan(const Ideal& ideal);

/// Reduced degrevlex basis consists only of factor-closed polynomials.
/// Equivalent to gfan_number(ideal) == 1.
bool unique_gb_fast_check(const Ideal& ideal);

std::size_t gfan_number(const Ideal& ideal);

/// O_sigma(I) for each cone.  Throws NotZeroDimensional.
std::vector<std::vector<Term>> gbasic_sets(const GroebnerFan& fan);

bool fan_equal(const GroebnerFan& a, const GroebnerFan& b);

struct BasicSetOptions {
  std::size_t max_multiplicity = 12;
};

/// All order ideals whose residue classes form a K-basis of P/I, each
/// sorted in storage order.  Throws NotZeroDimensional or BoundExceeded.
std::vector<std::vector<Term>> enumerate_basic_sets(const Ideal& ideal, const BasicSetOptions& options = {});

/// The fan computed without flips: every basic set is tested for being
/// G-basic via an exact positivity certificate.
GroebnerFan fan_oracle_zerodim(const Ideal& ideal, const BasicSetOptions& options = {});

/// Normal forms of f under every cone's reduced basis, deduplicated and
/// sorted by their printed form.
std::vector<Polynomial> minimal_models(const Polynomial& f, const Ideal& ideal);

/// Degree of the monic generator of I cap K[x_i], for each i, from the
/// minimal polynomial of x_i acting on P/I.
std::vector<std::size_t> univariate_degrees(const Ideal& ideal);

}  // namespace gbfan
