#pragma once

#include <span>
#include <string>
#include <vector>

#include "gbfan/term.hpp"

namespace gbfan {

/// A monomial ideal held by its unique minimal generating set, sorted in
/// storage order so equal ideals compare equal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}
  /// Minimalises the given generators.
  MonomialIdeal(std::size_t nvars, std::vector<Term> generators);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool contains(const Term& t) const;
  /// A pure power of every variable is among the generators.
  bool is_zero_dimensional() const;
  /// d_i: the largest exponent of x_i among the minimal generators.
  std::vector<Term::Exponent> max_exponents() const;

  /// Power products outside the ideal, sorted in storage order.  Throws
  /// InfiniteOrderIdeal when the ideal is not zero-dimensional.
  std::vector<Term> order_ideal() const;

  friend MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
  friend MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  /// Generators joined by ", ".
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_;
  std::vector<Term> gens_;
};

/// The order ideal of a monomial ideal (alias used by the points module).
inline std::vector<Term> order_ideal_of(const MonomialIdeal& m) { return m.order_ideal(); }

}  // namespace gbfan
