#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "gbfan/monomial_ideal.hpp"
#include "gbfan/ordering.hpp"
#include "gbfan/polynomial.hpp"

namespace gbfan {

/// The reduced monic Groebner basis of an ideal for one term ordering,
/// sorted by increasing leading term.
class ReducedGB {
 public:
  ReducedGB(TermOrdering ordering, RingPtr ring, std::vector<Polynomial> elements);

  const TermOrdering& ordering() const { return ordering_; }
  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Term>& leading_terms() const { return leading_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const;

  MonomialIdeal leading_term_ideal() const;
  /// One polynomial per line, preceded by `order: <spec>`.
  std::string serialize() const;

  friend bool operator==(const ReducedGB& a, const ReducedGB& b) {
    return a.ordering_ == b.ordering_ && a.elements_ == b.elements_;
  }

 private:
  TermOrdering ordering_;
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  std::vector<Term> leading_;
};

struct BuchbergerOptions {
  /// Coprime-leading-term and chain criteria.  Disabling them must not
  /// change the result.
  bool use_criteria = true;
};

/// An ideal given by generators.  Reduced bases are memoised per ordering;
/// the memo is shared by copies and safe to use from several threads.
class Ideal {
 public:
  explicit Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal parse(RingPtr ring, const std::vector<std::string>& generators);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  const ReducedGB& reduced_basis(const TermOrdering& ordering) const;
  const ReducedGB& reduced_basis() const;  // degrevlex

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const ReducedGB>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

ReducedGB buchberger(const RingPtr& ring, const std::vector<Polynomial>& generators, const TermOrdering& ordering,
                     const BuchbergerOptions& options = {});
inline const ReducedGB& buchberger(const Ideal& ideal, const TermOrdering& ordering) {
  return ideal.reduced_basis(ordering);
}

/// Remainder of f on division by G: no term is divisible by a leading term of G.
Polynomial normal_form(const Polynomial& f, const ReducedGB& basis);
/// The S-polynomial of f and g under `ordering` (used by tests).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrdering& ordering);

MonomialIdeal leading_term_ideal(const Ideal& ideal, const TermOrdering& ordering);
bool is_zero_dimensional(const Ideal& ideal);
/// O_sigma(I) sorted increasing in sigma.  Throws NotZeroDimensional.
std::vector<Term> quotient_basis(const Ideal& ideal, const TermOrdering& ordering);
std::vector<Term> quotient_basis(const ReducedGB& basis);
/// dim_K(P/I).  Throws NotZeroDimensional.
std::size_t multiplicity(const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Tag-variable method: eliminate t from t*I1 + (1-t)*I2.
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// J : I.  Throws ZeroIdealDivisor when I is the zero ideal.
Ideal ideal_colon(const Ideal& j, const Ideal& i);
/// I intersected with K[variables not in `eliminate`].
Ideal elimination(const Ideal& ideal, const std::vector<std::size_t>& eliminate);
bool ideal_member(const Polynomial& f, const Ideal& ideal);
bool ideal_contains(const Ideal& big, const Ideal& small);
bool ideal_equal(const Ideal& a, const Ideal& b);

}  // namespace gbfan
