#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbfan/field.hpp"
#include "gbfan/ordering.hpp"
#include "gbfan/term.hpp"

namespace gbfan {

/// Variable names plus coefficient field.  Shared by every polynomial of
/// the ring; two rings are the same ring when names and field agree.
class Ring {
 public:
  Ring(FieldSpec field, std::vector<std::string> names);

  static std::shared_ptr<const Ring> make(FieldSpec field, std::vector<std::string> names) {
    return std::make_shared<const Ring>(field, std::move(names));
  }

  const FieldSpec& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  FieldElement zero() const { return FieldElement::zero(field_); }
  FieldElement one() const { return FieldElement::one(field_); }

  friend bool operator==(const Ring& a, const Ring& b) { return a.field_ == b.field_ && a.names_ == b.names_; }

 private:
  FieldSpec field_;
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b);

/// A sparse polynomial: term -> nonzero coefficient.  The map is kept in
/// storage order; every ordering-dependent view (leading term, printing)
/// takes the term ordering as an argument.
class Polynomial {
 public:
  using TermMap = std::map<Term, FieldElement>;

  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, TermMap terms);

  static Polynomial constant(RingPtr ring, const FieldElement& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, const Term& t, const FieldElement& c);
  static Polynomial monomial(RingPtr ring, const Term& t);
  /// Parses the text grammar (see README).  Throws ParseError.
  static Polynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  std::size_t nvars() const { return ring_->nvars(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  std::vector<Term> support() const;
  FieldElement coefficient(const Term& t) const;

  /// The ordering-maximal support term and its coefficient.  Throws ZeroPolynomial.
  std::pair<Term, FieldElement> leading(const TermOrdering& ord) const;
  Term leading_term(const TermOrdering& ord) const { return leading(ord).first; }
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic(const TermOrdering& ord) const;
  /// Terms in strictly decreasing order.
  std::vector<std::pair<Term, FieldElement>> sorted_terms(const TermOrdering& ord) const;

  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  /// True if every support term only involves `var`.
  bool is_univariate_in(std::size_t var) const;
  bool involves(std::size_t var) const;
  FieldElement evaluate(const std::vector<FieldElement>& point) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const FieldElement& c) const;
  Polynomial times_term(const Term& t, const FieldElement& c) const;
  Polynomial pow(unsigned e) const;
  /// Sum of c*t, skipping the map lookup cost when the caller accumulates.
  void add_term(const Term& t, const FieldElement& c);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Canonical text: terms in strictly decreasing `ord` order.
  std::string to_string(const TermOrdering& ord) const;
  /// Canonical text under the ring's degrevlex ordering.
  std::string to_string() const;

 private:
  void check_ring(const Polynomial& rhs) const;

  RingPtr ring_;
  TermMap terms_;
};

/// True iff some support term is divisible by every other support term.
bool is_factor_closed(const Polynomial& f);

/// f / g when g divides f exactly, otherwise nullopt.
std::optional<Polynomial> exact_quotient(const Polynomial& f, const Polynomial& g);

/// The affine substitution x_i -> a_i x_i + b_i with every a_i nonzero.
class LinearShift {
 public:
  LinearShift(std::vector<FieldElement> scales, std::vector<FieldElement> offsets);
  static LinearShift identity(const Ring& ring);
  static LinearShift translation(std::vector<FieldElement> offsets);

  std::size_t nvars() const { return scales_.size(); }
  const std::vector<FieldElement>& scales() const { return scales_; }
  const std::vector<FieldElement>& offsets() const { return offsets_; }
  /// x_i -> a_i^{-1} x_i - a_i^{-1} b_i.
  LinearShift inverse() const;
  std::string to_string(const Ring& ring) const;

 private:
  std::vector<FieldElement> scales_;
  std::vector<FieldElement> offsets_;
};

Polynomial apply_linear_shift(const Polynomial& f, const LinearShift& shift);

}  // namespace gbfan
