#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gbfan {

/// A power product x_1^a_1 ... x_n^a_n, stored as its exponent vector.
class Term {
 public:
  using Exponent = std::uint32_t;

  Term() = default;
  explicit Term(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Term(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Term(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Term one(std::size_t nvars) { return Term(nvars); }
  static Term variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  bool is_one() const;
  std::uint64_t degree() const;
  /// True iff this term divides `other`.
  bool divides(const Term& other) const;
  /// other / this; only meaningful when divides(other).
  Term quotient_of(const Term& other) const;
  Term lcm(const Term& other) const;
  Term gcd(const Term& other) const;
  bool coprime(const Term& other) const;
  /// Index of the only variable with a positive exponent, or -1.
  int pure_power_variable() const;

  friend Term operator*(const Term& a, const Term& b);
  friend bool operator==(const Term&, const Term&) = default;
  /// Storage order (lexicographic on exponents); not a term ordering choice.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) { return a.exps_ <=> b.exps_; }

  /// `x^2*y`, or `1` for the identity.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Exponent> exps_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

}  // namespace gbfan
