#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gbfan {

/// The coefficient domain: the rationals or a prime field GF(p) with p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts `QQ` or `GF(p)`.
  static FieldSpec parse(std::string_view text);

  Kind kind() const { return p_ == 0 ? Kind::Rationals : Kind::PrimeField; }
  bool is_rationals() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec() = default;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t n);

/// An exact scalar.  Rationals are kept in lowest terms with a positive
/// denominator; residues in [0, p).
class FieldElement {
 public:
  FieldElement() = default;  // rational zero
  FieldElement(const FieldSpec& field, long value);
  FieldElement(const FieldSpec& field, const mpz_class& value);
  static FieldElement rational(const mpq_class& value);
  static FieldElement rational(long num, long den);
  static FieldElement zero(const FieldSpec& field) { return FieldElement(field, 0L); }
  static FieldElement one(const FieldSpec& field) { return FieldElement(field, 1L); }
  /// Literal `a` or `a/b` (optionally signed).  Over GF(p) the result is
  /// reduced modulo p.
  static FieldElement parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;
  /// True for a negative rational; residues are never negative.
  bool is_negative() const;
  const mpq_class& as_rational() const { return q_; }
  std::uint32_t residue() const { return r_; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement inverse() const;
  FieldElement abs() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);
  /// Total order used for canonical sorting: numeric over QQ, residue over GF(p).
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  void check_same(const FieldElement& rhs) const;

  std::uint32_t p_ = 0;
  std::uint32_t r_ = 0;
  mpq_class q_;
};

/// Image of n under the ring map N -> K.
FieldElement nat_embed(unsigned long n, const FieldSpec& field);

}  // namespace gbfan
