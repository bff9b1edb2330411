#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gbfan/term.hpp"

namespace gbfan {

/// A term ordering given by an integer weight matrix: s < t iff the first
/// nonzero entry of M*(t - s) is positive.  Construction rejects matrices of
/// rank < n and matrices where 1 is not the minimal term.
class TermOrdering {
 public:
  enum class Kind { Lex, DegLex, DegRevLex, Weight, Matrix };
  using Row = std::vector<std::int64_t>;

  static TermOrdering lex(std::size_t nvars);
  static TermOrdering deglex(std::size_t nvars);
  static TermOrdering degrevlex(std::size_t nvars);
  /// Weight vector first, ties broken by degrevlex.
  static TermOrdering weight(Row w);
  static TermOrdering matrix(std::vector<Row> rows);
  /// Weight rows on top of a degrevlex completion (used for fan flips and
  /// block elimination).
  static TermOrdering refined(std::vector<Row> leading_rows, std::size_t nvars);
  /// `lex`, `deglex`, `degrevlex`, `weight:2,1` or `matrix:1,1;0,-1`.
  static TermOrdering parse(std::string_view spec, std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  Kind kind() const { return kind_; }
  const std::vector<Row>& rows() const { return rows_; }

  /// -1, 0 or 1 as s <, =, > t.
  int compare(const Term& s, const Term& t) const;
  bool less(const Term& s, const Term& t) const { return compare(s, t) < 0; }
  bool greater(const Term& s, const Term& t) const { return compare(s, t) > 0; }

  /// Canonical form of the ordering (orthogonalised primitive rows), equal
  /// for two matrices exactly when they induce the same ordering.
  const std::string& canonical_key() const { return key_; }
  std::string to_string() const;

  friend bool operator==(const TermOrdering& a, const TermOrdering& b) { return a.key_ == b.key_; }

 private:
  TermOrdering(Kind kind, std::vector<Row> rows, std::size_t nvars);

  Kind kind_;
  std::vector<Row> rows_;
  std::size_t nvars_;
  std::string key_;
};

}  // namespace gbfan
