#pragma once

#include <optional>
#include <vector>

#include "gbfan/field.hpp"

namespace gbfan {

using Vector = std::vector<FieldElement>;

/// Incremental Gaussian elimination.  Each stored row remembers how it is
/// written in terms of the vectors inserted so far, so a dependent vector
/// can be expressed as a combination of them.
class EchelonBasis {
 public:
  EchelonBasis(std::size_t dim, FieldSpec field) : dim_(dim), field_(field) {}

  std::size_t rank() const { return rows_.size(); }

  /// Coefficients c with v = sum c_k inserted_k, when v is in the span.
  std::optional<Vector> express(const Vector& v) const;
  bool independent(const Vector& v) const { return !express(v).has_value(); }
  /// Adds v; returns false (and changes nothing) when v is dependent.
  bool insert(const Vector& v);

 private:
  struct Row {
    Vector vec;
    Vector comb;  // over inserted vectors
    std::size_t pivot;
  };
  // Residual of v and the combination c with v = residual + sum c_k inserted_k.
  std::pair<Vector, Vector> reduce(const Vector& v) const;

  std::size_t dim_;
  FieldSpec field_;
  std::vector<Row> rows_;
  std::size_t inserted_ = 0;
};

}  // namespace gbfan
