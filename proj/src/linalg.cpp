#include "gbfan/linalg.hpp"

#include "gbfan/errors.hpp"

namespace gbfan {

std::pair<Vector, Vector> EchelonBasis::reduce(const Vector& v) const {
  if (v.size() != dim_) fail(ErrorKind::DimensionMismatch, "vector length differs from echelon dimension");
  Vector residual = v;
  Vector comb(inserted_, FieldElement::zero(field_));
  for (const auto& row : rows_) {
    if (residual[row.pivot].is_zero()) continue;
    FieldElement factor = residual[row.pivot] / row.vec[row.pivot];
    for (std::size_t i = 0; i < dim_; ++i)
      if (!row.vec[i].is_zero()) residual[i] -= factor * row.vec[i];
    for (std::size_t k = 0; k < row.comb.size(); ++k)
      if (!row.comb[k].is_zero()) comb[k] += factor * row.comb[k];
  }
  return {std::move(residual), std::move(comb)};
}

std::optional<Vector> EchelonBasis::express(const Vector& v) const {
  auto [residual, comb] = reduce(v);
  for (const auto& x : residual)
    if (!x.is_zero()) return std::nullopt;
  return comb;
}

bool EchelonBasis::insert(const Vector& v) {
  auto [residual, comb] = reduce(v);
  std::size_t pivot = dim_;
  for (std::size_t i = 0; i < dim_; ++i)
    if (!residual[i].is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == dim_) return false;
  // residual = v - sum comb_k inserted_k
  Vector row_comb(inserted_ + 1, FieldElement::zero(field_));
  for (std::size_t k = 0; k < inserted_; ++k) row_comb[k] = -comb[k];
  row_comb[inserted_] = FieldElement::one(field_);
  ++inserted_;
  for (auto& row : rows_) row.comb.resize(inserted_, FieldElement::zero(field_));
  rows_.push_back(Row{std::move(residual), std::move(row_comb), pivot});
  return true;
}

}  // namespace gbfan
