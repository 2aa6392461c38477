#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qla/tensor.hpp"

namespace qla {

// Dense tensor with every axis of the same extent d, stored row-major.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int dim, int rank);

  static Tensor from(const Mat& m, int dim);
  static Tensor from(const BiMat& m) { return from(m.mat(), m.n()); }

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  std::size_t size() const { return data_.size(); }
  Scalar& operator[](std::size_t flat) { return data_[flat]; }
  const Scalar& operator[](std::size_t flat) const { return data_[flat]; }
  const Scalar& at(const std::vector<int>& idx) const { return data_[flatten(idx)]; }
  Scalar& at(const std::vector<int>& idx) { return data_[flatten(idx)]; }
  std::size_t flatten(const std::vector<int>& idx) const;
  const std::vector<Scalar>& data() const { return data_; }

  // Reshape as (d^row_rank) x (d^(rank-row_rank)).
  Mat as_mat(int row_rank) const;
  BiMat as_bimat(int n) const;
  // Same entries viewed with extent `dim` (dim^rank' must equal size()).
  Tensor reshaped(int dim) const;

 private:
  int dim_ = 0;
  int rank_ = 0;
  std::vector<Scalar> data_;
};

// Sum over repeated labels, e.g. einsum("mkjn,sdml->djkls", {A, B}). Every
// operand shares the extent of the first; labels are single characters.
Tensor einsum(const std::string& pattern, const std::vector<const Tensor*>& operands);

}  // namespace qla
