#pragma once

#include <cstdint>
#include <vector>

#include "orbitk/numeric.hpp"

namespace orbitk {

/// Dense exact rational matrix.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, Rat(0)) {}

  static RationalMatrix identity(int n);
  static RationalMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  std::vector<Rat> col(int j) const;
  RationalMatrix cols_subset(uint32_t mask) const;       // columns with set bits, in order
  RationalMatrix transpose() const;
  RationalMatrix mul(const RationalMatrix& b) const;
  RationalMatrix scale_cols(const std::vector<Rat>& d) const;

  int rank() const;
  int rank_of_cols(uint32_t mask) const;

  /// Basis of the right kernel as rows of a (cols-rank) x cols matrix
  /// (the Gale dual when applied to a vector configuration).
  RationalMatrix kernel_basis() const;

  bool operator==(const RationalMatrix&) const = default;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref_in_place(RationalMatrix& m);

}  // namespace orbitk
