#include "orbitk/ratmat.hpp"

namespace orbitk {

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r ? static_cast<int>(rows[0].size()) : 0;
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw Error("bad_matrix", "ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rat> RationalMatrix::col(int j) const {
  std::vector<Rat> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

RationalMatrix RationalMatrix::cols_subset(uint32_t mask) const {
  std::vector<int> idx;
  for (int j = 0; j < cols_; ++j)
    if (mask & (1u << j)) idx.push_back(j);
  RationalMatrix m(rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t k = 0; k < idx.size(); ++k) m.at(i, static_cast<int>(k)) = at(i, idx[k]);
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

RationalMatrix RationalMatrix::mul(const RationalMatrix& b) const {
  if (cols_ != b.rows_) throw Error("bad_matrix", "dimension mismatch in mul");
  RationalMatrix m(rows_, b.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += at(i, k) * b.at(k, j);
    }
  return m;
}

RationalMatrix RationalMatrix::scale_cols(const std::vector<Rat>& d) const {
  if (static_cast<int>(d.size()) != cols_)
    throw Error("bad_matrix", "dimension mismatch in scale_cols");
  RationalMatrix m(*this);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(i, j) *= d[j];
  return m;
}

std::vector<int> rref_in_place(RationalMatrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Rat inv = m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) /= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rat f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int RationalMatrix::rank() const {
  RationalMatrix m(*this);
  return static_cast<int>(rref_in_place(m).size());
}

int RationalMatrix::rank_of_cols(uint32_t mask) const {
  return cols_subset(mask).rank();
}

RationalMatrix RationalMatrix::kernel_basis() const {
  RationalMatrix m(*this);
  std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  int k = cols_ - static_cast<int>(pivots.size());
  RationalMatrix ker(k, cols_);
  int row = 0;
  for (int j = 0; j < cols_; ++j) {
    if (is_pivot[j]) continue;
    ker.at(row, j) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      ker.at(row, pivots[pi]) = -m.at(static_cast<int>(pi), j);
    ++row;
  }
  return ker;
}

}  // namespace orbitk
