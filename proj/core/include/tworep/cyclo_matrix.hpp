#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tworep/exactnum.hpp"

namespace tworep {

// Sparse matrix over cyclotomic numbers. Rows store only nonzero entries,
// sorted by column. Shapes with zero rows or zero columns are legal.
class CycloMatrix {
 public:
  using Entry = std::pair<std::size_t, CycloNumber>;
  using Row = std::vector<Entry>;

  CycloMatrix() = default;
  CycloMatrix(std::size_t rows, std::size_t cols);

  static CycloMatrix zero(std::size_t rows, std::size_t cols) { return CycloMatrix(rows, cols); }
  static CycloMatrix identity(std::size_t n);
  static CycloMatrix scalar(std::size_t n, const CycloNumber& x);
  // P(sigma)_{ij} = delta_{i, sigma(j)}, sigma given 0-based.
  static CycloMatrix permutation(const std::vector<int>& sigma);
  static CycloMatrix from_dense(const std::vector<std::vector<CycloNumber>>& rows);
  static CycloMatrix diagonal(const std::vector<CycloNumber>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }
  std::size_t nnz() const;

  CycloNumber at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const CycloNumber& v);
  const Row& row(std::size_t i) const { return data_[i]; }

  bool is_identity() const;
  bool is_zero() const;

  CycloMatrix transpose() const;
  CycloMatrix inverse() const;
  bool is_invertible() const;

  CycloMatrix& operator+=(const CycloMatrix& o);
  friend CycloMatrix operator+(CycloMatrix a, const CycloMatrix& b) { return a += b; }
  friend CycloMatrix operator-(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b);
  friend CycloMatrix operator*(const CycloNumber& s, const CycloMatrix& a);

  friend bool operator==(const CycloMatrix& a, const CycloMatrix& b);
  friend bool operator!=(const CycloMatrix& a, const CycloMatrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Row> data_;
};

CycloMatrix kron(const CycloMatrix& a, const CycloMatrix& b);
// Block diagonal sum; a block with zero rows or columns still contributes its
// nonzero dimension, so shapes add exactly.
CycloMatrix direct_sum(const CycloMatrix& a, const CycloMatrix& b);
CycloMatrix direct_sum(const std::vector<CycloMatrix>& blocks);

}  // namespace tworep
