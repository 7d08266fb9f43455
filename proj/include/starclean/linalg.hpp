#pragma once

#include <cstddef>
#include <vector>

#include "starclean/gf.hpp"

// Dense matrices over a coefficient field, row-major.
namespace starclean::linalg {

using gf::SmallField;
using Entry = SmallField::Elem;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Entry& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Entry at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Entry* row(std::size_t r) { return data_.data() + r * cols_; }
  const Entry* row(std::size_t r) const { return data_.data() + r * cols_; }

  void append_row(const std::vector<Entry>& values);
  /// Rows of this followed by rows of other; column counts must agree.
  Matrix stacked(const Matrix& other) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> data_;
};

/// In-place reduced row echelon form. Nonzero rows come first; returns the
/// pivot column of each of them.
std::vector<std::size_t> rref(const SmallField& f, Matrix& m);

std::size_t rank(const SmallField& f, Matrix m);

/// RREF basis of the row space (zero rows dropped).
Matrix row_space(const SmallField& f, Matrix m);

/// RREF basis of {x : m x^T = 0}.
Matrix nullspace(const SmallField& f, const Matrix& m);

/// a * b^T.
Matrix mul_transpose(const SmallField& f, const Matrix& a, const Matrix& b);

bool same_row_space(const SmallField& f, const Matrix& a, const Matrix& b);
/// Row space of a is contained in that of b.
bool row_space_within(const SmallField& f, const Matrix& a, const Matrix& b);

}  // namespace starclean::linalg
