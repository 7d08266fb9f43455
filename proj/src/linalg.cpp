#include "starclean/linalg.hpp"

#include "starclean/error.hpp"

namespace starclean::linalg {

void Matrix::append_row(const std::vector<Entry>& values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw InvalidInput("row length does not match matrix width");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::stacked(const Matrix& other) const {
  if (rows_ == 0) return other;
  if (other.rows_ == 0) return *this;
  if (cols_ != other.cols_) throw InvalidInput("cannot stack matrices of different widths");
  Matrix out = *this;
  out.data_.insert(out.data_.end(), other.data_.begin(), other.data_.end());
  out.rows_ += other.rows_;
  return out;
}

std::vector<std::size_t> rref(const SmallField& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m.at(sel, c) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Entry* pr = m.row(r);
    const Entry inv = f.inv(pr[c]);
    for (std::size_t j = c; j < cols; ++j) pr[j] = f.mul(pr[j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Entry* ri = m.row(i);
      const Entry factor = ri[c];
      if (factor == 0) continue;
      const Entry nf = f.neg(factor);
      for (std::size_t j = c; j < cols; ++j)
        if (pr[j] != 0) ri[j] = f.add(ri[j], f.mul(nf, pr[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const SmallField& f, Matrix m) { return rref(f, m).size(); }

Matrix row_space(const SmallField& f, Matrix m) {
  const auto pivots = rref(f, m);
  Matrix out(pivots.size(), m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = m.at(i, j);
  return out;
}

Matrix nullspace(const SmallField& f, const Matrix& m) {
  Matrix red = m;
  const auto pivots = rref(f, red);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Entry> v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(red.at(i, free));
    basis.append_row(v);
  }
  if (basis.rows() == 0) return Matrix(0, n);
  return row_space(f, basis);
}

Matrix mul_transpose(const SmallField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw InvalidInput("mul_transpose: width mismatch");
  Matrix out(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Entry* ra = a.row(i);
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const Entry* rb = b.row(j);
      Entry s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (ra[k] != 0 && rb[k] != 0) s = f.add(s, f.mul(ra[k], rb[k]));
      out.at(i, j) = s;
    }
  }
  return out;
}

bool row_space_within(const SmallField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return true;
  return rank(f, b.stacked(a)) == rank(f, b);
}

bool same_row_space(const SmallField& f, const Matrix& a, const Matrix& b) {
  return row_space(f, a) == row_space(f, b);
}

}  // namespace starclean::linalg
