#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qnash {

// Dense row-major matrix of doubles. Games in this library are square and
// small enough (k up to a few thousand) that a flat std::vector is the right
// representation; heavy linear algebra lives behind the brute-force solver.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
  }

  static Matrix square(int k, double fill = 0.0) { return Matrix(k, k, fill); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  double& at(int i, int j) {
    check_index(i, j);
    return (*this)(i, j);
  }
  double at(int i, int j) const {
    check_index(i, j);
    return (*this)(i, j);
  }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  void check_index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
      throw std::out_of_range("Matrix: index out of range");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

}  // namespace qnash
