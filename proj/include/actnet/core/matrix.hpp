#pragma once

#include <cstddef>
#include <vector>

#include "actnet/core/errors.hpp"

namespace actnet {

using Vector = std::vector<double>;

// Dense row-major matrix of 64-bit floats. Sized for desk-scale problems
// (a few hundred per side); no sparse or BLAS abstraction behind it.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;  // rows*cols, row-major

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
  const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

  std::size_t size() const { return data.size(); }
  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
};

// Elementwise product; shapes must match.
Matrix hadamard(const Matrix& a, const Matrix& b);

// result[i] = sum_j a(i,j). Empty input is rejected.
Vector row_sums(const Matrix& a);

// Sum of entries (the vector case of the row-sum operator).
double sum(const Vector& v);

// Plain dense product a(mxk) * b(kxn).
Matrix matmul(const Matrix& a, const Matrix& b);

}  // namespace actnet
