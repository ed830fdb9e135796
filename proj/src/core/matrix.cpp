#include "actnet/core/matrix.hpp"

namespace actnet {

Matrix hadamard(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) {
    throw DimensionError("hadamard: shape mismatch " + std::to_string(a.rows) + "x" +
                         std::to_string(a.cols) + " vs " + std::to_string(b.rows) + "x" +
                         std::to_string(b.cols));
  }
  Matrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] * b.data[i];
  return out;
}

Vector row_sums(const Matrix& a) {
  if (a.rows == 0 || a.cols == 0) throw ArgumentError("row_sums: empty matrix");
  Vector out(a.rows, 0.0);
  for (int i = 0; i < a.rows; ++i) {
    const double* r = a.row(i);
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += r[j];
    out[i] = s;
  }
  return out;
}

double sum(const Vector& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) {
    throw DimensionError("matmul: inner dimensions " + std::to_string(a.cols) + " vs " +
                         std::to_string(b.rows));
  }
  Matrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    double* ci = out.row(i);
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      const double* bk = b.row(k);
      for (int j = 0; j < b.cols; ++j) ci[j] += aik * bk[j];
    }
  }
  return out;
}

}  // namespace actnet
