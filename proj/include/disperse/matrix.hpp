#pragma once

#include <cstddef>
#include <vector>

namespace disperse {

/// Dense row-major matrix of doubles. Rows are samples, columns are features.
/// Desk scale by design (<= 1024 x 1024): no sparse or blocked paths.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;  // rows * cols entries, row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c);  // zero-filled
  Matrix(std::size_t r, std::size_t c, std::vector<double> d);  // validated: size and finiteness

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  double* row(std::size_t i) { return data.data() + i * cols; }
  const double* row(std::size_t i) const { return data.data() + i * cols; }

  bool all_finite() const;
  bool same_shape(const Matrix& other) const {
    return rows == other.rows && cols == other.cols;
  }
};

/// Squared Euclidean distance between all row pairs. Output is B x B,
/// exactly symmetric with a zero diagonal (upper triangle computed once
/// and mirrored). Throws InvalidInputError on non-finite entries.
Matrix pairwise_sq_dists(const Matrix& h);

// Small dense helpers used by the toy encoder. a_t / b_t mark the transposed operand.
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix matmul_at_b(const Matrix& a, const Matrix& b);
Matrix matmul_a_bt(const Matrix& a, const Matrix& b);
std::vector<double> column_sums(const Matrix& a);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace disperse
