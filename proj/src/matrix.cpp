#include "disperse/matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "disperse/errors.hpp"

namespace disperse {

namespace {

void check_dims(std::size_t r, std::size_t c) {
  if (r < 1 || c < 1) {
    throw InvalidInputError("matrix dimensions must be >= 1, got " + std::to_string(r) + "x" +
                            std::to_string(c));
  }
}

}  // namespace

Matrix::Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {
  check_dims(r, c);
}

Matrix::Matrix(std::size_t r, std::size_t c, std::vector<double> d)
    : rows(r), cols(c), data(std::move(d)) {
  check_dims(r, c);
  if (data.size() != rows * cols) {
    throw InvalidInputError("matrix data length " + std::to_string(data.size()) +
                            " does not match shape " + std::to_string(rows) + "x" +
                            std::to_string(cols));
  }
  if (!all_finite()) {
    throw InvalidInputError("matrix contains non-finite entries");
  }
}

bool Matrix::all_finite() const {
  for (double v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Matrix pairwise_sq_dists(const Matrix& h) {
  if (!h.all_finite()) {
    throw InvalidInputError("pairwise_sq_dists: input has non-finite entries");
  }
  const std::size_t b = h.rows;
  Matrix d(b, b);
  for (std::size_t i = 0; i < b; ++i) {
    d(i, i) = 0.0;
    const double* hi = h.row(i);
    for (std::size_t j = i + 1; j < b; ++j) {
      const double* hj = h.row(j);
      double acc = 0.0;
      for (std::size_t c = 0; c < h.cols; ++c) {
        const double diff = hi[c] - hj[c];
        acc += diff * diff;
      }
      d(i, j) = acc;
      d(j, i) = acc;  // mirrored, so symmetry is exact
    }
  }
  return d;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw InvalidInputError("matmul: inner dimensions disagree");
  Matrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* brow = b.row(k);
      double* orow = out.row(i);
      for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

Matrix matmul_at_b(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) throw InvalidInputError("matmul_at_b: row counts disagree");
  Matrix out(a.cols, b.cols);
  for (std::size_t k = 0; k < a.rows; ++k) {
    const double* arow = a.row(k);
    const double* brow = b.row(k);
    for (std::size_t i = 0; i < a.cols; ++i) {
      const double aki = arow[i];
      if (aki == 0.0) continue;
      double* orow = out.row(i);
      for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aki * brow[j];
    }
  }
  return out;
}

Matrix matmul_a_bt(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) throw InvalidInputError("matmul_a_bt: column counts disagree");
  Matrix out(a.rows, b.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.row(i);
    for (std::size_t j = 0; j < b.rows; ++j) {
      const double* brow = b.row(j);
      double acc = 0.0;
      for (std::size_t k = 0; k < a.cols; ++k) acc += arow[k] * brow[k];
      out(i, j) = acc;
    }
  }
  return out;
}

std::vector<double> column_sums(const Matrix& a) {
  std::vector<double> sums(a.cols, 0.0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    const double* arow = a.row(i);
    for (std::size_t j = 0; j < a.cols; ++j) sums[j] += arow[j];
  }
  return sums;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw InvalidInputError("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    m = std::max(m, std::fabs(a.data[i] - b.data[i]));
  }
  return m;
}

}  // namespace disperse
