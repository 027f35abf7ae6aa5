#include "naimark/matrix.hpp"

#include <cmath>
#include <string>

namespace naimark {

namespace {

void check_shape(int rows, int cols) {
  if (rows <= 0 || cols <= 0) {
    throw Error(ErrorCode::InvalidArgument,
                "matrix shape must be positive, got " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  check_shape(rows, cols);
  entries_.assign(static_cast<size_t>(rows) * cols, 0.0);
}

Matrix::Matrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  check_shape(rows, cols);
  if (entries_.size() != static_cast<size_t>(rows) * cols) {
    throw Error(ErrorCode::InvalidArgument,
                "entry count " + std::to_string(entries_.size()) + " does not match " +
                    std::to_string(rows) + "x" + std::to_string(cols));
  }
  if (!all_finite()) {
    throw Error(ErrorCode::InvalidArgument, "matrix entries must be finite");
  }
}

Matrix::Matrix(int rows, int cols, std::initializer_list<double> entries)
    : Matrix(rows, cols, std::vector<double>(entries)) {}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(const std::vector<double>& entries) {
  Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (size_t i = 0; i < entries.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = entries[i];
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::row(int i) const {
  Matrix r(1, cols_);
  for (int j = 0; j < cols_; ++j) r(0, j) = (*this)(i, j);
  return r;
}

Matrix Matrix::col(int j) const {
  Matrix c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (!same_shape(other)) throw Error(ErrorCode::ShapeMismatch, "matrix addition");
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (!same_shape(other)) throw Error(ErrorCode::ShapeMismatch, "matrix subtraction");
  for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

Matrix& Matrix::operator*=(double scalar) {
  for (double& e : entries_) e *= scalar;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "matrix product " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " * " +
                                              std::to_string(b.rows()) + "x" +
                                              std::to_string(b.cols()));
  }
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (double e : entries_) sum += e * e;
  return std::sqrt(sum);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double e : entries_) m = std::max(m, std::fabs(e));
  return m;
}

bool Matrix::all_finite() const {
  for (double e : entries_)
    if (!std::isfinite(e)) return false;
  return true;
}

double frobenius_distance(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw Error(ErrorCode::ShapeMismatch, "frobenius_distance");
  double sum = 0.0;
  for (size_t k = 0; k < a.entries().size(); ++k) {
    const double d = a.entries()[k] - b.entries()[k];
    sum += d * d;
  }
  return std::sqrt(sum);
}

double row_dot(const Matrix& a, int i, const Matrix& b, int j) {
  if (a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "row_dot");
  double sum = 0.0;
  for (int k = 0; k < a.cols(); ++k) sum += a(i, k) * b(j, k);
  return sum;
}

}  // namespace naimark
