#pragma once

#include <initializer_list>
#include <vector>

#include "naimark/error.hpp"

namespace naimark {

/// Dense real matrix, row-major, 64-bit entries. All entries are kept finite;
/// constructors taking user data reject NaN and infinities.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  Matrix(int rows, int cols, std::vector<double> entries);
  Matrix(int rows, int cols, std::initializer_list<double> entries);

  static Matrix identity(int n);
  static Matrix diagonal(const std::vector<double>& entries);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  double& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return entries_[static_cast<size_t>(i) * cols_ + j]; }

  const std::vector<double>& entries() const { return entries_; }
  std::vector<double>& entries() { return entries_; }

  Matrix transposed() const;
  Matrix row(int i) const;
  Matrix col(int j) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(double scalar);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  bool operator==(const Matrix& other) const = default;

  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> entries_;
};

/// sqrt(sum of squared entrywise differences); requires identical shapes.
double frobenius_distance(const Matrix& a, const Matrix& b);

/// Inner product of row i of `a` with row j of `b` (rows must have equal length).
double row_dot(const Matrix& a, int i, const Matrix& b, int j);

}  // namespace naimark
