#pragma once

#include <cmath>
#include <vector>

#include "naimark/frames.hpp"
#include "naimark/matrix.hpp"

namespace naimark::testing {

/// Mercedes-Benz Parseval frame: sqrt(2/3) * [0 -s3/2 s3/2; 1 -1/2 -1/2].
inline Matrix mercedes_benz() {
  const double r = std::sqrt(2.0 / 3.0);
  const double h = std::sqrt(3.0) / 2.0;
  return Matrix(2, 3, {0.0, -r * h, r * h, r, -r * 0.5, -r * 0.5});
}

/// Gram matrix of the Mercedes-Benz frame: 2/3 on the diagonal, -1/3 off it.
inline Matrix mercedes_benz_gram() {
  const double a = 2.0 / 3.0;
  const double b = -1.0 / 3.0;
  return Matrix(3, 3, {a, b, b, b, a, b, b, b, a});
}

inline Matrix all_entries(int n, double value) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = value;
  return m;
}

/// Worked scalable triple (0,1), (-s3,-1), (s3/2,-1/2); scalars^2 = (2/3, 1/6, 2/3).
inline Matrix scalable_triple() {
  const double s3 = std::sqrt(3.0);
  return Matrix(2, 3, {0.0, -s3, s3 / 2.0, 1.0, -1.0, -0.5});
}

/// Non-scalable triple (1,0), (0,1), (1,1): the off-diagonal equation forces
/// the third scalar to zero.
inline Matrix unscalable_triple() { return Matrix(2, 3, {1.0, 0.0, 1.0, 0.0, 1.0, 1.0}); }

}  // namespace naimark::testing
