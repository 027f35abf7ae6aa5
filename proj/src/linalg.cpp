#include "naimark/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace naimark {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return std::sqrt(sum);
}

// First coordinate with magnitude above the pivot threshold is made positive.
void apply_sign_convention(Matrix& v, int col) {
  for (int i = 0; i < v.rows(); ++i) {
    const double x = v(i, col);
    if (std::fabs(x) > kSignPivotMin) {
      if (x < 0.0)
        for (int k = 0; k < v.rows(); ++k) v(k, col) = -v(k, col);
      return;
    }
  }
}

void apply_sign_convention_row(std::vector<double>& row) {
  for (double x : row) {
    if (std::fabs(x) > kSignPivotMin) {
      if (x < 0.0)
        for (double& e : row) e = -e;
      return;
    }
  }
}

double rank_threshold(double lambda_max, double tol) {
  return tol * std::max(lambda_max, 1.0);
}

}  // namespace

SpectralDecomposition sym_eig(const Matrix& s) {
  if (!s.is_square()) {
    throw Error(ErrorCode::NonSquare, "sym_eig requires a square matrix, got " +
                                          std::to_string(s.rows()) + "x" +
                                          std::to_string(s.cols()));
  }
  const int n = s.rows();
  const double norm = s.frobenius_norm();

  double asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) asym += (s(i, j) - s(j, i)) * (s(i, j) - s(j, i));
  asym = std::sqrt(2.0 * asym);
  if (asym > 1e-8 * std::max(1.0, norm)) {
    throw Error(ErrorCode::NonSymmetric,
                "asymmetry ||S - S^T||_F = " + std::to_string(asym) + " exceeds tolerance");
  }

  // Work on the symmetrized copy so rounding asymmetry cannot bias rotations.
  Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (s(i, j) + s(j, i));
  Matrix v = Matrix::identity(n);

  const double target = kJacobiOffFactor * norm;
  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        // Smaller-magnitude root of t^2 + 2 tau t - 1 = 0.
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * c;

        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(p, k) = a(k, p);
          a(k, q) = sn * akp + c * akq;
          a(q, k) = a(k, q);
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(a) > target) {
    throw Error(ErrorCode::NonConvergence,
                "Jacobi sweep cap of " + std::to_string(kJacobiMaxSweeps) + " exceeded");
  }

  for (int j = 0; j < n; ++j) apply_sign_convention(v, j);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    if (a(i, i) != a(j, j)) return a(i, i) > a(j, j);
    // Exact ties: lexicographic entry order of the sign-fixed eigenvectors.
    for (int k = 0; k < n; ++k) {
      if (v(k, i) != v(k, j)) return v(k, i) < v(k, j);
    }
    return false;
  });

  SpectralDecomposition result{std::vector<double>(n), Matrix(n, n)};
  for (int j = 0; j < n; ++j) {
    result.eigenvalues[j] = a(order[j], order[j]);
    for (int k = 0; k < n; ++k) result.eigenvectors(k, j) = v(k, order[j]);
  }
  return result;
}

int numerical_rank(const SpectralDecomposition& spectrum, double tol) {
  const double thr = rank_threshold(spectrum.eigenvalues.front(), tol);
  int rank = 0;
  for (double lambda : spectrum.eigenvalues)
    if (lambda > thr) ++rank;
  return rank;
}

int numerical_rank(const Matrix& s, double tol) { return numerical_rank(sym_eig(s), tol); }

std::vector<double> singular_values(const Matrix& a) {
  const int m = a.rows();
  const int n = a.cols();
  Matrix b = a;
  // Columns driven down to rounding noise would keep rotating on garbage
  // angles; anything below this norm is treated as an exact zero.
  const double deflate = 1e-14 * b.frobenius_norm();
  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
    converged = true;
    for (int i = 0; i < n - 1; ++i) {
      for (int j = i + 1; j < n; ++j) {
        double alpha = 0.0, beta = 0.0, gamma = 0.0;
        for (int k = 0; k < m; ++k) {
          alpha += b(k, i) * b(k, i);
          beta += b(k, j) * b(k, j);
          gamma += b(k, i) * b(k, j);
        }
        if (alpha <= deflate * deflate || beta <= deflate * deflate) continue;
        // Columns count as orthogonal at |cos| <= 1e-15, the rounding floor.
        if (gamma == 0.0 || gamma * gamma <= 1e-30 * alpha * beta) continue;
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = (zeta >= 0.0) ? 1.0 / (zeta + std::sqrt(1.0 + zeta * zeta))
                                       : 1.0 / (zeta - std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (int k = 0; k < m; ++k) {
          const double u = b(k, i);
          const double v = b(k, j);
          b(k, i) = c * u - s * v;
          b(k, j) = s * u + c * v;
        }
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NonConvergence, "one-sided Jacobi sweep cap exceeded");
  }
  std::vector<double> sigma(n);
  for (int j = 0; j < n; ++j) {
    double sum = 0.0;
    for (int k = 0; k < m; ++k) sum += b(k, j) * b(k, j);
    sigma[j] = std::sqrt(sum);
  }
  std::sort(sigma.begin(), sigma.end(), std::greater<>());
  return sigma;
}

double snap_to_complement_grid(double x) {
  constexpr double kGrid = 9007199254740992.0;  // 2^53
  return std::nearbyint(x * kGrid) * (1.0 / kGrid);
}

PsdMember PsdMember::from_matrix(Matrix m, double tol) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NonSquare, "S(n) member must be square");
  }
  double asym = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      asym += (m(i, j) - m(j, i)) * (m(i, j) - m(j, i));
  asym = std::sqrt(2.0 * asym);
  if (asym > 1e-10) {
    throw Error(ErrorCode::NonSymmetric,
                "||A - A^T||_F = " + std::to_string(asym) + " exceeds 1e-10");
  }

  SpectralDecomposition spectrum = sym_eig(m);
  for (double& lambda : spectrum.eigenvalues) {
    if (lambda < -1e-10) {
      throw Error(ErrorCode::NotPsd, "eigenvalue " + std::to_string(lambda) + " below -1e-10");
    }
    if (lambda < 0.0) lambda = 0.0;
  }
  const int rank = numerical_rank(spectrum, tol);
  if (rank == 0) throw Error(ErrorCode::ZeroMatrix, "S(n) excludes the zero matrix");
  if (rank == m.rows()) {
    throw Error(ErrorCode::FullRank, "S(n) excludes full-rank matrices (rank " +
                                         std::to_string(rank) + " of " +
                                         std::to_string(m.rows()) + ")");
  }
  return PsdMember(std::move(m), std::move(spectrum), rank);
}

ProjectionMember ProjectionMember::from_matrix(Matrix m, double tol) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NonSquare, "P(n) member must be square");
  }
  const int n = m.rows();
  for (int i = 0; i < n; ++i) m(i, i) = snap_to_complement_grid(m(i, i));

  double asym = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) asym += (m(i, j) - m(j, i)) * (m(i, j) - m(j, i));
  asym = std::sqrt(2.0 * asym);
  if (asym > 1e-10) {
    throw Error(ErrorCode::NonSymmetric,
                "||P - P^T||_F = " + std::to_string(asym) + " exceeds 1e-10");
  }

  const double idem = frobenius_distance(m * m, m);
  if (idem > 1e-9) {
    throw Error(ErrorCode::NotProjection,
                "||P^2 - P||_F = " + std::to_string(idem) + " exceeds 1e-9");
  }

  SpectralDecomposition spectrum = sym_eig(m);
  int rank = 0;
  for (double lambda : spectrum.eigenvalues) {
    if (std::fabs(lambda) > 1e-9 && std::fabs(lambda - 1.0) > 1e-9) {
      throw Error(ErrorCode::NotProjection,
                  "eigenvalue " + std::to_string(lambda) + " is not 0/1 within 1e-9");
    }
    if (lambda > 0.5) ++rank;
  }
  if (rank == 0) throw Error(ErrorCode::ZeroMatrix, "P(n) excludes the zero projection");
  if (rank == n) throw Error(ErrorCode::FullRank, "P(n) excludes the identity");
  (void)tol;
  return ProjectionMember(std::move(m), std::move(spectrum), rank);
}

Matrix ProjectionMember::range_basis() const {
  Matrix q(size(), rank_);
  for (int j = 0; j < rank_; ++j)
    for (int i = 0; i < size(); ++i) q(i, j) = spectrum_.eigenvectors(i, j);
  return q;
}

Matrix ProjectionMember::kernel_basis() const {
  const int k = size() - rank_;
  Matrix q(size(), k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < size(); ++i) q(i, j) = spectrum_.eigenvectors(i, rank_ + j);
  return q;
}

Matrix kernel_basis(const SpectralDecomposition& spectrum, double tol) {
  const int n = spectrum.eigenvectors.rows();
  const double thr = tol * std::max(spectrum.eigenvalues.front(), 1.0);
  std::vector<int> cols;
  for (int j = 0; j < n; ++j)
    if (spectrum.eigenvalues[j] <= thr) cols.push_back(j);
  if (cols.empty()) {
    throw Error(ErrorCode::FullRank, "kernel is trivial at this tolerance");
  }
  Matrix q(n, static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < n; ++i) q(i, static_cast<int>(j)) = spectrum.eigenvectors(i, cols[j]);
  return q;
}

ProjectionMember kernel_projection(const SpectralDecomposition& spectrum, double tol) {
  if (numerical_rank(spectrum, tol) == 0) {
    throw Error(ErrorCode::ZeroMatrix, "kernel projection of the zero matrix is the identity");
  }
  const Matrix q = kernel_basis(spectrum, tol);
  return ProjectionMember::from_matrix(q * q.transposed(), tol);
}

ProjectionMember kernel_projection(const Matrix& a, double tol) {
  return kernel_projection(sym_eig(a), tol);
}

Matrix orthonormal_completion(const Matrix& f, double tol) {
  const int d = f.rows();
  const int n = f.cols();
  if (d >= n) {
    throw Error(ErrorCode::NoRoomToComplete,
                "need d < n, got " + std::to_string(d) + "x" + std::to_string(n));
  }
  Matrix gram(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) gram(i, j) = row_dot(f, i, f, j);
  const double row_err = frobenius_distance(gram, Matrix::identity(d));
  if (row_err > tol) {
    throw Error(ErrorCode::RowsNotOrthonormal,
                "||F F^T - I||_F = " + std::to_string(row_err) + " exceeds tolerance");
  }

  // Accumulated orthonormal rows: the d given ones plus each accepted residual.
  Matrix basis(n, n);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) basis(i, j) = f(i, j);
  int have = d;

  Matrix result(n - d, n);
  int produced = 0;
  for (int cand = 0; cand < n && produced < n - d; ++cand) {
    std::vector<double> r(n, 0.0);
    r[cand] = 1.0;
    // Two projection passes keep the residual orthogonal to working precision.
    for (int pass = 0; pass < 2; ++pass) {
      for (int b = 0; b < have; ++b) {
        double dot = 0.0;
        for (int k = 0; k < n; ++k) dot += r[k] * basis(b, k);
        for (int k = 0; k < n; ++k) r[k] -= dot * basis(b, k);
      }
    }
    double norm = 0.0;
    for (double x : r) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < kCompletionResidualMin) continue;  // near-dependent candidate
    for (double& x : r) x /= norm;
    apply_sign_convention_row(r);
    for (int k = 0; k < n; ++k) {
      basis(have, k) = r[k];
      result(produced, k) = r[k];
    }
    ++have;
    ++produced;
  }
  if (produced != n - d) {
    throw Error(ErrorCode::NonConvergence,
                "completion found only " + std::to_string(produced) + " of " +
                    std::to_string(n - d) + " rows");
  }
  return result;
}

std::vector<double> principal_angle_sines(const Matrix& q1, const Matrix& q2, double tol) {
  if (!q1.same_shape(q2)) {
    throw Error(ErrorCode::ShapeMismatch, "principal angles need equal shapes");
  }
  for (const Matrix* q : {&q1, &q2}) {
    const Matrix g = q->transposed() * (*q);
    const double err = frobenius_distance(g, Matrix::identity(q->cols()));
    if (err > tol) {
      throw Error(ErrorCode::NonOrthonormalColumns,
                  "||Q^T Q - I||_F = " + std::to_string(err) + " exceeds tolerance");
    }
  }
  const Matrix m = q1.transposed() * q2;
  const SpectralDecomposition s = sym_eig(m.transposed() * m);
  // Eigenvalues are the squared cosines, sorted non-increasing, so the sines
  // come out non-decreasing. 1 - lambda carries O(eps) eigenvalue noise;
  // anything below 1e-13 is rounding residue of a zero angle.
  std::vector<double> sines;
  sines.reserve(s.eigenvalues.size());
  for (double lambda : s.eigenvalues) {
    double value = std::clamp(1.0 - lambda, 0.0, 1.0);
    if (value < 1e-13) value = 0.0;
    sines.push_back(std::sqrt(value));
  }
  return sines;
}

}  // namespace naimark
