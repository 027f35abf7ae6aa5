#pragma once

#include <utility>
#include <vector>

#include "naimark/matrix.hpp"

namespace naimark {

// Default tolerances. Rank decisions are relative to max(lambda_max, 1); the
// remaining thresholds are the fixed constants used throughout the library.
inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr double kJacobiOffFactor = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kSignPivotMin = 1e-8;
inline constexpr double kCompletionResidualMin = 1e-8;

/// Eigendecomposition of a symmetric matrix. Eigenvalues are sorted
/// non-increasing; the columns of `eigenvectors` are the matching orthonormal
/// eigenvectors. Output is bit-reproducible: the first coordinate of each
/// eigenvector larger than 1e-8 in magnitude is made positive, and exact
/// eigenvalue ties are ordered by lexicographic eigenvector comparison.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  double lambda_max() const { return eigenvalues.front(); }
  double lambda_min() const { return eigenvalues.back(); }
};

/// Cyclic Jacobi eigendecomposition. Sweeps rotate every off-diagonal pair in
/// fixed row-major order until the off-diagonal Frobenius mass drops below
/// 1e-12 * ||S||_F, capped at 100 sweeps.
SpectralDecomposition sym_eig(const Matrix& s);

/// Number of eigenvalues strictly above tol * max(lambda_max, 1).
int numerical_rank(const Matrix& s, double tol = kDefaultRankTol);
int numerical_rank(const SpectralDecomposition& spectrum, double tol = kDefaultRankTol);

/// Singular values of an arbitrary matrix, non-increasing. One-sided Jacobi
/// on the columns, so small singular values are resolved to eps * sigma_max
/// accuracy rather than the sqrt(eps) floor of the Gram-eigenvalue route.
std::vector<double> singular_values(const Matrix& a);

/// Rounds x to the nearest multiple of 2^-53. Values on that grid have an
/// exactly representable complement: 1 - x incurs no rounding, so repeated
/// complementation restores the original bits.
double snap_to_complement_grid(double x);

class ProjectionMember;

/// Element of S(n): symmetric positive-semidefinite, nonzero, rank-deficient.
/// Carries its spectral decomposition (negative eigenvalues above -1e-10 are
/// clamped to zero) and numerical rank.
class PsdMember {
 public:
  static PsdMember from_matrix(Matrix m, double tol = kDefaultRankTol);

  int size() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  int rank() const { return rank_; }
  double lambda_max() const { return spectrum_.eigenvalues.front(); }
  /// d-th largest eigenvalue (1-indexed by rank position).
  double lambda(int i) const { return spectrum_.eigenvalues.at(i - 1); }

 private:
  PsdMember(Matrix m, SpectralDecomposition s, int rank)
      : mat_(std::move(m)), spectrum_(std::move(s)), rank_(rank) {}

  Matrix mat_;
  SpectralDecomposition spectrum_;
  int rank_;
};

/// Element of P(n): orthogonal projection of rank 1..n-1. Diagonal entries are
/// normalized onto the 2^-53 grid so that entrywise complementation I - P is
/// exact arithmetic and N(N(P)) == P holds bitwise.
class ProjectionMember {
 public:
  static ProjectionMember from_matrix(Matrix m, double tol = kDefaultRankTol);

  int size() const { return mat_.rows(); }
  const Matrix& mat() const { return mat_; }
  const SpectralDecomposition& spectrum() const { return spectrum_; }
  int rank() const { return rank_; }

  /// Orthonormal basis of the range (columns, n x rank).
  Matrix range_basis() const;
  /// Orthonormal basis of the kernel (columns, n x (n - rank)).
  Matrix kernel_basis() const;

 private:
  ProjectionMember(Matrix m, SpectralDecomposition s, int rank)
      : mat_(std::move(m)), spectrum_(std::move(s)), rank_(rank) {}

  Matrix mat_;
  SpectralDecomposition spectrum_;
  int rank_;
};

/// Orthogonal projection onto the kernel of a symmetric PSD matrix: Q Q^T over
/// the eigenvectors with eigenvalue at most tol * max(lambda_max, 1).
ProjectionMember kernel_projection(const Matrix& a, double tol = kDefaultRankTol);
ProjectionMember kernel_projection(const SpectralDecomposition& spectrum,
                                   double tol = kDefaultRankTol);

/// Orthonormal basis (columns) of the kernel subspace selected by the rank
/// tolerance, n x (n - rank).
Matrix kernel_basis(const SpectralDecomposition& spectrum, double tol = kDefaultRankTol);

/// Completes a d x n matrix with orthonormal rows to an orthogonal matrix,
/// returning the missing (n-d) x n block. Deterministic: Gram-Schmidt over the
/// standard basis vectors in index order, skipping candidates whose residual
/// norm falls below 1e-8, with the eigenvector sign convention applied to each
/// accepted row.
Matrix orthonormal_completion(const Matrix& f, double tol = 1e-9);

/// Sines of the principal angles between the column spans of two orthonormal
/// matrices of equal shape, non-decreasing, clamped to [0, 1].
std::vector<double> principal_angle_sines(const Matrix& q1, const Matrix& q2,
                                          double tol = 1e-8);

}  // namespace naimark
