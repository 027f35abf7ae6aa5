#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "naimark/linalg.hpp"

namespace naimark {

/// Frame of n column vectors spanning d-space, n > d >= 1, with the optimal
/// frame bounds (a, b) = (lambda_min, lambda_max) of F F^T cached.
class Frame {
 public:
  static Frame from_synthesis(Matrix f, double tol = kDefaultRankTol);

  int dim() const { return synthesis_.rows(); }
  int count() const { return synthesis_.cols(); }
  const Matrix& synthesis() const { return synthesis_; }
  double lower_bound() const { return bounds_.first; }
  double upper_bound() const { return bounds_.second; }
  std::pair<double, double> bounds() const { return bounds_; }

 private:
  Frame(Matrix f, std::pair<double, double> bounds)
      : synthesis_(std::move(f)), bounds_(bounds) {}

  Matrix synthesis_;
  std::pair<double, double> bounds_;
};

/// Optimal frame bounds (lambda_min, lambda_max) of F F^T for a d x n matrix
/// with d < n. The matrix is a frame iff the lower bound clears the rank
/// tolerance; a non-spanning input still gets its bounds reported.
std::pair<double, double> frame_bounds(const Matrix& f);

/// True iff ||F F^T - I||_F <= tol.
bool is_parseval(const Matrix& f, double tol = 1e-9);
bool is_parseval(const Frame& f, double tol = 1e-9);

/// True iff the optimal bounds agree: b - a <= tol * max(b, 1).
bool is_tight(const Frame& f, double tol = 1e-9);

/// Gram matrix F^T F as a member of S(n).
PsdMember gram(const Frame& f, double tol = kDefaultRankTol);

/// Gram matrix of a Parseval frame as a member of P(n).
ProjectionMember gram_projection(const Frame& f, double tol = 1e-9);

/// Spectral factor of G: the rank(G) x n frame with rows sqrt(lambda_i) v_i^T,
/// ordered by decreasing eigenvalue. Satisfies ||F^T F - G||_F <= 1e-9.
Frame synthesize(const PsdMember& g);

/// Naimark complement of a Parseval frame via orthonormal completion of its
/// synthesis rows: a Parseval frame of n vectors in (n-d)-space whose Gram is
/// I - F^T F.
Frame naimark_complement_parseval(const Frame& f, double tol = 1e-9);

/// Gram-picture Naimark complement: P maps to I - P. Entrywise subtraction;
/// exactly involutive on ProjectionMember values.
ProjectionMember naimark_gram(const ProjectionMember& p);

/// Positive scalars making (c_i v_i) Parseval, from the LP
///   maximize t  s.t.  sum_i s_i v_i v_i^T = I,  s_i >= t >= 0,
/// solved by the deterministic Bland-rule simplex; c_i = sqrt(s_i).
struct ScalingSolution {
  std::vector<double> scalars;  // c_i > 0
  double margin;                // min c_i^2 at the LP optimum
  double residual;              // ||sum s_i v_i v_i^T - I||_F
};

/// Empty result means the frame is not positively scalable: either the
/// equality system has no nonnegative solution or the optimal margin does not
/// clear the strict-positivity threshold.
std::optional<ScalingSolution> scalability_solve(const Frame& f,
                                                 double positivity_tol = 1e-8);

/// Scalable-frame extension: scale to Parseval with scalars c, take the
/// Naimark complement, un-scale column i by 1/c_i. Applying the construction
/// again with the same scalars reproduces the input Gram matrix.
struct ScalableExtension {
  Frame complement;
  std::vector<double> scalars;
};

ScalableExtension scalable_extension(const Frame& f);
ScalableExtension scalable_extension(const Frame& f, const std::vector<double>& scalars,
                                     double tol = 1e-9);

}  // namespace naimark
