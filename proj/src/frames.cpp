#include "naimark/frames.hpp"

#include <cmath>
#include <string>

#include "naimark/simplex.hpp"

namespace naimark {

namespace {

Matrix frame_operator(const Matrix& f) {
  Matrix s(f.rows(), f.rows());
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.rows(); ++j) s(i, j) = row_dot(f, i, f, j);
  return s;
}

Matrix gram_matrix(const Matrix& f) {
  Matrix g(f.cols(), f.cols());
  for (int i = 0; i < f.cols(); ++i) {
    for (int j = 0; j < f.cols(); ++j) {
      double dot = 0.0;
      for (int k = 0; k < f.rows(); ++k) dot += f(k, i) * f(k, j);
      g(i, j) = dot;
    }
  }
  return g;
}

double parseval_residual(const Matrix& f) {
  return frobenius_distance(frame_operator(f), Matrix::identity(f.rows()));
}

}  // namespace

Frame Frame::from_synthesis(Matrix f, double tol) {
  if (f.rows() < 1 || f.cols() <= f.rows()) {
    throw Error(ErrorCode::InvalidShape, "frame needs n > d >= 1, got " +
                                             std::to_string(f.rows()) + "x" +
                                             std::to_string(f.cols()));
  }
  const SpectralDecomposition s = sym_eig(frame_operator(f));
  if (numerical_rank(s, tol) < f.rows()) {
    throw Error(ErrorCode::NotSpanning,
                "lower frame bound " + std::to_string(s.lambda_min()) +
                    " below tolerance; columns do not span");
  }
  const std::pair<double, double> bounds{s.lambda_min(), s.lambda_max()};
  return Frame(std::move(f), bounds);
}

std::pair<double, double> frame_bounds(const Matrix& f) {
  if (f.rows() < 1 || f.cols() <= f.rows()) {
    throw Error(ErrorCode::InvalidShape, "frame bounds need n > d >= 1");
  }
  const SpectralDecomposition s = sym_eig(frame_operator(f));
  return {s.lambda_min(), s.lambda_max()};
}

bool is_parseval(const Matrix& f, double tol) { return parseval_residual(f) <= tol; }

bool is_parseval(const Frame& f, double tol) { return is_parseval(f.synthesis(), tol); }

bool is_tight(const Frame& f, double tol) {
  return f.upper_bound() - f.lower_bound() <= tol * std::max(f.upper_bound(), 1.0);
}

PsdMember gram(const Frame& f, double tol) {
  return PsdMember::from_matrix(gram_matrix(f.synthesis()), tol);
}

ProjectionMember gram_projection(const Frame& f, double tol) {
  if (!is_parseval(f, tol)) {
    throw Error(ErrorCode::NotParseval,
                "||F F^T - I||_F = " + std::to_string(parseval_residual(f.synthesis())) +
                    " exceeds " + std::to_string(tol));
  }
  return ProjectionMember::from_matrix(gram_matrix(f.synthesis()));
}

Frame synthesize(const PsdMember& g) {
  const int rank = g.rank();
  if (rank == 0) throw Error(ErrorCode::RankZero, "cannot synthesize a zero Gram matrix");
  Matrix f(rank, g.size());
  for (int i = 0; i < rank; ++i) {
    const double scale = std::sqrt(g.spectrum().eigenvalues[i]);
    for (int j = 0; j < g.size(); ++j) f(i, j) = scale * g.spectrum().eigenvectors(j, i);
  }
  return Frame::from_synthesis(std::move(f));
}

Frame naimark_complement_parseval(const Frame& f, double tol) {
  if (!is_parseval(f, tol)) {
    throw Error(ErrorCode::NotParseval,
                "||F F^T - I||_F = " + std::to_string(parseval_residual(f.synthesis())) +
                    " exceeds " + std::to_string(tol));
  }
  return Frame::from_synthesis(orthonormal_completion(f.synthesis(), tol));
}

ProjectionMember naimark_gram(const ProjectionMember& p) {
  const int n = p.size();
  Matrix c(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c(i, j) = (i == j) ? 1.0 - p.mat()(i, j) : -p.mat()(i, j);
    }
  }
  return ProjectionMember::from_matrix(std::move(c));
}

std::optional<ScalingSolution> scalability_solve(const Frame& f, double positivity_tol) {
  const int d = f.dim();
  const int n = f.count();
  const Matrix& v = f.synthesis();

  // Variables: s_1..s_n, t, w_1..w_n (surplus of s_i - t >= 0).
  const int vars = 2 * n + 1;
  const int eq_rows = d * (d + 1) / 2;
  const int rows = eq_rows + n;
  Matrix a(rows, vars);
  std::vector<double> b(rows, 0.0);
  std::vector<double> c(vars, 0.0);
  c[n] = -1.0;  // maximize t

  int r = 0;
  for (int j = 0; j < d; ++j) {
    for (int k = j; k < d; ++k) {
      for (int i = 0; i < n; ++i) a(r, i) = v(j, i) * v(k, i);
      b[r] = (j == k) ? 1.0 : 0.0;
      ++r;
    }
  }
  for (int i = 0; i < n; ++i) {
    a(r, i) = 1.0;
    a(r, n) = -1.0;
    a(r, n + 1 + i) = -1.0;
    ++r;
  }

  const LpResult lp = solve_lp({std::move(a), std::move(b), std::move(c)});
  if (lp.status == LpStatus::Infeasible) return std::nullopt;
  if (lp.status == LpStatus::Unbounded) {
    throw Error(ErrorCode::LpNumericalFailure, "scalability LP reported unbounded");
  }

  double margin = lp.x[0];
  for (int i = 1; i < n; ++i) margin = std::min(margin, lp.x[i]);
  if (margin <= positivity_tol) return std::nullopt;

  Matrix sum(d, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) sum(j, k) += lp.x[i] * v(j, i) * v(k, i);

  ScalingSolution solution;
  solution.scalars.reserve(n);
  for (int i = 0; i < n; ++i) solution.scalars.push_back(std::sqrt(lp.x[i]));
  solution.margin = margin;
  solution.residual = frobenius_distance(sum, Matrix::identity(d));
  return solution;
}

ScalableExtension scalable_extension(const Frame& f) {
  const auto solution = scalability_solve(f);
  if (!solution) {
    throw Error(ErrorCode::NotScalable, "scalability LP infeasible or margin not positive");
  }
  return scalable_extension(f, solution->scalars);
}

ScalableExtension scalable_extension(const Frame& f, const std::vector<double>& scalars,
                                     double tol) {
  const int n = f.count();
  if (static_cast<int>(scalars.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "expected one scalar per frame vector");
  }
  for (double c : scalars) {
    if (!(c > 0.0)) throw Error(ErrorCode::InvalidArgument, "scalars must be positive");
  }
  Matrix scaled = f.synthesis();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < f.dim(); ++i) scaled(i, j) *= scalars[j];
  if (!is_parseval(scaled, tol)) {
    throw Error(ErrorCode::NotScalable,
                "scalars do not produce a Parseval frame (residual " +
                    std::to_string(parseval_residual(scaled)) + ")");
  }
  Matrix complement = orthonormal_completion(scaled, tol);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < complement.rows(); ++i) complement(i, j) /= scalars[j];
  return ScalableExtension{Frame::from_synthesis(std::move(complement)), scalars};
}

}  // namespace naimark
