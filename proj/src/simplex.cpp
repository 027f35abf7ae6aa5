#include "naimark/simplex.hpp"

#include <cmath>
#include <string>

namespace naimark {

namespace {

constexpr int kMaxPivots = 100000;

// Tableau over k original columns plus m artificial columns. Cost vectors
// span all k + m columns; only original columns may enter the basis.
class Tableau {
 public:
  explicit Tableau(const LpProblem& p) : m_(p.a.rows()), k_(p.a.cols()) {
    if (static_cast<int>(p.b.size()) != m_ || static_cast<int>(p.c.size()) != k_) {
      throw Error(ErrorCode::ShapeMismatch, "LP dimensions disagree");
    }
    body_.assign(m_, std::vector<double>(k_ + m_ + 1, 0.0));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const double sign = p.b[i] < 0.0 ? -1.0 : 1.0;
      for (int j = 0; j < k_; ++j) body_[i][j] = sign * p.a(i, j);
      body_[i][k_ + i] = 1.0;
      body_[i][k_ + m_] = sign * p.b[i];
      basis_[i] = k_ + i;
    }
  }

  int originals() const { return k_; }
  int artificials() const { return m_; }

  /// Bland-rule pivoting until optimal; returns false on unboundedness.
  bool iterate(const std::vector<double>& cost, double eps) {
    for (int pivots = 0; pivots < kMaxPivots; ++pivots) {
      const int enter = entering_column(cost, eps);
      if (enter < 0) return true;
      const int leave = leaving_row(enter, eps);
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    throw Error(ErrorCode::LpNumericalFailure, "pivot cap exceeded");
  }

  double objective(const std::vector<double>& cost) const {
    double obj = 0.0;
    for (int i = 0; i < m_; ++i) obj += cost[basis_[i]] * body_[i].back();
    return obj;
  }

  /// Pivots still-basic artificials onto original columns where possible;
  /// rows with no eligible pivot are redundant and keep their artificial at
  /// level zero.
  void expel_artificials(double eps) {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < k_) continue;
      for (int j = 0; j < k_; ++j) {
        if (in_basis(j)) continue;
        if (std::fabs(body_[i][j]) > eps) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  std::vector<double> solution() const {
    std::vector<double> x(k_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < k_) x[basis_[i]] = body_[i].back();
    }
    return x;
  }

 private:
  int entering_column(const std::vector<double>& cost, double eps) const {
    for (int j = 0; j < k_; ++j) {
      if (in_basis(j)) continue;
      double reduced = cost[j];
      for (int i = 0; i < m_; ++i) reduced -= cost[basis_[i]] * body_[i][j];
      if (reduced < -eps) return j;
    }
    return -1;
  }

  int leaving_row(int enter, double eps) const {
    int row = -1;
    double best = 0.0;
    for (int i = 0; i < m_; ++i) {
      const double a = body_[i][enter];
      if (a <= eps) continue;
      const double ratio = body_[i].back() / a;
      if (row < 0 || ratio < best - eps ||
          (ratio <= best + eps && basis_[i] < basis_[row])) {
        row = i;
        best = ratio;
      }
    }
    return row;
  }

  bool in_basis(int j) const {
    for (int b : basis_)
      if (b == j) return true;
    return false;
  }

  void pivot(int row, int col) {
    std::vector<double>& pr = body_[row];
    const double inv = 1.0 / pr[col];
    for (double& e : pr) e *= inv;
    pr[col] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      const double factor = body_[i][col];
      if (factor == 0.0) continue;
      for (size_t j = 0; j < pr.size(); ++j) body_[i][j] -= factor * pr[j];
      body_[i][col] = 0.0;
    }
    basis_[row] = col;
  }

  int m_;
  int k_;
  std::vector<std::vector<double>> body_;
  std::vector<int> basis_;
};

}  // namespace

LpResult solve_lp(const LpProblem& problem, double eps) {
  Tableau tableau(problem);
  const int k = tableau.originals();
  const int m = tableau.artificials();

  std::vector<double> phase1(k + m, 0.0);
  for (int j = k; j < k + m; ++j) phase1[j] = 1.0;
  if (!tableau.iterate(phase1, eps)) {
    throw Error(ErrorCode::LpNumericalFailure, "phase 1 reported unbounded");
  }
  if (tableau.objective(phase1) > 1e-8) {
    return LpResult{LpStatus::Infeasible, {}, 0.0};
  }
  tableau.expel_artificials(eps);

  std::vector<double> phase2(k + m, 0.0);
  for (int j = 0; j < k; ++j) phase2[j] = problem.c[j];
  if (!tableau.iterate(phase2, eps)) {
    return LpResult{LpStatus::Unbounded, {}, 0.0};
  }
  LpResult result{LpStatus::Optimal, tableau.solution(), 0.0};
  for (int j = 0; j < k; ++j) result.objective += problem.c[j] * result.x[j];
  return result;
}

}  // namespace naimark
