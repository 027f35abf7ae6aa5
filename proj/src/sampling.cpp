#include "naimark/sampling.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace naimark {

uint64_t mix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

uint64_t stream_seed(uint64_t seed, uint64_t index) { return mix64(seed + mix64(index)); }

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] keeps the logarithm finite.
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

Matrix gaussian_matrix(int rows, int cols, Rng& rng) {
  Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng.gaussian();
  return m;
}

Matrix random_orthogonal(int n, Rng& rng) {
  Matrix q(n, n);
  for (int i = 0; i < n; ++i) {
    while (true) {
      std::vector<double> r(n);
      for (double& x : r) x = rng.gaussian();
      for (int pass = 0; pass < 2; ++pass) {
        for (int b = 0; b < i; ++b) {
          double dot = 0.0;
          for (int k = 0; k < n; ++k) dot += r[k] * q(b, k);
          for (int k = 0; k < n; ++k) r[k] -= dot * q(b, k);
        }
      }
      double norm = 0.0;
      for (double x : r) norm += x * x;
      norm = std::sqrt(norm);
      if (norm < 1e-8) continue;  // degenerate draw, take the next one
      for (int k = 0; k < n; ++k) q(i, k) = r[k] / norm;
      break;
    }
  }
  return q;
}

Frame sample_parseval_frame(int d, int n, Rng& rng) {
  if (!(n > d && d >= 1)) {
    throw Error(ErrorCode::InvalidShape, "Parseval sampler needs n > d >= 1, got d=" +
                                             std::to_string(d) + " n=" + std::to_string(n));
  }
  while (true) {
    const Matrix f0 = gaussian_matrix(d, n, rng);
    Matrix s(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) s(i, j) = row_dot(f0, i, f0, j);
    const SpectralDecomposition spec = sym_eig(s);
    if (spec.lambda_min() <= 1e-12 * std::max(spec.lambda_max(), 1.0)) continue;

    // (F0 F0^T)^(-1/2) from the spectral decomposition.
    Matrix whitener(d, d);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) {
        double sum = 0.0;
        for (int k = 0; k < d; ++k) {
          sum += spec.eigenvectors(i, k) * spec.eigenvectors(j, k) /
                 std::sqrt(spec.eigenvalues[k]);
        }
        whitener(i, j) = sum;
      }
    }
    return Frame::from_synthesis(whitener * f0);
  }
}

Frame sample_frame(int d, int n, Rng& rng) {
  if (!(n > d && d >= 1)) {
    throw Error(ErrorCode::InvalidShape, "frame sampler needs n > d >= 1");
  }
  while (true) {
    Matrix f = gaussian_matrix(d, n, rng);
    const auto [a, b] = frame_bounds(f);
    if (a > 1e-6 * std::max(b, 1.0)) return Frame::from_synthesis(std::move(f));
  }
}

PsdMember sample_psd_member(int n, int d, Rng& rng) {
  if (!(n > d && d >= 1)) {
    throw Error(ErrorCode::InvalidShape, "S(n) sampler needs n > d >= 1");
  }
  while (true) {
    const Matrix f = gaussian_matrix(d, n, rng);
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double dot = 0.0;
        for (int k = 0; k < d; ++k) dot += f(k, i) * f(k, j);
        g(i, j) = dot;
      }
    }
    PsdMember member = PsdMember::from_matrix(std::move(g));
    if (member.rank() != d) continue;
    if (member.lambda(d) <= 1e-6) continue;
    return member;
  }
}

ProjectionMember sample_projection(int n, int d, Rng& rng) {
  const Frame f = sample_parseval_frame(d, n, rng);
  return gram_projection(f);
}

PsdMember perturb_same_stratum(const PsdMember& a, Rng& rng, double eta_factor) {
  const int d = a.rank();
  const int n = a.size();
  const Frame factor = synthesize(a);
  const double lambda_d = a.lambda(d);
  for (int attempt = 0; attempt < 100; ++attempt) {
    // Floor keeps the pair resolvable by the cosine-based principal angles.
    const double eta = eta_factor * std::sqrt(lambda_d) * (0.01 + 0.99 * rng.uniform());
    const Matrix delta = gaussian_matrix(d, n, rng);
    Matrix g(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double dot = 0.0;
        for (int k = 0; k < d; ++k) {
          dot += (factor.synthesis()(k, i) + eta * delta(k, i)) *
                 (factor.synthesis()(k, j) + eta * delta(k, j));
        }
        g(i, j) = dot;
      }
    }
    PsdMember b = PsdMember::from_matrix(std::move(g));
    if (b.rank() == d && b.lambda(d) > 1e-8) return b;
  }
  throw Error(ErrorCode::NonConvergence, "same-stratum perturbation kept collapsing rank");
}

Frame sample_scalable_frame(int d, int n, Rng& rng) {
  const Frame parseval = sample_parseval_frame(d, n, rng);
  Matrix f = parseval.synthesis();
  for (int j = 0; j < n; ++j) {
    const double c = 0.5 + 1.5 * rng.uniform();
    for (int i = 0; i < d; ++i) f(i, j) /= c;
  }
  return Frame::from_synthesis(std::move(f));
}

}  // namespace naimark
