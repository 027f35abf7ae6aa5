#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "naimark/frames.hpp"
#include "naimark/linalg.hpp"

namespace naimark {

/// Generator identifier embedded in reports so reproducibility claims name
/// the algorithm: raw stream from std::mt19937_64, Gaussians via Box-Muller
/// on 53-bit uniforms, per-trial streams derived with the splitmix64 mixer.
inline constexpr const char* kRngId = "mt19937_64-boxmuller";

/// splitmix64 finalizer.
uint64_t mix64(uint64_t z);

/// Independent stream seed for trial `index` under a run seed.
uint64_t stream_seed(uint64_t seed, uint64_t index);

class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1), 53 significant bits.
  double uniform();

  /// Standard normal (Box-Muller; the paired deviate is cached).
  double gaussian();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

Matrix gaussian_matrix(int rows, int cols, Rng& rng);

/// Orthogonal matrix with rows drawn Gaussian then orthonormalized in order.
Matrix random_orthogonal(int n, Rng& rng);

/// Parseval frame: the polar factor (F0 F0^T)^(-1/2) F0 of a Gaussian d x n
/// matrix, invariant under rotations of the Grassmannian.
Frame sample_parseval_frame(int d, int n, Rng& rng);

/// Generic frame with Gaussian columns (resampled until spanning).
Frame sample_frame(int d, int n, Rng& rng);

/// Member of S(n) of rank d: F^T F with F Gaussian d x n. Resampled until the
/// d-th eigenvalue clears 1e-6 so rank classification is unambiguous.
PsdMember sample_psd_member(int n, int d, Rng& rng);

/// Member of P(n) of rank d: Gram matrix of a sampled Parseval frame.
ProjectionMember sample_projection(int n, int d, Rng& rng);

/// Same-stratum neighbour of `a`: perturbs the spectral factor F by eta * Δ
/// with Δ Gaussian and eta at most eta_factor * sqrt(lambda_d), resampling
/// until the rank is preserved.
PsdMember perturb_same_stratum(const PsdMember& a, Rng& rng, double eta_factor = 0.1);

/// Positively scalable frame: a sampled Parseval frame with column i divided
/// by a random scalar in [1/2, 2].
Frame sample_scalable_frame(int d, int n, Rng& rng);

}  // namespace naimark
