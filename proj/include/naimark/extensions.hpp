#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "naimark/linalg.hpp"
#include "naimark/matroids.hpp"

namespace naimark {

/// Spectral-shift extension E(A) = lambda_max(A) I - A. Restricted to P(n)
/// this is I - P; on all of S(n) it is involutive and stratum-wise continuous
/// but not Gale.
PsdMember spectral_shift(const PsdMember& a, double tol = kDefaultRankTol);

/// Kernel-projection extension: the orthogonal projection onto ker(A).
/// Restricted to P(n) this is I - P; on all of S(n) it is Gale and
/// stratum-wise continuous but not involutive.
ProjectionMember kernel_extension(const PsdMember& a, double tol = kDefaultRankTol);

/// Rank-d member of S(n) with eigenvalues d, d-1, ..., 1 (conjugated by a
/// seeded random orthogonal matrix) certifying that the spectral shift is not
/// Gale: its shift has rank n-1 > n-d. Requires d >= 2 so that two distinct
/// positive eigenvalues exist.
PsdMember gale_failure_witness(int n, int d, uint64_t seed = 0);

struct DavisKahanResult {
  double lhs;              // ||E(A) - E(B)||_F for the kernel extension
  double rhs;              // sqrt(2) ||A - B||_F / lambda_d(A)
  bool holds;              // lhs <= rhs + 1e-9
  double sqrt2_sin_theta;  // sqrt(2) ||sin Theta||_F of the two kernels
  bool sin_certified;      // |lhs - sqrt2_sin_theta| <= 1e-8
};

/// Continuity certificate for the kernel extension on a same-rank pair.
DavisKahanResult davis_kahan_check(const PsdMember& a, const PsdMember& b,
                                   double slack = 1e-9);

enum class Field { Real, Complex };

/// Dimension of the rank-d stratum of S(n): dn - d(d-1)/2 over the reals,
/// 2dn - d^2 (real dimension) over the complex numbers.
long long stratum_dimension(int d, int n, Field field);

enum class ExtensionMap { Spectral, Kernel };
enum class ExtensionProperty { ExtendsN, Involutive, Gale, DkBound };

ExtensionMap parse_map(const std::string& name);
ExtensionProperty parse_property(const std::string& name);
const char* to_string(ExtensionMap map);
const char* to_string(ExtensionProperty property);

struct CheckConfig {
  ExtensionMap map;
  ExtensionProperty property;
  int n;
  int trials;
  uint64_t seed = 0;
  double tol = 1e-8;
  double matroid_tol = kDefaultRankTol;
};

/// Result of a property check over sampled members. `expected_failures`
/// counts the samples the theorem itself predicts to fail (non-projections
/// for kernel involutivity, multi-eigenvalue samples for the spectral Gale
/// check); a run matches the theorem when failures equals that count.
struct ExtensionReport {
  ExtensionMap map;
  ExtensionProperty property;
  std::string map_name;
  std::string property_name;
  int n = 0;
  int trials = 0;
  uint64_t seed = 0;
  double tol = 0.0;
  int failures = 0;
  int expected_failures = 0;
  double worst_residual = 0.0;
  std::optional<std::pair<Matrix, Matrix>> witness;  // first failing (input, output)
  std::string rng_id;
};

/// Samples `trials` members (P(n) for extends_N, S(n) stratified over the
/// admissible ranks otherwise; trial i draws from the stream derived from
/// (seed, i)) and evaluates the property at the configured tolerance.
ExtensionReport check_property(const CheckConfig& config);

/// Whether the observed failure counts are the ones Theorem 1 predicts.
bool matches_theorem_prediction(const ExtensionReport& report);

}  // namespace naimark
