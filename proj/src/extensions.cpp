#include "naimark/extensions.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "naimark/sampling.hpp"

namespace naimark {

namespace {

// Distinct positive eigenvalues separated by more than the detection gap.
bool has_two_distinct_positive_eigenvalues(const PsdMember& a) {
  const double top = a.lambda_max();
  const double low = a.lambda(a.rank());
  return top - low > 1e-6 * std::max(1.0, top);
}

bool has_eigenvalue_away_from_01(const PsdMember& a) {
  for (double lambda : a.spectrum().eigenvalues) {
    if (std::min(std::fabs(lambda), std::fabs(lambda - 1.0)) > 1e-6) return true;
  }
  return false;
}

std::vector<int> admissible_ranks(const CheckConfig& config) {
  std::vector<int> ranks;
  if (config.map == ExtensionMap::Spectral && config.property == ExtensionProperty::Gale &&
      config.n >= 3) {
    // The generic rank-d sampler doubles as the multi-eigenvalue sampler; the
    // Gale failure needs d >= 2.
    for (int d = 2; d <= config.n - 1; ++d) ranks.push_back(d);
  } else {
    for (int d = 1; d <= config.n - 1; ++d) ranks.push_back(d);
  }
  return ranks;
}

}  // namespace

PsdMember spectral_shift(const PsdMember& a, double tol) {
  const int n = a.size();
  const double shift = a.lambda_max();
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = (i == j) ? shift - a.mat()(i, j) : -a.mat()(i, j);
    }
  }
  return PsdMember::from_matrix(std::move(m), tol);
}

ProjectionMember kernel_extension(const PsdMember& a, double tol) {
  return kernel_projection(a.spectrum(), tol);
}

PsdMember gale_failure_witness(int n, int d, uint64_t seed) {
  if (n < 3 || d < 2 || d > n - 1) {
    throw Error(ErrorCode::InvalidShape,
                "witness needs n >= 3 and 2 <= d <= n-1 (rank-1 members have a single"
                " positive eigenvalue), got n=" + std::to_string(n) +
                    " d=" + std::to_string(d));
  }
  Rng rng(stream_seed(seed, 0x6a1e));
  const Matrix q = random_orthogonal(n, rng);
  std::vector<double> diag(n, 0.0);
  for (int i = 0; i < d; ++i) diag[i] = static_cast<double>(d - i);
  const Matrix conjugated = q.transposed() * Matrix::diagonal(diag) * q;
  // Symmetrize the rounding residue before membership validation.
  Matrix sym(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym(i, j) = 0.5 * (conjugated(i, j) + conjugated(j, i));
  return PsdMember::from_matrix(std::move(sym));
}

DavisKahanResult davis_kahan_check(const PsdMember& a, const PsdMember& b, double slack) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::ShapeMismatch, "Davis-Kahan pair must share the ambient size");
  }
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::RankMismatch, "ranks " + std::to_string(a.rank()) + " and " +
                                             std::to_string(b.rank()) +
                                             " lie in different strata");
  }
  const double lambda = a.lambda(a.rank());
  const ProjectionMember ka = kernel_extension(a);
  const ProjectionMember kb = kernel_extension(b);

  DavisKahanResult result{};
  result.lhs = frobenius_distance(ka.mat(), kb.mat());
  result.rhs = std::numbers::sqrt2 * frobenius_distance(a.mat(), b.mat()) / lambda;
  result.holds = result.lhs <= result.rhs + slack;

  const std::vector<double> sines = principal_angle_sines(ka.kernel_basis(), kb.kernel_basis());
  double sum = 0.0;
  for (double s : sines) sum += s * s;
  result.sqrt2_sin_theta = std::numbers::sqrt2 * std::sqrt(sum);
  result.sin_certified = std::fabs(result.lhs - result.sqrt2_sin_theta) <= 1e-8;
  return result;
}

long long stratum_dimension(int d, int n, Field field) {
  if (n < 2 || d < 1 || d > n - 1) {
    throw Error(ErrorCode::OutOfRange,
                "stratum needs 1 <= d <= n-1, got d=" + std::to_string(d) +
                    " n=" + std::to_string(n));
  }
  const long long dd = d;
  const long long nn = n;
  if (field == Field::Real) return dd * nn - dd * (dd - 1) / 2;
  return 2 * dd * nn - dd * dd;
}

ExtensionMap parse_map(const std::string& name) {
  if (name == "spectral") return ExtensionMap::Spectral;
  if (name == "kernel") return ExtensionMap::Kernel;
  throw Error(ErrorCode::UnknownMap, "'" + name + "' (expected spectral|kernel)");
}

ExtensionProperty parse_property(const std::string& name) {
  if (name == "extends_N" || name == "extends-n" || name == "extends_n")
    return ExtensionProperty::ExtendsN;
  if (name == "involutive") return ExtensionProperty::Involutive;
  if (name == "gale") return ExtensionProperty::Gale;
  if (name == "dk_bound" || name == "dk-bound") return ExtensionProperty::DkBound;
  throw Error(ErrorCode::UnknownProperty,
              "'" + name + "' (expected extends_N|involutive|gale|dk_bound)");
}

const char* to_string(ExtensionMap map) {
  return map == ExtensionMap::Spectral ? "spectral" : "kernel";
}

const char* to_string(ExtensionProperty property) {
  switch (property) {
    case ExtensionProperty::ExtendsN: return "extends_N";
    case ExtensionProperty::Involutive: return "involutive";
    case ExtensionProperty::Gale: return "gale";
    case ExtensionProperty::DkBound: return "dk_bound";
  }
  return "?";
}

ExtensionReport check_property(const CheckConfig& config) {
  if (config.n < 2) throw Error(ErrorCode::OutOfRange, "need n >= 2");
  if (config.trials < 1) throw Error(ErrorCode::OutOfRange, "need at least one trial");
  if (config.property == ExtensionProperty::Gale && config.n > 10) {
    throw Error(ErrorCode::OutOfRange, "gale checks enumerate matroids; capped at n <= 10");
  }
  if (config.property == ExtensionProperty::DkBound && config.map != ExtensionMap::Kernel) {
    throw Error(ErrorCode::UnknownProperty, "dk_bound certifies the kernel extension only");
  }

  ExtensionReport report;
  report.map = config.map;
  report.property = config.property;
  report.map_name = to_string(config.map);
  report.property_name = to_string(config.property);
  report.n = config.n;
  report.trials = config.trials;
  report.seed = config.seed;
  report.tol = config.tol;
  report.rng_id = kRngId;

  const std::vector<int> ranks = admissible_ranks(config);
  for (int trial = 0; trial < config.trials; ++trial) {
    Rng rng(stream_seed(config.seed, static_cast<uint64_t>(trial)));
    const int d = ranks[trial % ranks.size()];

    bool failed = false;
    bool expected_to_fail = false;
    double residual = 0.0;
    std::pair<Matrix, Matrix> pair_in_out{Matrix(1, 1), Matrix(1, 1)};

    switch (config.property) {
      case ExtensionProperty::ExtendsN: {
        const ProjectionMember p = sample_projection(config.n, d, rng);
        const PsdMember input = PsdMember::from_matrix(p.mat());
        const Matrix output = config.map == ExtensionMap::Spectral
                                  ? spectral_shift(input).mat()
                                  : kernel_extension(input).mat();
        const Matrix target = naimark_gram(p).mat();
        residual = frobenius_distance(output, target);
        failed = residual > config.tol;
        pair_in_out = {p.mat(), output};
        break;
      }
      case ExtensionProperty::Involutive: {
        const PsdMember a = sample_psd_member(config.n, d, rng);
        Matrix twice(1, 1);
        if (config.map == ExtensionMap::Spectral) {
          twice = spectral_shift(spectral_shift(a)).mat();
        } else {
          const ProjectionMember once = kernel_extension(a);
          twice = kernel_projection(once.mat()).mat();
          expected_to_fail = has_eigenvalue_away_from_01(a);
        }
        residual = frobenius_distance(twice, a.mat());
        failed = residual > config.tol;
        pair_in_out = {a.mat(), twice};
        break;
      }
      case ExtensionProperty::Gale: {
        const PsdMember a = sample_psd_member(config.n, d, rng);
        Matrix image(1, 1);
        if (config.map == ExtensionMap::Spectral) {
          image = spectral_shift(a).mat();
          expected_to_fail = has_two_distinct_positive_eigenvalues(a);
        } else {
          image = kernel_extension(a).mat();
        }
        failed = !is_gale_pair(a.mat(), image, config.matroid_tol);
        residual = failed ? 1.0 : 0.0;
        pair_in_out = {a.mat(), image};
        break;
      }
      case ExtensionProperty::DkBound: {
        const PsdMember a = sample_psd_member(config.n, d, rng);
        const PsdMember b = perturb_same_stratum(a, rng);
        const DavisKahanResult dk = davis_kahan_check(a, b);
        failed = !(dk.holds && dk.sin_certified);
        residual = dk.lhs - dk.rhs;
        pair_in_out = {a.mat(), b.mat()};
        break;
      }
    }

    if (failed) {
      if (report.failures == 0) report.witness = pair_in_out;
      ++report.failures;
    }
    if (expected_to_fail) ++report.expected_failures;
    if (trial == 0 || residual > report.worst_residual) report.worst_residual = residual;
  }
  return report;
}

bool matches_theorem_prediction(const ExtensionReport& report) {
  switch (report.property) {
    case ExtensionProperty::ExtendsN:
    case ExtensionProperty::DkBound:
      return report.failures == 0;
    case ExtensionProperty::Involutive:
      if (report.map == ExtensionMap::Spectral) return report.failures == 0;
      // Kernel extension fails exactly on the sampled non-projections.
      return report.failures == report.expected_failures;
    case ExtensionProperty::Gale:
      if (report.map == ExtensionMap::Kernel) return report.failures == 0;
      if (report.n == 2) return report.failures == 0;
      return report.failures == report.expected_failures && report.expected_failures > 0;
  }
  return false;
}

}  // namespace naimark
