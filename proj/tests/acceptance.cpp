// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numbers>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "helpers.hpp"
#include "naimark/extensions.hpp"
#include "naimark/frames.hpp"
#include "naimark/io.hpp"
#include "naimark/matroids.hpp"
#include "naimark/sampling.hpp"
#include "naimark/theorem.hpp"

using namespace naimark;
using naimark::testing::all_entries;
using naimark::testing::mercedes_benz;
using naimark::testing::mercedes_benz_gram;
using naimark::testing::scalable_triple;
using naimark::testing::unscalable_triple;

namespace {

constexpr uint64_t kSeedBase = 0xACCE57;
std::string detail;

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. N(N(P)) == P bitwise and matroid(I-P) == gale_dual(matroid(P)) for 100
//    random Parseval frames per (d, n), n <= 8; runtime < 30 s.
bool criterion1() {
  const auto start = std::chrono::steady_clock::now();
  int involution_failures = 0;
  int gale_failures = 0;
  int total = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d <= n - 1; ++d) {
      Rng rng(stream_seed(kSeedBase + 1, static_cast<uint64_t>(n * 100 + d)));
      for (int rep = 0; rep < 100; ++rep) {
        ++total;
        const ProjectionMember p = gram_projection(sample_parseval_frame(d, n, rng));
        const ProjectionMember complement = naimark_gram(p);
        if (!(naimark_gram(complement).mat() == p.mat())) ++involution_failures;
        if (!(matroid_from_columns(complement.mat()) ==
              gale_dual(matroid_from_columns(p.mat())))) {
          ++gale_failures;
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  detail = std::to_string(total) + " frames, " + std::to_string(involution_failures) +
           " involution failures, " + std::to_string(gale_failures) + " Gale failures, " +
           format_double(elapsed) + " s";
  return involution_failures == 0 && gale_failures == 0 && elapsed < 30.0;
}

// 2. Mercedes-Benz golden fixture.
bool criterion2() {
  const Frame mb = Frame::from_synthesis(mercedes_benz());
  const Frame complement = naimark_complement_parseval(mb);
  const double gram_residual =
      frobenius_distance(gram(complement).mat(), all_entries(3, 1.0 / 3.0));

  const Matroid u23 = matroid_from_columns(gram(mb).mat());
  const Matroid u13 = matroid_from_columns(gram(complement).mat());
  const bool matroids_exact =
      u23 == Matroid::from_bases(3, {{0, 1}, {0, 2}, {1, 2}}) &&
      u13 == Matroid::from_bases(3, {{0}, {1}, {2}}) && gale_dual(u23) == u13;

  detail = "complement Gram residual " + format_double(gram_residual) + ", matroid pair " +
           (matroids_exact ? "U(2,3)/U(1,3)" : "WRONG");
  return gram_residual <= 1e-10 && matroids_exact;
}

// 3. Case I: spectral shift extends N, is involutive, preserves lambda_max,
//    and is Gale at n = 2.
bool criterion3() {
  double worst_extends = 0.0;
  double worst_involution = 0.0;
  double worst_lambda = 0.0;
  for (int n = 2; n <= 8; ++n) {
    Rng rng(stream_seed(kSeedBase + 3, static_cast<uint64_t>(n)));
    for (int rep = 0; rep < 100; ++rep) {
      const int d = 1 + rep % (n - 1);
      const ProjectionMember p = sample_projection(n, d, rng);
      const PsdMember as_psd = PsdMember::from_matrix(p.mat());
      worst_extends = std::max(
          worst_extends, frobenius_distance(spectral_shift(as_psd).mat(), naimark_gram(p).mat()));

      const PsdMember a = sample_psd_member(n, d, rng);
      const PsdMember e = spectral_shift(a);
      worst_involution =
          std::max(worst_involution, frobenius_distance(spectral_shift(e).mat(), a.mat()));
      worst_lambda = std::max(worst_lambda, std::fabs(e.lambda_max() - a.lambda_max()));
    }
  }
  const ExtensionReport gale2 =
      check_property({ExtensionMap::Spectral, ExtensionProperty::Gale, 2, 100, kSeedBase + 30});
  detail = "extends residual " + format_double(worst_extends) + ", involution residual " +
           format_double(worst_involution) + ", lambda residual " + format_double(worst_lambda) +
           ", n=2 gale failures " + std::to_string(gale2.failures) + "/100";
  return worst_extends <= 1e-9 && worst_involution <= 1e-9 && worst_lambda <= 1e-9 &&
         gale2.failures == 0;
}

// 4. Gale failure reproduction: every witness has shift rank n-1 > n-d and
//    fails the Gale pairing.
bool criterion4() {
  int witnesses = 0;
  int reproduced = 0;
  for (int n = 3; n <= 8; ++n) {
    for (int d = 2; d <= n - 1; ++d) {
      for (uint64_t seed = 0; seed < 10; ++seed) {
        ++witnesses;
        const PsdMember w = gale_failure_witness(n, d, seed);
        const PsdMember shifted = spectral_shift(w);
        if (shifted.rank() == n - 1 && n - 1 > n - d && !is_gale_pair(w, shifted)) ++reproduced;
      }
    }
  }
  detail = std::to_string(reproduced) + "/" + std::to_string(witnesses) + " witnesses reproduced";
  return reproduced == witnesses;
}

// 5. Case II: Prop-1 Gale check, involutivity failure on non-projections, and
//    the Davis-Kahan bound with its sin-theta certificate.
bool criterion5() {
  int prop1_failures = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d <= n - 1; ++d) {
      Rng rng(stream_seed(kSeedBase + 5, static_cast<uint64_t>(n * 100 + d)));
      for (int rep = 0; rep < 100; ++rep) {
        if (!verify_prop1(sample_psd_member(n, d, rng))) ++prop1_failures;
      }
    }
  }

  int qualifying = 0;
  int involution_failures = 0;
  for (int n = 2; n <= 8; ++n) {
    Rng rng(stream_seed(kSeedBase + 50, static_cast<uint64_t>(n)));
    for (int rep = 0; rep < 100; ++rep) {
      const int d = 1 + rep % (n - 1);
      const PsdMember a = sample_psd_member(n, d, rng);
      bool away = false;
      for (double lambda : a.spectrum().eigenvalues) {
        if (std::min(std::fabs(lambda), std::fabs(lambda - 1.0)) > 1e-6) away = true;
      }
      if (!away) continue;
      ++qualifying;
      const Matrix twice = kernel_projection(kernel_extension(a).mat()).mat();
      if (frobenius_distance(twice, a.mat()) > 1e-8) ++involution_failures;
    }
  }

  int dk_failures = 0;
  int sin_failures = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d <= n - 1; ++d) {
      Rng rng(stream_seed(kSeedBase + 55, static_cast<uint64_t>(n * 100 + d)));
      for (int rep = 0; rep < 1000; ++rep) {
        const PsdMember a = sample_psd_member(n, d, rng);
        const PsdMember b =
            rep % 2 == 0 ? perturb_same_stratum(a, rng) : sample_psd_member(n, d, rng);
        const DavisKahanResult r = davis_kahan_check(a, b);
        if (!(r.lhs <= r.rhs + 1e-9)) ++dk_failures;
        if (std::fabs(r.lhs - r.sqrt2_sin_theta) > 1e-8) ++sin_failures;
      }
    }
  }

  detail = std::to_string(prop1_failures) + " Prop-1 failures, involutivity broke on " +
           std::to_string(involution_failures) + "/" + std::to_string(qualifying) +
           " non-projections, " + std::to_string(dk_failures) + " DK violations, " +
           std::to_string(sin_failures) + " sin-certificate misses over 28000 pairs";
  return prop1_failures == 0 && qualifying > 0 && involution_failures == qualifying &&
         dk_failures == 0 && sin_failures == 0;
}

// 6. Stratum dimension table for n in [2, 10], real and complex, plus the
//    rank-1 vs rank-(n-1) comparison.
bool criterion6() {
  struct Row {
    int n, d;
    long long real, complex;
  };
  // Frozen table: dn - d(d-1)/2 and 2dn - d^2.
  const std::vector<Row> table = {
      {2, 1, 2, 3},    {3, 1, 3, 5},    {3, 2, 5, 8},    {4, 1, 4, 7},    {4, 2, 7, 12},
      {4, 3, 9, 15},   {5, 1, 5, 9},    {5, 2, 9, 16},   {5, 3, 12, 21},  {5, 4, 14, 24},
      {6, 1, 6, 11},   {6, 2, 11, 20},  {6, 3, 15, 27},  {6, 4, 18, 32},  {6, 5, 20, 35},
      {7, 1, 7, 13},   {7, 2, 13, 24},  {7, 3, 18, 33},  {7, 4, 22, 40},  {7, 5, 25, 45},
      {7, 6, 27, 48},  {8, 1, 8, 15},   {8, 2, 15, 28},  {8, 3, 21, 39},  {8, 4, 26, 48},
      {8, 5, 30, 55},  {8, 6, 33, 60},  {8, 7, 35, 63},  {9, 1, 9, 17},   {9, 2, 17, 32},
      {9, 3, 24, 45},  {9, 4, 30, 56},  {9, 5, 35, 65},  {9, 6, 39, 72},  {9, 7, 42, 77},
      {9, 8, 44, 80},  {10, 1, 10, 19}, {10, 2, 19, 36}, {10, 3, 27, 51}, {10, 4, 34, 64},
      {10, 5, 40, 75}, {10, 6, 45, 84}, {10, 7, 49, 91}, {10, 8, 52, 96}, {10, 9, 54, 99}};
  int mismatches = 0;
  for (const Row& row : table) {
    if (stratum_dimension(row.d, row.n, Field::Real) != row.real) ++mismatches;
    if (stratum_dimension(row.d, row.n, Field::Complex) != row.complex) ++mismatches;
  }
  bool inequality_ok =
      stratum_dimension(1, 2, Field::Real) == stratum_dimension(1, 2, Field::Real);
  for (int n = 3; n <= 10; ++n) {
    if (!(stratum_dimension(1, n, Field::Real) < stratum_dimension(n - 1, n, Field::Real))) {
      inequality_ok = false;
    }
  }
  detail = std::to_string(table.size() * 2) + " frozen entries, " + std::to_string(mismatches) +
           " mismatches; equality at n=2, strict inequality for n in [3,10]: " +
           (inequality_ok ? "yes" : "no");
  return mismatches == 0 && inequality_ok;
}

// 7. Scalability: the worked triple, the infeasible triple, and 50 random
//    scalable instances whose double extension restores the Gram matrix.
bool criterion7() {
  const auto worked = scalability_solve(Frame::from_synthesis(scalable_triple()));
  bool worked_ok = worked.has_value();
  if (worked_ok) {
    const double expected[3] = {2.0 / 3.0, 1.0 / 6.0, 2.0 / 3.0};
    for (int i = 0; i < 3; ++i) {
      const double s = worked->scalars[i] * worked->scalars[i];
      if (std::fabs(s - expected[i]) > 1e-6) worked_ok = false;
    }
    if (worked->residual > 1e-8) worked_ok = false;
  }

  const bool infeasible_ok =
      !scalability_solve(Frame::from_synthesis(unscalable_triple())).has_value();

  int round_trips = 0;
  double worst = 0.0;
  const int shapes[][2] = {{2, 4}, {2, 5}, {3, 5}, {3, 6}, {4, 7}};
  Rng rng(stream_seed(kSeedBase + 7, 0));
  for (int rep = 0; rep < 50; ++rep) {
    const auto [d, n] = shapes[rep % 5];
    const Frame f = sample_scalable_frame(d, n, rng);
    const ScalableExtension once = scalable_extension(f);
    const ScalableExtension twice = scalable_extension(once.complement, once.scalars);
    const double residual = frobenius_distance(gram(twice.complement).mat(), gram(f).mat());
    worst = std::max(worst, residual);
    if (residual <= 1e-8) ++round_trips;
  }

  detail = std::string("worked triple ") + (worked_ok ? "recovered" : "WRONG") +
           ", boundary triple " + (infeasible_ok ? "infeasible" : "WRONG") + ", " +
           std::to_string(round_trips) + "/50 double-extension round trips (worst residual " +
           format_double(worst) + ")";
  return worked_ok && infeasible_ok && round_trips == 50;
}

// 8. Matroid engine: axiom certification, dual involution, and rejection of
//    the non-matroid family {12, 34}.
bool criterion8() {
  bool rejected = !check_basis_exchange(4, {{0, 1}, {2, 3}});
  int certified = 0;
  int total = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int d = 1; d <= n - 1; ++d) {
      Rng rng(stream_seed(kSeedBase + 8, static_cast<uint64_t>(n * 100 + d)));
      for (int rep = 0; rep < 10; ++rep) {
        ++total;
        const ProjectionMember p = sample_projection(n, d, rng);
        const Matroid m = matroid_from_columns(p.mat());
        const Matroid dual = gale_dual(m);
        if (!m.bases().empty() && check_basis_exchange(n, m.bases()) &&
            check_basis_exchange(n, dual.bases()) && gale_dual(dual) == m) {
          ++certified;
        }
      }
    }
  }
  detail = std::string("{12,34} ") + (rejected ? "rejected" : "ACCEPTED") + ", " +
           std::to_string(certified) + "/" + std::to_string(total) +
           " produced matroids certified (B1, B2, dual involution)";
  return rejected && certified == total;
}

// 9. End-to-end determinism: verify-theorem at full scale exits 0 twice with
//    byte-identical reports, within the runtime budget.
bool criterion9() {
  const auto start = std::chrono::steady_clock::now();
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / ("naimark_acceptance_" + std::to_string(getpid()));
  std::filesystem::create_directories(dir);
  const std::string a = (dir / "run1.txt").string();
  const std::string b = (dir / "run2.txt").string();
  const std::string base = std::string(NAIMARK_CLI_PATH) +
                           " verify-theorem --n-max 8 --trials 100 --seed 0 --out ";
  const int code1 = WEXITSTATUS(std::system((base + a + " 2>/dev/null").c_str()));
  const int code2 = WEXITSTATUS(std::system((base + b + " 2>/dev/null").c_str()));
  const bool identical = read_file(a) == read_file(b);
  std::filesystem::remove_all(dir);
  const double elapsed = seconds_since(start);
  detail = "exit codes " + std::to_string(code1) + "/" + std::to_string(code2) + ", reports " +
           (identical ? "byte-identical" : "DIFFER") + ", " + format_double(elapsed) + " s";
  return code1 == 0 && code2 == 0 && identical && elapsed < 300.0;
}

}  // namespace

int main() {
  const struct {
    const char* name;
    std::function<bool()> run;
  } criteria[] = {
      {"1 Naimark involution and Gale duality", criterion1},
      {"2 Mercedes-Benz golden fixture", criterion2},
      {"3 Case I spectral-shift suite", criterion3},
      {"4 Gale failure reproduction", criterion4},
      {"5 Case II kernel-extension suite", criterion5},
      {"6 stratum dimensions", criterion6},
      {"7 scalability", criterion7},
      {"8 matroid engine", criterion8},
      {"9 end-to-end verify-theorem", criterion9},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    bool ok = false;
    detail.clear();
    try {
      ok = criterion.run();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %s (%s)\n", ok ? "PASS" : "FAIL", criterion.name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  if (failures > 0) {
    std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("ACCEPTANCE: all 9 criteria passed\n");
  return 0;
}
