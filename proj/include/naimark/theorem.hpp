#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "naimark/extensions.hpp"
#include "naimark/io.hpp"

namespace naimark {

struct TheoremConfig {
  int n_max = 8;
  int trials = 100;
  uint64_t seed = 0;
};

struct PropertyOutcome {
  ExtensionReport report;
  bool matched;
};

struct StratumRow {
  int d;
  long long dim_real;
  long long dim_complex;
};

struct TheoremSection {
  int n;
  std::vector<StratumRow> dims;
  long long dim_rank_one;
  long long dim_rank_top;
  bool dims_matched;  // equality at n = 2, strict inequality for n >= 3
  std::vector<PropertyOutcome> outcomes;
};

struct TheoremVerification {
  TheoremConfig config;
  std::vector<TheoremSection> sections;
  bool ok;
};

/// Runs the full property matrix for every n in [2, n_max]: both constructive
/// extensions against extends_N / involutive / gale, the Davis-Kahan bound for
/// the kernel extension, and the stratum-dimension comparison. `ok` holds iff
/// every observation agrees with the predicted outcome, including the
/// failures the theorem itself predicts.
TheoremVerification verify_theorem(const TheoremConfig& config);

/// Deterministic renderings: identical inputs produce identical bytes.
std::string render_text(const TheoremVerification& verification);
std::string render_json(const TheoremVerification& verification);

}  // namespace naimark
