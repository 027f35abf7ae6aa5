#include "naimark/theorem.hpp"

#include <json.hpp>

#include "naimark/sampling.hpp"

namespace naimark {

namespace {

using nlohmann::json;

struct ConfigEntry {
  ExtensionMap map;
  ExtensionProperty property;
};

// Fixed check order; sub-seeds are derived from the position in this matrix.
constexpr ConfigEntry kChecks[] = {
    {ExtensionMap::Spectral, ExtensionProperty::ExtendsN},
    {ExtensionMap::Spectral, ExtensionProperty::Involutive},
    {ExtensionMap::Spectral, ExtensionProperty::Gale},
    {ExtensionMap::Kernel, ExtensionProperty::ExtendsN},
    {ExtensionMap::Kernel, ExtensionProperty::Involutive},
    {ExtensionMap::Kernel, ExtensionProperty::Gale},
    {ExtensionMap::Kernel, ExtensionProperty::DkBound},
};

}  // namespace

TheoremVerification verify_theorem(const TheoremConfig& config) {
  if (config.n_max < 2 || config.n_max > 8) {
    throw Error(ErrorCode::OutOfRange,
                "n_max must lie in [2, 8], got " + std::to_string(config.n_max));
  }
  if (config.trials < 1) throw Error(ErrorCode::OutOfRange, "need at least one trial");

  TheoremVerification verification{config, {}, true};
  uint64_t check_index = 0;
  for (int n = 2; n <= config.n_max; ++n) {
    TheoremSection section;
    section.n = n;
    for (int d = 1; d <= n - 1; ++d) {
      section.dims.push_back(
          {d, stratum_dimension(d, n, Field::Real), stratum_dimension(d, n, Field::Complex)});
    }
    section.dim_rank_one = stratum_dimension(1, n, Field::Real);
    section.dim_rank_top = stratum_dimension(n - 1, n, Field::Real);
    section.dims_matched = (n == 2) ? (section.dim_rank_one == section.dim_rank_top)
                                    : (section.dim_rank_one < section.dim_rank_top);
    verification.ok = verification.ok && section.dims_matched;

    for (const ConfigEntry& entry : kChecks) {
      CheckConfig check{entry.map, entry.property, n, config.trials,
                        stream_seed(config.seed, ++check_index)};
      PropertyOutcome outcome{check_property(check), false};
      outcome.matched = matches_theorem_prediction(outcome.report);
      verification.ok = verification.ok && outcome.matched;
      section.outcomes.push_back(std::move(outcome));
    }
    verification.sections.push_back(std::move(section));
  }
  return verification;
}

std::string render_text(const TheoremVerification& verification) {
  std::string out;
  out += "naimark theorem verification\n";
  out += "rng " + std::string(kRngId) + "\n";
  out += "seed " + std::to_string(verification.config.seed) + "\n";
  out += "trials " + std::to_string(verification.config.trials) + "\n";
  out += "n_max " + std::to_string(verification.config.n_max) + "\n";

  for (const TheoremSection& section : verification.sections) {
    out += "\n[n=" + std::to_string(section.n) + "]\n";
    out += "stratum dimensions (d: real | complex):\n";
    for (const StratumRow& row : section.dims) {
      out += "  d=" + std::to_string(row.d) + ": " + std::to_string(row.dim_real) + " | " +
             std::to_string(row.dim_complex) + "\n";
    }
    out += "rank-1 vs rank-(n-1): " + std::to_string(section.dim_rank_one) +
           (section.dim_rank_one == section.dim_rank_top ? " = " : " < ") +
           std::to_string(section.dim_rank_top);
    if (section.n == 2) {
      out += " (same stratum; all three properties are compatible)";
    } else {
      out +=
          " (complementary strata are not homeomorphic; no extension satisfies all"
          " three properties)";
    }
    out += section.dims_matched ? " MATCH\n" : " DEVIATION\n";

    for (const PropertyOutcome& outcome : section.outcomes) {
      const ExtensionReport& r = outcome.report;
      out += "check " + r.map_name + " " + r.property_name + ": failures " +
             std::to_string(r.failures) + "/" + std::to_string(r.trials) + " expected " +
             std::to_string(r.expected_failures) + " worst_residual " +
             format_double(r.worst_residual) + (outcome.matched ? " MATCH" : " DEVIATION") +
             "\n";
      if (r.witness) {
        out += "witness " + r.map_name + " " + r.property_name + " input:\n" +
               matrix_to_text(r.witness->first);
        out += "witness " + r.map_name + " " + r.property_name + " output:\n" +
               matrix_to_text(r.witness->second);
      }
    }
  }

  out += std::string("\nverdict: ") +
         (verification.ok ? "PASS (all observations match the predicted outcomes)"
                          : "FAIL (at least one observation deviates)") +
         "\n";
  return out;
}

std::string render_json(const TheoremVerification& verification) {
  json j;
  j["rng"] = kRngId;
  j["seed"] = verification.config.seed;
  j["trials"] = verification.config.trials;
  j["n_max"] = verification.config.n_max;
  j["ok"] = verification.ok;
  json sections = json::array();
  for (const TheoremSection& section : verification.sections) {
    json s;
    s["n"] = section.n;
    json dims = json::array();
    for (const StratumRow& row : section.dims) {
      dims.push_back({{"d", row.d}, {"real", row.dim_real}, {"complex", row.dim_complex}});
    }
    s["stratum_dimensions"] = std::move(dims);
    s["dims_matched"] = section.dims_matched;
    json checks = json::array();
    for (const PropertyOutcome& outcome : section.outcomes) {
      const ExtensionReport& r = outcome.report;
      json c;
      c["map"] = r.map_name;
      c["property"] = r.property_name;
      c["failures"] = r.failures;
      c["expected_failures"] = r.expected_failures;
      c["trials"] = r.trials;
      c["worst_residual"] = r.worst_residual;
      c["matched"] = outcome.matched;
      checks.push_back(std::move(c));
    }
    s["checks"] = std::move(checks);
    sections.push_back(std::move(s));
  }
  j["sections"] = std::move(sections);
  return j.dump(2) + "\n";
}

}  // namespace naimark
