#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <unistd.h>

#include "naimark/extensions.hpp"
#include "naimark/frames.hpp"
#include "naimark/io.hpp"
#include "naimark/matroids.hpp"
#include "naimark/sampling.hpp"
#include "naimark/theorem.hpp"

namespace {

using namespace naimark;

constexpr int kExitOk = 0;
constexpr int kExitDeviation = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
  std::string out;
  std::string format = "text";
  double tol = kDefaultRankTol;
  uint64_t seed = 0;
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::fputs(content.c_str(), stdout);
  } else {
    write_file(out_path, content);
  }
}

// Verdict words on stderr get color only on a terminal and when NO_COLOR is
// unset; file output is never colored.
std::string verdict(const std::string& word, bool good) {
  const bool color = isatty(fileno(stderr)) && std::getenv("NO_COLOR") == nullptr;
  if (!color) return word;
  return (good ? "\033[32m" : "\033[31m") + word + "\033[0m";
}

Matrix load_matrix(const std::string& path) { return parse_matrix(read_file(path)); }

int run_gen(const std::string& kind, int d, int n, const CommonOptions& opt) {
  Rng rng(stream_seed(opt.seed, 0));
  Matrix output(1, 1);
  if (kind == "parseval") {
    output = sample_parseval_frame(d, n, rng).synthesis();
  } else if (kind == "frame") {
    output = sample_frame(d, n, rng).synthesis();
  } else if (kind == "psd") {
    output = sample_psd_member(n, d, rng).mat();
  } else {
    throw Error(ErrorCode::InvalidArgument, "kind '" + kind + "' (expected parseval|frame|psd)");
  }
  emit(opt.out, matrix_to_string(output, parse_file_format(opt.format)));
  return kExitOk;
}

int run_complement(const std::string& input, const CommonOptions& opt) {
  const Matrix m = load_matrix(input);
  const FileFormat format = parse_file_format(opt.format);
  if (m.is_square()) {
    const ProjectionMember p = ProjectionMember::from_matrix(m);
    const ProjectionMember complement = naimark_gram(p);
    std::fprintf(stderr, "complement: projection rank %d -> %d\n", p.rank(), complement.rank());
    emit(opt.out, matrix_to_string(complement.mat(), format));
    return kExitOk;
  }
  if (m.rows() > m.cols()) {
    throw Error(ErrorCode::InvalidShape, "expected d x n with d < n or a square projection");
  }
  Frame f = Frame::from_synthesis(m);
  if (!is_parseval(f, opt.tol)) {
    const auto [a, b] = f.bounds();
    throw Error(ErrorCode::NotParseval,
                "frame bounds a=" + format_double(a) + " b=" + format_double(b) +
                    " differ from 1 beyond tol " + format_double(opt.tol));
  }
  const Frame g = naimark_complement_parseval(f, opt.tol);
  // Gram identity check before anything is written.
  const Matrix gram_g = gram(g).mat();
  Matrix target = Matrix::identity(f.count()) - gram(f).mat();
  const double identity_residual = frobenius_distance(gram_g, target);
  if (identity_residual > 1e-9) {
    throw Error(ErrorCode::NonConvergence, "complement Gram identity residual " +
                                               format_double(identity_residual) +
                                               " exceeds 1e-9");
  }
  std::fprintf(stderr, "complement: %dx%d Parseval -> %dx%d, Gram identity residual %s\n",
               f.dim(), f.count(), g.dim(), g.count(), format_double(identity_residual).c_str());
  emit(opt.out, matrix_to_string(g.synthesis(), format));
  return kExitOk;
}

std::string gale_summary(const Matrix& input, const Matrix& output, double tol) {
  if (input.cols() > 10) return "gale: SKIPPED (n > 10)";
  const Matroid dual = gale_dual(matroid_from_columns(input, tol));
  const Matroid image = matroid_from_columns(output, tol);
  if (image == dual) return "gale: OK";
  return "gale: FAIL (rank " + std::to_string(image.rank()) + ", need " +
         std::to_string(dual.rank()) + ")";
}

int run_extend(const std::string& map, const std::string& input, const CommonOptions& opt) {
  const Matrix m = load_matrix(input);
  const FileFormat format = parse_file_format(opt.format);

  if (map == "scalable") {
    if (m.is_square() || m.rows() > m.cols()) {
      throw Error(ErrorCode::InvalidShape, "scalable extension expects a d x n frame, d < n");
    }
    const Frame f = Frame::from_synthesis(m);
    const auto solution = scalability_solve(f);
    if (!solution) {
      std::fprintf(stderr, "%s: frame is not positively scalable\n",
                   verdict("Infeasible", false).c_str());
      return kExitDeviation;
    }
    const ScalableExtension ext = scalable_extension(f, solution->scalars);
    std::fprintf(stderr, "scalable: rank %d -> %d, margin %s, residual %s\n", f.dim(),
                 ext.complement.dim(), format_double(solution->margin).c_str(),
                 format_double(solution->residual).c_str());
    emit(opt.out, matrix_to_string(ext.complement.synthesis(), format));
    return kExitOk;
  }

  const ExtensionMap which = parse_map(map);
  const PsdMember a = PsdMember::from_matrix(m, opt.tol);
  const Matrix image =
      which == ExtensionMap::Spectral ? spectral_shift(a).mat() : kernel_extension(a).mat();
  const int out_rank = which == ExtensionMap::Spectral
                           ? PsdMember::from_matrix(image).rank()
                           : ProjectionMember::from_matrix(image).rank();
  std::fprintf(stderr, "%s: rank %d -> %d, %s\n", map.c_str(), a.rank(), out_rank,
               gale_summary(a.mat(), image, opt.tol).c_str());
  emit(opt.out, matrix_to_string(image, format));
  return kExitOk;
}

int run_matroid(const std::string& input, const CommonOptions& opt) {
  const Matroid m = matroid_from_columns(load_matrix(input), opt.tol);
  emit(opt.out, matroid_to_string(m, parse_file_format(opt.format)));
  return kExitOk;
}

int run_check(const std::string& map, const std::string& property, int n, int trials,
              const CommonOptions& opt) {
  CheckConfig config{parse_map(map), parse_property(property), n, trials, opt.seed};
  const ExtensionReport report = check_property(config);
  const bool matched = matches_theorem_prediction(report);
  emit(opt.out, report_to_string(report, matched, parse_file_format(opt.format)));
  std::fprintf(stderr, "check %s %s n=%d: failures %d/%d expected %d -> %s\n", map.c_str(),
               property.c_str(), n, report.failures, report.trials, report.expected_failures,
               verdict(matched ? "MATCH" : "DEVIATION", matched).c_str());
  return matched ? kExitOk : kExitDeviation;
}

int run_verify(int n_max, int trials, const CommonOptions& opt) {
  const TheoremVerification verification = verify_theorem({n_max, trials, opt.seed});
  const FileFormat format = parse_file_format(opt.format);
  emit(opt.out, format == FileFormat::Text ? render_text(verification)
                                           : render_json(verification));
  std::fprintf(stderr, "verify-theorem n_max=%d trials=%d seed=%llu -> %s\n", n_max, trials,
               static_cast<unsigned long long>(opt.seed),
               verdict(verification.ok ? "PASS" : "FAIL", verification.ok).c_str());
  return verification.ok ? kExitOk : kExitDeviation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Naimark complements of Parseval frames, candidate extensions to arbitrary"
               " frames, and the matroid machinery to test them"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string kind, map, property, input;
  int d = 2, n = 3, trials = 100, n_max = 8;

  auto add_common = [&](CLI::App* cmd, bool with_tol = true) {
    cmd->add_option("--out", opt.out, "Output file (stdout when omitted)");
    cmd->add_option("--format", opt.format, "Output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_tol) cmd->add_option("--tol", opt.tol, "Relative tolerance");
  };

  CLI::App* gen = app.add_subcommand("gen", "Sample a frame / Parseval frame / S(n) member");
  gen->add_option("kind", kind, "parseval|frame|psd")->required();
  gen->add_option("--d", d, "Rank / ambient dimension")->required();
  gen->add_option("--n", n, "Number of vectors / matrix size")->required();
  gen->add_option("--seed", opt.seed, "RNG seed");
  add_common(gen);

  CLI::App* complement = app.add_subcommand(
      "complement", "Naimark complement of a Parseval frame or a projection Gram matrix");
  complement->add_option("input", input, "Matrix file")->required();
  add_common(complement);

  CLI::App* extend = app.add_subcommand(
      "extend", "Apply a candidate extension of the Naimark complement");
  extend->add_option("map", map, "spectral|kernel|scalable")->required();
  extend->add_option("input", input, "Matrix file")->required();
  add_common(extend);

  CLI::App* matroid = app.add_subcommand("matroid", "Matroid represented by matrix columns");
  matroid->add_option("input", input, "Matrix file")->required();
  add_common(matroid);

  CLI::App* check = app.add_subcommand(
      "check", "Property check of an extension against the predicted outcome");
  check->add_option("map", map, "spectral|kernel")->required();
  check->add_option("property", property, "extends_N|involutive|gale|dk_bound")->required();
  check->add_option("--n", n, "Ambient size")->required();
  check->add_option("--trials", trials, "Trial count");
  check->add_option("--seed", opt.seed, "RNG seed");
  add_common(check, false);

  CLI::App* verify = app.add_subcommand(
      "verify-theorem", "Run the full extension/property matrix and dimension table");
  verify->add_option("--n-max", n_max, "Largest ambient size (2..8)");
  verify->add_option("--trials", trials, "Trials per check");
  verify->add_option("--seed", opt.seed, "RNG seed");
  add_common(verify, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) return run_gen(kind, d, n, opt);
    if (complement->parsed()) return run_complement(input, opt);
    if (extend->parsed()) return run_extend(map, input, opt);
    if (matroid->parsed()) return run_matroid(input, opt);
    if (check->parsed()) return run_check(map, property, n, trials, opt);
    if (verify->parsed()) return run_verify(n_max, trials, opt);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
