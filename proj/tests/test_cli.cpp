#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "helpers.hpp"
#include "naimark/frames.hpp"
#include "naimark/io.hpp"

using namespace naimark;
namespace fs = std::filesystem;

namespace {

const std::string kCli = NAIMARK_CLI_PATH;

struct Scratch {
  fs::path dir;
  Scratch() {
    dir = fs::temp_directory_path() / ("naimark_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
};

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("gen is byte-reproducible and produces valid members") {
  Scratch tmp;
  const std::string a = tmp.file("a.txt");
  const std::string b = tmp.file("b.txt");
  CHECK(run("gen parseval --d 2 --n 5 --seed 7 --out " + a) == 0);
  CHECK(run("gen parseval --d 2 --n 5 --seed 7 --out " + b) == 0);
  CHECK(read_file(a) == read_file(b));
  CHECK(is_parseval(parse_matrix(read_file(a)), 1e-9));

  const std::string p = tmp.file("p.txt");
  CHECK(run("gen psd --d 2 --n 4 --seed 7 --out " + p) == 0);
  const PsdMember member = PsdMember::from_matrix(parse_matrix(read_file(p)));
  CHECK(member.size() == 4);
  CHECK(member.rank() == 2);

  CHECK(run("gen parseval --d 3 --n 3 --seed 1 --out " + tmp.file("bad.txt")) == 2);
}

TEST_CASE("complement handles both pictures and validates input") {
  Scratch tmp;
  const std::string mb = tmp.file("mb.txt");
  write_file(mb, matrix_to_text(naimark::testing::mercedes_benz()));
  const std::string out = tmp.file("complement.txt");
  CHECK(run("complement " + mb + " --out " + out) == 0);
  const Matrix g = parse_matrix(read_file(out));
  CHECK(g.rows() == 1);
  CHECK(g.cols() == 3);
  const Matrix gram_g = g.transposed() * g;
  CHECK(frobenius_distance(gram_g, naimark::testing::all_entries(3, 1.0 / 3.0)) <= 1e-10);

  const std::string proj = tmp.file("proj.txt");
  write_file(proj, matrix_to_text(Matrix::diagonal({1.0, 0.0})));
  const std::string pout = tmp.file("proj_out.txt");
  CHECK(run("complement " + proj + " --out " + pout) == 0);
  CHECK(parse_matrix(read_file(pout)) == Matrix::diagonal({0.0, 1.0}));

  const std::string bad = tmp.file("bad.txt");
  write_file(bad, matrix_to_text(Matrix(2, 3, {1, 0, 1, 0, 1, 0})));
  CHECK(run("complement " + bad + " --out " + tmp.file("nope.txt")) == 2);
}

TEST_CASE("extend applies maps and reports scalability failures") {
  Scratch tmp;
  const std::string a = tmp.file("a.txt");
  write_file(a, matrix_to_text(Matrix::diagonal({2.0, 1.0, 0.0})));

  const std::string spectral = tmp.file("spectral.txt");
  CHECK(run("extend spectral " + a + " --out " + spectral) == 0);
  CHECK(parse_matrix(read_file(spectral)) == Matrix::diagonal({0.0, 1.0, 2.0}));

  const std::string kernel = tmp.file("kernel.txt");
  CHECK(run("extend kernel " + a + " --out " + kernel) == 0);
  CHECK(frobenius_distance(parse_matrix(read_file(kernel)), Matrix::diagonal({0.0, 0.0, 1.0})) <=
        1e-12);

  const std::string triple = tmp.file("triple.txt");
  write_file(triple, matrix_to_text(naimark::testing::unscalable_triple()));
  CHECK(run("extend scalable " + triple + " --out " + tmp.file("unused.txt")) == 1);

  const std::string good = tmp.file("good.txt");
  write_file(good, matrix_to_text(naimark::testing::scalable_triple()));
  CHECK(run("extend scalable " + good + " --out " + tmp.file("scalable_out.txt")) == 0);
}

TEST_CASE("matroid extraction writes the canonical 1-indexed family") {
  Scratch tmp;
  const std::string m = tmp.file("m.txt");
  write_file(m, matrix_to_text(Matrix(2, 3, {1, 0, 1, 0, 1, 1})));
  const std::string out = tmp.file("matroid.txt");
  CHECK(run("matroid " + m + " --out " + out) == 0);
  CHECK(read_file(out) == "ground_size 3\nbasis 1 2\nbasis 1 3\nbasis 2 3\n");
}

TEST_CASE("check exit codes follow the prediction contract") {
  Scratch tmp;
  CHECK(run("check spectral gale --n 2 --trials 50 --seed 0 --out " + tmp.file("r1.txt")) == 0);
  const std::string r1 = read_file(tmp.file("r1.txt"));
  CHECK(r1.find("failures 0") != std::string::npos);

  CHECK(run("check kernel involutive --n 4 --trials 50 --seed 0 --out " + tmp.file("r2.txt")) ==
        0);
  const std::string r2 = read_file(tmp.file("r2.txt"));
  CHECK(r2.find("status MATCH") != std::string::npos);

  CHECK(run("check spectral continuity --n 4 --trials 5 --seed 0") == 2);
  CHECK(run("check kernel gale --n 12 --trials 5 --seed 0") == 2);
}

TEST_CASE("malformed input exits 2 and never crashes") {
  Scratch tmp;
  const std::string junk = tmp.file("junk.txt");
  write_file(junk, "this is not a matrix\n");
  CHECK(run("complement " + junk) == 2);
  CHECK(run("extend spectral " + junk) == 2);
  CHECK(run("matroid " + junk) == 2);
  CHECK(run("matroid " + tmp.file("missing.txt")) == 2);
  CHECK(run("frobnicate") == 2);
}

TEST_CASE("json format round-trips through the pipeline") {
  Scratch tmp;
  const std::string a = tmp.file("a.json");
  CHECK(run("gen parseval --d 2 --n 4 --seed 3 --format json --out " + a) == 0);
  const Matrix f = parse_matrix(read_file(a));
  CHECK(is_parseval(f, 1e-9));
  const std::string out = tmp.file("g.json");
  CHECK(run("complement " + a + " --format json --out " + out) == 0);
  const Matrix g = parse_matrix(read_file(out));
  CHECK(g.rows() == 2);
  // Same complement as the text pipeline.
  const std::string at = tmp.file("a.txt");
  CHECK(run("gen parseval --d 2 --n 4 --seed 3 --format text --out " + at) == 0);
  const std::string outt = tmp.file("g.txt");
  CHECK(run("complement " + at + " --format text --out " + outt) == 0);
  CHECK(parse_matrix(read_file(outt)) == g);
}

TEST_CASE("verify-theorem is reproducible and exits 0") {
  Scratch tmp;
  const std::string a = tmp.file("v1.txt");
  const std::string b = tmp.file("v2.txt");
  CHECK(run("verify-theorem --n-max 3 --trials 20 --seed 0 --out " + a) == 0);
  CHECK(run("verify-theorem --n-max 3 --trials 20 --seed 0 --out " + b) == 0);
  CHECK(read_file(a) == read_file(b));
  CHECK(read_file(a).find("verdict: PASS") != std::string::npos);
  CHECK(run("verify-theorem --n-max 9 --trials 5 --seed 0") == 2);
}

TEST_SUITE_END();
