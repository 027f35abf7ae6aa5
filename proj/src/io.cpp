#include "naimark/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace naimark {

namespace {

using nlohmann::json;

json matrix_to_json_value(const Matrix& m) {
  json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = m.entries();
  return j;
}

Matrix matrix_from_json_value(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("data")) {
    throw Error(ErrorCode::ParseError, "matrix JSON needs rows, cols, data");
  }
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  std::vector<double> data = j.at("data").get<std::vector<double>>();
  return Matrix(rows, cols, std::move(data));
}

json matroid_to_json_value(const Matroid& m) {
  json bases = json::array();
  for (const auto& basis : m.bases()) {
    json b = json::array();
    for (int x : basis) b.push_back(x + 1);
    bases.push_back(std::move(b));
  }
  json j;
  j["ground_size"] = m.ground_size();
  j["bases"] = std::move(bases);
  return j;
}

bool looks_like_json(const std::string& content) {
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

std::vector<std::vector<int>> shift_to_zero_based(std::vector<std::vector<int>> bases) {
  for (auto& basis : bases)
    for (int& x : basis) --x;
  return bases;
}

}  // namespace

FileFormat parse_file_format(const std::string& name) {
  if (name == "text") return FileFormat::Text;
  if (name == "json") return FileFormat::Json;
  throw Error(ErrorCode::InvalidArgument, "format '" + name + "' (expected text|json)");
}

const char* to_string(FileFormat format) {
  return format == FileFormat::Text ? "text" : "json";
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string matrix_to_text(const Matrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_json(const Matrix& m) { return matrix_to_json_value(m).dump() + "\n"; }

std::string matrix_to_string(const Matrix& m, FileFormat format) {
  return format == FileFormat::Text ? matrix_to_text(m) : matrix_to_json(m);
}

Matrix parse_matrix(const std::string& content) {
  try {
    if (looks_like_json(content)) {
      return matrix_from_json_value(json::parse(content));
    }
    std::istringstream in(content);
    int rows = 0;
    int cols = 0;
    if (!(in >> rows >> cols)) {
      throw Error(ErrorCode::ParseError, "expected 'rows cols' header");
    }
    if (rows <= 0 || cols <= 0) {
      throw Error(ErrorCode::ParseError, "matrix shape must be positive");
    }
    std::vector<double> data(static_cast<size_t>(rows) * cols);
    for (double& x : data) {
      if (!(in >> x)) {
        throw Error(ErrorCode::ParseError, "matrix body ended early");
      }
    }
    std::string trailing;
    if (in >> trailing) {
      throw Error(ErrorCode::ParseError, "unexpected trailing token '" + trailing + "'");
    }
    return Matrix(rows, cols, std::move(data));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string matroid_to_text(const Matroid& m) {
  std::string out = "ground_size " + std::to_string(m.ground_size()) + "\n";
  for (const auto& basis : m.bases()) {
    out += "basis";
    for (int x : basis) out += " " + std::to_string(x + 1);
    out += '\n';
  }
  return out;
}

std::string matroid_to_json(const Matroid& m) { return matroid_to_json_value(m).dump() + "\n"; }

std::string matroid_to_string(const Matroid& m, FileFormat format) {
  return format == FileFormat::Text ? matroid_to_text(m) : matroid_to_json(m);
}

Matroid parse_matroid(const std::string& content) {
  try {
    if (looks_like_json(content)) {
      const json j = json::parse(content);
      if (!j.contains("ground_size") || !j.contains("bases")) {
        throw Error(ErrorCode::ParseError, "matroid JSON needs ground_size and bases");
      }
      return Matroid::from_bases(
          j.at("ground_size").get<int>(),
          shift_to_zero_based(j.at("bases").get<std::vector<std::vector<int>>>()));
    }
    std::istringstream in(content);
    std::string token;
    if (!(in >> token) || token != "ground_size") {
      throw Error(ErrorCode::ParseError, "expected 'ground_size'");
    }
    int ground = 0;
    if (!(in >> ground)) throw Error(ErrorCode::ParseError, "missing ground size value");
    std::vector<std::vector<int>> bases;
    std::string line;
    std::getline(in, line);  // rest of header line
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag != "basis") {
        throw Error(ErrorCode::ParseError, "unexpected line tag '" + tag + "'");
      }
      std::vector<int> basis;
      int x = 0;
      while (ls >> x) basis.push_back(x);
      bases.push_back(std::move(basis));
    }
    return Matroid::from_bases(ground, shift_to_zero_based(std::move(bases)));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string report_to_text(const ExtensionReport& report, bool matched) {
  std::string out;
  out += "naimark property check\n";
  out += "rng " + report.rng_id + "\n";
  out += "map " + report.map_name + "\n";
  out += "property " + report.property_name + "\n";
  out += "n " + std::to_string(report.n) + "\n";
  out += "trials " + std::to_string(report.trials) + "\n";
  out += "seed " + std::to_string(report.seed) + "\n";
  out += "tol " + format_double(report.tol) + "\n";
  out += "failures " + std::to_string(report.failures) + "\n";
  out += "expected_failures " + std::to_string(report.expected_failures) + "\n";
  out += "worst_residual " + format_double(report.worst_residual) + "\n";
  out += std::string("status ") + (matched ? "MATCH" : "DEVIATION") + "\n";
  if (report.witness) {
    out += "witness_input\n" + matrix_to_text(report.witness->first);
    out += "witness_output\n" + matrix_to_text(report.witness->second);
  }
  return out;
}

std::string report_to_json(const ExtensionReport& report, bool matched) {
  json j;
  j["rng"] = report.rng_id;
  j["map"] = report.map_name;
  j["property"] = report.property_name;
  j["n"] = report.n;
  j["trials"] = report.trials;
  j["seed"] = report.seed;
  j["tol"] = report.tol;
  j["failures"] = report.failures;
  j["expected_failures"] = report.expected_failures;
  j["worst_residual"] = report.worst_residual;
  j["status"] = matched ? "MATCH" : "DEVIATION";
  if (report.witness) {
    j["witness_input"] = matrix_to_json_value(report.witness->first);
    j["witness_output"] = matrix_to_json_value(report.witness->second);
  }
  return j.dump() + "\n";
}

std::string report_to_string(const ExtensionReport& report, bool matched, FileFormat format) {
  return format == FileFormat::Text ? report_to_text(report, matched)
                                    : report_to_json(report, matched);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "short write to '" + path.string() + "'");
}

}  // namespace naimark
