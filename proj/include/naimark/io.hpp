#pragma once

#include <filesystem>
#include <string>

#include "naimark/extensions.hpp"
#include "naimark/matrix.hpp"
#include "naimark/matroids.hpp"

namespace naimark {

enum class FileFormat { Text, Json };

FileFormat parse_file_format(const std::string& name);
const char* to_string(FileFormat format);

/// Shortest decimal form that round-trips the exact double (17 significant
/// digits via %.17g).
std::string format_double(double value);

// Matrix files. Text: first line "rows cols", then one line per row of
// space-separated entries. JSON: {"rows":r,"cols":c,"data":[row-major]}.
// Both forms re-parse to bit-identical values.
std::string matrix_to_text(const Matrix& m);
std::string matrix_to_json(const Matrix& m);
std::string matrix_to_string(const Matrix& m, FileFormat format);

/// Parses either format, auto-detected: JSON when the first non-space byte is
/// '{', text otherwise.
Matrix parse_matrix(const std::string& content);

// Matroid files, 1-indexed. Text: "ground_size n" then one "basis i j ..."
// line per basis. JSON: {"ground_size":n,"bases":[[...],...]}.
std::string matroid_to_text(const Matroid& m);
std::string matroid_to_json(const Matroid& m);
std::string matroid_to_string(const Matroid& m, FileFormat format);
Matroid parse_matroid(const std::string& content);

// Property-check reports; `matched` records whether the observed counts are
// the theorem-predicted ones.
std::string report_to_text(const ExtensionReport& report, bool matched);
std::string report_to_json(const ExtensionReport& report, bool matched);
std::string report_to_string(const ExtensionReport& report, bool matched, FileFormat format);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace naimark
