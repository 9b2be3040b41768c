#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "quadft/solver.hpp"

namespace quadft::cli {

/// Malformed problem file; the message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ProblemFile {
  QuadProblem problem;
  std::string label;
  /// Set when the file used the {"square": {...}} shorthand.
  std::optional<SquareProblem> square;
};

/// Parses either
///   {"points": [[x,y] x4], "weights": [w x4], "label": "..."}
/// or
///   {"square": {"a": ..., "B1": ..., "B4": ...}, "label": "..."}.
/// Throws InputError (syntax, schema) or quadft::Error (invalid geometry).
ProblemFile parse_problem(std::string_view text);

/// Reads `path`, or `in` when path is "-".
ProblemFile load_problem(const std::string& path, std::istream& in);

struct Report {
  std::string label;
  QuadProblem problem;
  Solution solution;
  std::optional<AngleSet> angles;
};

Report make_report(const ProblemFile& file, const Solution& solution);

/// JSON report; angles in radians. Doubles keep 17 significant digits.
nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

/// Human-readable report; angles in degrees.
std::string format_text(const Report& report);

/// Header line plus one data row; angles in degrees.
std::string format_csv(const Report& report);

/// Writes via a sibling temporary file and rename, so `path` either keeps
/// its old contents or holds all of `content`.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace quadft::cli
