#pragma once

#include <iosfwd>
#include <string>

namespace quadft::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitBadInput = 1,
  kExitClosedFormUnavailable = 2,
  kExitSolverFailure = 3,
};

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct SolveOptions {
  std::string method = "auto";  // auto | closed-form | weiszfeld
  double tol = 1e-10;
  int max_iter = 10000;
  std::string format = "text";  // text | json | csv
  std::string output;           // empty: stdout
};

struct SweepOptions {
  double a = 2.0;
  double ratio_min = 1.0;
  double ratio_max = 3.0;
  int steps = 21;
  std::string output;  // empty: stdout
};

int cmd_solve(const std::string& path, const SolveOptions& options, Streams io);
int cmd_classify(const std::string& path, Streams io);
int cmd_sweep(const SweepOptions& options, Streams io);
int cmd_render(const std::string& path, const std::string& svg_path, Streams io);

/// Column names of the sweep CSV, comma separated.
inline constexpr const char* kSweepHeader = "ratio,y,alpha102_deg,alpha304_deg,alpha401_deg,residual";

}  // namespace quadft::cli
