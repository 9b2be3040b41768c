#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>

#include "problem_io.hpp"
#include "quadft/error.hpp"
#include "svg.hpp"

namespace quadft::cli {

namespace {

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::DegenerateInput:
    case ErrorKind::InvalidInput:
    case ErrorKind::DegenerateCoefficients:
      return kExitBadInput;
    case ErrorKind::NotFloating:
    case ErrorKind::WrongCase:
      return kExitClosedFormUnavailable;
    case ErrorKind::NonConvergence:
    case ErrorKind::InternalInconsistency:
      return kExitSolverFailure;
  }
  return kExitSolverFailure;
}

void emit(const std::string& content, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << content;
  } else {
    write_atomic(output, content);
  }
}

double degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int cmd_solve(const std::string& path, const SolveOptions& options, Streams io) {
  if (options.method != "auto" && options.method != "closed-form" && options.method != "weiszfeld") {
    io.err << "error: unknown method '" << options.method << "'\n";
    return kExitBadInput;
  }
  if (options.format != "text" && options.format != "json" && options.format != "csv") {
    io.err << "error: unknown format '" << options.format << "'\n";
    return kExitBadInput;
  }
  if (!(options.tol > 0.0) || options.max_iter <= 0) {
    io.err << "error: --tol and --max-iter must be positive\n";
    return kExitBadInput;
  }
  try {
    const ProblemFile file = load_problem(path, io.in);
    const WeiszfeldOptions wopts{options.tol, options.max_iter};
    Solution solution;
    if (options.method == "auto") {
      solution = solve(file.problem, wopts);
    } else if (options.method == "weiszfeld") {
      solution = solve_weiszfeld(file.problem, wopts);
    } else {
      const auto closed = solve_closed_form(file.problem);
      if (!closed) {
        io.err << "error: no closed form applies (needs a floating convex instance with "
                  "B1=B3, B2=B4 or B1=B2, B3=B4)\n";
        return kExitClosedFormUnavailable;
      }
      if (closed->fallback) {
        io.err << "error: angle transfer failed verification for this quadrilateral\n";
        return kExitClosedFormUnavailable;
      }
      solution = *closed;
    }
    const Report report = make_report(file, solution);
    std::string content;
    if (options.format == "json") {
      content = to_json(report).dump(2) + "\n";
    } else if (options.format == "csv") {
      content = format_csv(report);
    } else {
      content = format_text(report);
    }
    emit(content, options.output, io.out);
    return kExitOk;
  } catch (const InputError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

int cmd_classify(const std::string& path, Streams io) {
  try {
    const ProblemFile file = load_problem(path, io.in);
    const QuadProblem& qp = file.problem;
    const CaseTag tag = classify(qp);
    const auto r = vertex_resultants(qp);
    char line[128];
    io.out << "vertex  weight                  resultant               status\n";
    for (std::size_t i = 0; i < 4; ++i) {
      std::snprintf(line, sizeof line, "A%zu      %-22.17g  %-22.17g  %s\n", i + 1, qp.weights()[i], r[i],
                    r[i] > qp.weights()[i] ? "R > B" : "R <= B");
      io.out << line;
    }
    io.out << to_string(tag) << '\n';
    return kExitOk;
  } catch (const InputError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const InconsistencyError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitSolverFailure;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

int cmd_sweep(const SweepOptions& options, Streams io) {
  if (!(std::isfinite(options.a) && options.a > 0.0)) {
    io.err << "error: side length must be positive\n";
    return kExitBadInput;
  }
  if (!(std::isfinite(options.ratio_min) && std::isfinite(options.ratio_max) && options.ratio_min >= 1.0 &&
        options.ratio_min < options.ratio_max)) {
    io.err << "error: need 1 <= ratio-min < ratio-max\n";
    return kExitBadInput;
  }
  if (options.steps < 2) {
    io.err << "error: steps must be at least 2\n";
    return kExitBadInput;
  }
  std::ostringstream os;
  os << kSweepHeader << '\n';
  try {
    const QuadProblem unit_frame(canonical_vertices(options.a), {1.0, 1.0, 1.0, 1.0});
    for (int i = 0; i < options.steps; ++i) {
      const double ratio = i + 1 == options.steps
                               ? options.ratio_max
                               : options.ratio_min + (options.ratio_max - options.ratio_min) * i / (options.steps - 1);
      const SquareProblem sp{options.a, ratio, 1.0};
      os << g17(ratio) << ',';
      try {
        const double y = solve_square_ft(sp);
        const AngleSet ang = angles_from_y(sp, y);
        const QuadProblem qp(unit_frame.vertices(), {ratio, ratio, 1.0, 1.0});
        os << g17(y) << ',' << g17(degrees(ang.alpha102)) << ',' << g17(degrees(ang.alpha304)) << ','
           << g17(degrees(ang.alpha401)) << ',' << g17(equilibrium_residual(qp, Point{0.0, y})) << '\n';
      } catch (const NotFloatingError&) {
        os << "absorbed,,,,\n";
      }
    }
    emit(os.str(), options.output, io.out);
    return kExitOk;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

int cmd_render(const std::string& path, const std::string& svg_path, Streams io) {
  try {
    const ProblemFile file = load_problem(path, io.in);
    const Solution solution = solve(file.problem);
    const std::string svg = render_svg(file.problem, solution, file.label);
    emit(svg, svg_path, io.out);
    return kExitOk;
  } catch (const InputError& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    const int code = exit_code_for(e);
    return code == kExitBadInput ? kExitBadInput : kExitSolverFailure;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}

}  // namespace quadft::cli
