#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using namespace quadft::cli;

  CLI::App app{"Weighted Fermat-Torricelli point of four planar points"};
  app.require_subcommand(1);

  unsigned long long seed = 0;
  app.add_option("--seed", seed, "Seed for randomized tooling (unused by the solver itself)");

  SolveOptions solve_opts;
  std::string solve_path;
  auto* solve = app.add_subcommand("solve", "Solve a problem file and print a report");
  solve->add_option("path", solve_path, "Problem JSON file, or - for stdin")->required();
  solve->add_option("--method", solve_opts.method, "auto | closed-form | weiszfeld")
      ->check(CLI::IsMember({"auto", "closed-form", "weiszfeld"}));
  solve->add_option("--tol", solve_opts.tol, "Weiszfeld step tolerance relative to the problem scale");
  solve->add_option("--max-iter", solve_opts.max_iter, "Weiszfeld iteration cap");
  solve->add_option("--format", solve_opts.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  solve->add_option("--output,-o", solve_opts.output, "Write the report here instead of stdout");

  std::string classify_path;
  auto* classify = app.add_subcommand("classify", "Print the per-vertex floating/absorbed test");
  classify->add_option("path", classify_path, "Problem JSON file, or - for stdin")->required();

  SweepOptions sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "Tabulate the square solution over a weight-ratio range");
  sweep->add_option("--a", sweep_opts.a, "Side length of the square");
  sweep->add_option("--ratio-min", sweep_opts.ratio_min, "Smallest B1/B4");
  sweep->add_option("--ratio-max", sweep_opts.ratio_max, "Largest B1/B4");
  sweep->add_option("--steps", sweep_opts.steps, "Number of rows");
  sweep->add_option("--output,-o", sweep_opts.output, "CSV path (stdout when omitted)");

  std::string render_path;
  std::string render_out;
  auto* render = app.add_subcommand("render", "Draw the configuration and its solution as SVG");
  render->add_option("path", render_path, "Problem JSON file, or - for stdin")->required();
  render->add_option("--output,-o", render_out, "SVG path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  const Streams io{std::cin, std::cout, std::cerr};
  if (*solve) return cmd_solve(solve_path, solve_opts, io);
  if (*classify) return cmd_classify(classify_path, io);
  if (*sweep) return cmd_sweep(sweep_opts, io);
  if (*render) return cmd_render(render_path, render_out, io);
  return kExitBadInput;
}
