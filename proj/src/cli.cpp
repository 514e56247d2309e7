#include "sarfreq/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include <CLI11.hpp>

#include "sarfreq/export.hpp"
#include "sarfreq/frontier.hpp"
#include "sarfreq/scenario_io.hpp"
#include "sarfreq/sensitivity.hpp"
#include "sarfreq/solver.hpp"

namespace sarfreq::cli {

namespace {

int to_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw InputError("not an integer: '" + std::string(s) + "'");
  return v;
}

void print_assignment(std::ostream& out, const Assignment& a) {
  out << "x\n";
  for (std::size_t j = 0; j < a.x.rows(); ++j) {
    out << " ";
    for (std::size_t k = 0; k < a.x.cols(); ++k) out << ' ' << int(a.x(j, k));
    out << '\n';
  }
  out << "y";
  for (int v : a.y) out << ' ' << v;
  out << '\n';
}

std::string flatten(const BinaryMatrix& x) {
  std::string s;
  for (auto v : x.data()) s += v ? '1' : '0';
  return s;
}

struct Options {
  std::string scenario;
  int budget = 0;
  std::string budgets;
  std::string csv;
  std::string json;
  std::string svg;
  std::string sequences;
  int transmitter = 0;
  double tol = 1e-4;
  unsigned workers = 1;
};

int cmd_solve(const Options& o, std::ostream& out) {
  const auto file = load_scenario(o.scenario);
  const auto r = solve_budgeted(file.scenario, file.effective_coefficients(), o.budget);
  out << "budget " << o.budget << '\n'
      << "f1 " << format_f1(r.f1) << '\n'
      << "f2 " << r.f2 << '\n';
  print_assignment(out, r.assignment);
  out << "nodes " << r.nodes_explored << '\n';
  return kExitOk;
}

int cmd_frontier(const Options& o, std::ostream& out) {
  const auto file = load_scenario(o.scenario);
  const auto& s = file.scenario;
  BudgetSpec range{0, max_excess_budget(s)};
  if (!o.budgets.empty()) range = parse_budgets(o.budgets);
  const auto f = sweep(s, file.effective_coefficients(), {range.lo, range.hi}, o.workers);

  const auto J = static_cast<std::size_t>(s.num_stations);
  const auto K = static_cast<std::size_t>(s.num_frequencies);
  out << format_table(frontier_report(f, J, K));
  if (!o.csv.empty()) write_text_file(o.csv, frontier_csv(f, J, K));
  if (!o.json.empty()) write_text_file(o.json, frontier_json(f));
  if (!o.svg.empty()) emit_plot(f, o.svg);
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out, std::ostream& err) {
  const auto file = load_scenario(o.scenario);
  const auto c = file.effective_coefficients();
  const auto solved = solve_budgeted(file.scenario, c, o.budget);
  const auto oracle = brute_force_oracle(file.scenario, c, o.budget);
  out << "solver f1 = " << format_f1(solved.f1) << '\n'
      << "oracle f1 = " << format_f1(oracle.f1) << '\n';
  const bool same_f1 = solved.f1 == oracle.f1;
  const bool same_x = solved.assignment == oracle.assignment;
  out << "solver x = " << flatten(solved.assignment.x) << '\n'
      << "oracle x = " << flatten(oracle.assignment.x) << '\n';
  if (same_f1 && same_x) {
    out << "match\n";
    return kExitOk;
  }
  err << "mismatch:" << (same_f1 ? "" : " f1") << (same_x ? "" : " assignment") << '\n';
  return kExitOracleMismatch;
}

int cmd_weights(const Options& o, std::ostream& out) {
  const auto file = load_scenario(o.scenario);
  const auto seqs = load_sequences(o.sequences);
  const auto report = weight_sequence_study(file.scenario, seqs, o.budget, o.workers);
  for (const auto& r : report.outcomes)
    out << r.label << " f1 " << format_f1(r.f1) << " x " << flatten(r.assignment.x) << '\n';
  out << "all_assignments_identical " << (report.all_assignments_identical ? "true" : "false")
      << '\n';
  for (const auto& d : report.disagreements)
    out << "differs " << report.outcomes[d.first].label << ' ' << report.outcomes[d.second].label
        << '\n';
  return kExitOk;
}

int cmd_range(const Options& o, std::ostream& out) {
  const auto file = load_scenario(o.scenario);
  const auto r = weight_range(file.scenario, o.budget, o.transmitter, o.tol);
  char buf[160];
  std::snprintf(buf, sizeof buf, "transmitter %d original %.6f low %.6f high %.6f budget %d\n",
                r.transmitter, r.original_value, r.low, r.high, r.budget);
  out << buf;
  return kExitOk;
}

}  // namespace

BudgetSpec parse_budgets(const std::string& text) {
  const auto dots = text.find("..");
  BudgetSpec b{};
  if (dots == std::string::npos) {
    b.lo = b.hi = to_int(text);
  } else {
    b.lo = to_int(std::string_view(text).substr(0, dots));
    b.hi = to_int(std::string_view(text).substr(dots + 2));
  }
  if (b.lo > b.hi) throw InputError("empty budget range '" + text + "'");
  return b;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Receiver-to-frequency assignment: budgeted solves and efficient frontiers",
               "sarfreq"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Maximize f1 with total excess <= budget");
  solve->add_option("--scenario", o.scenario, "Scenario JSON")->required();
  solve->add_option("--budget", o.budget, "Excess-coverage budget")->required();

  auto* frontier = app.add_subcommand("frontier", "Sweep budgets and print the N-points");
  frontier->add_option("--scenario", o.scenario, "Scenario JSON")->required();
  frontier->add_option("--budgets", o.budgets, "LO..HI (default 0..max)");
  frontier->add_option("--csv", o.csv, "Write CSV table");
  frontier->add_option("--json", o.json, "Write JSON array");
  frontier->add_option("--svg", o.svg, "Write SVG plot");
  frontier->add_option("--workers", o.workers, "Concurrent budget solves")->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Cross-check the solver against brute force");
  oracle->add_option("--scenario", o.scenario, "Scenario JSON")->required();
  oracle->add_option("--budget", o.budget, "Excess-coverage budget")->required();

  auto* weights = app.add_subcommand("weights", "Solve once per weight sequence");
  weights->add_option("--scenario", o.scenario, "Scenario JSON")->required();
  weights->add_option("--sequences", o.sequences, "Weight-sequence JSON")->required();
  weights->add_option("--budget", o.budget, "Excess-coverage budget")->required();
  weights->add_option("--workers", o.workers, "Concurrent solves")->check(CLI::PositiveNumber);

  auto* range = app.add_subcommand("range", "Weight interval keeping the optimum unchanged");
  range->add_option("--scenario", o.scenario, "Scenario JSON")->required();
  range->add_option("--budget", o.budget, "Excess-coverage budget")->required();
  range->add_option("--transmitter", o.transmitter, "Transmitter index (0-based)")->required();
  range->add_option("--tol", o.tol, "Endpoint tolerance")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (frontier->parsed()) return cmd_frontier(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out, err);
    if (weights->parsed()) return cmd_weights(o, out);
    if (range->parsed()) return cmd_range(o, out);
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace sarfreq::cli
