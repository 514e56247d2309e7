#include "sarfreq/frontier.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <future>
#include <sstream>

#include "sarfreq/solver.hpp"

namespace sarfreq {

namespace {

NPoint solve_point(const Scenario& s, const CoefficientMatrix& c, int budget) {
  try {
    auto r = solve_budgeted(s, c, budget);
    return NPoint{std::move(r.assignment), r.f1, r.f2, budget};
  } catch (const InfeasibleError& e) {
    throw InfeasibleError("sweep aborted at budget " + std::to_string(budget) + ": " + e.what());
  }
}

}  // namespace

Frontier sweep(const Scenario& s, const CoefficientMatrix& c, BudgetRange budgets,
               unsigned workers) {
  const int max_budget = max_excess_budget(s);
  if (budgets.lo < 0 || budgets.hi > max_budget || budgets.lo > budgets.hi)
    throw InputError("budgets " + std::to_string(budgets.lo) + ".." + std::to_string(budgets.hi) +
                     " outside [0," + std::to_string(max_budget) + "]");

  const auto count = static_cast<std::size_t>(budgets.hi - budgets.lo + 1);
  std::vector<NPoint> raw(count);
  if (workers <= 1) {
    for (std::size_t n = 0; n < count; ++n)
      raw[n] = solve_point(s, c, budgets.lo + static_cast<int>(n));
  } else {
    // Strided partition; each slot is written by exactly one task.
    std::vector<std::future<void>> tasks;
    const std::size_t lanes = std::min<std::size_t>(workers, count);
    for (std::size_t lane = 0; lane < lanes; ++lane) {
      tasks.push_back(std::async(std::launch::async, [&, lane] {
        for (std::size_t n = lane; n < count; n += lanes)
          raw[n] = solve_point(s, c, budgets.lo + static_cast<int>(n));
      }));
    }
    std::exception_ptr first_error;
    for (auto& t : tasks) {
      try {
        t.get();
      } catch (...) {
        if (!first_error) first_error = std::current_exception();
      }
    }
    if (first_error) std::rethrow_exception(first_error);
  }
  return Frontier{dominance_filter(raw)};
}

bool dominates(const NPoint& a, const NPoint& b) {
  return a.f1 >= b.f1 && a.f2 >= b.f2 && (a.f1 > b.f1 || a.f2 > b.f2);
}

std::vector<NPoint> dominance_filter(std::span<const NPoint> points) {
  std::vector<NPoint> kept;
  for (std::size_t n = 0; n < points.size(); ++n) {
    const auto& p = points[n];
    bool drop = false;
    for (std::size_t m = 0; m < points.size() && !drop; ++m) {
      if (m == n) continue;
      const auto& q = points[m];
      drop = dominates(q, p) || (m < n && q.f1 == p.f1 && q.f2 == p.f2);
    }
    if (!drop) kept.push_back(p);
  }
  return kept;
}

std::string format_f1(double f1) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", f1);
  return buf;
}

Table frontier_report(const Frontier& f, std::size_t stations, std::size_t frequencies) {
  Table t;
  t.header = {"budget", "f1", "f2"};
  for (std::size_t j = 0; j < stations; ++j)
    for (std::size_t k = 0; k < frequencies; ++k)
      t.header.push_back("x_" + std::to_string(j + 1) + "_" + std::to_string(k + 1));
  for (std::size_t k = 0; k < frequencies; ++k) t.header.push_back("y_" + std::to_string(k + 1));

  for (const auto& p : f.points) {
    std::vector<std::string> row = {std::to_string(p.budget), format_f1(p.f1),
                                    std::to_string(p.f2)};
    for (auto v : p.assignment.x.data()) row.push_back(std::to_string(v));
    for (int v : p.assignment.y) row.push_back(std::to_string(v));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table frontier_report(const Frontier& f) {
  if (f.points.empty()) return frontier_report(f, 0, 0);
  const auto& x = f.points.front().assignment.x;
  return frontier_report(f, x.rows(), x.cols());
}

std::string format_table(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
  for (const auto& row : t.rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << ' ';
      os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    }
    os << '\n';
  };
  emit(t.header);
  for (const auto& row : t.rows) emit(row);
  return os.str();
}

}  // namespace sarfreq
