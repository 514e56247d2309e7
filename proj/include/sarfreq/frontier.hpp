#ifndef SARFREQ_FRONTIER_HPP
#define SARFREQ_FRONTIER_HPP

#include <span>
#include <string>
#include <vector>

#include "sarfreq/coeffs.hpp"
#include "sarfreq/model.hpp"

namespace sarfreq {

/// One nondominated solution. f2 is the negated total excess coverage.
struct NPoint {
  Assignment assignment;
  double f1 = 0.0;
  int f2 = 0;
  int budget = 0;

  bool operator==(const NPoint&) const = default;
};

struct Frontier {
  std::vector<NPoint> points;  // ascending budget
};

/// Inclusive budget range [lo, hi].
struct BudgetRange {
  int lo = 0;
  int hi = 0;
};

/// Solves every budget in `budgets` and keeps the nondominated points.
/// Budgets are independent solves; `workers` > 1 runs them concurrently with
/// identical results. Solver infeasibility aborts the whole sweep.
Frontier sweep(const Scenario& s, const CoefficientMatrix& c, BudgetRange budgets,
               unsigned workers = 1);

/// a dominates b: f1_a >= f1_b and f2_a >= f2_b, one strictly.
bool dominates(const NPoint& a, const NPoint& b);

/// Drops dominated points and later duplicates of (f1, f2); keeps input order.
std::vector<NPoint> dominance_filter(std::span<const NPoint> points);

/// Plain table: budget, f1 (6 dp), f2, flattened x, y.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

Table frontier_report(const Frontier& f, std::size_t stations, std::size_t frequencies);
Table frontier_report(const Frontier& f);  // dimensions from the first point, header-only if empty

/// Fixed-width text rendering of a Table.
std::string format_table(const Table& t);

/// f1 printed the way every table and export shows it.
std::string format_f1(double f1);

}  // namespace sarfreq

#endif  // SARFREQ_FRONTIER_HPP
