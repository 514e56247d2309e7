#include <algorithm>
#include <string>

#include "sarfreq/solver.hpp"

namespace sarfreq {

const char* to_string(ConstraintId id) {
  switch (id) {
    case ConstraintId::kStationCapacity: return "station_capacity";
    case ConstraintId::kTotalReceivers: return "total_receivers";
    case ConstraintId::kMinCoverage: return "min_coverage";
    case ConstraintId::kExcessBudget: return "budget";
  }
  return "unknown";
}

FeasibilityReport check_feasible(const BinaryMatrix& x, const Scenario& s, int budget) {
  const auto J = static_cast<std::size_t>(s.num_stations);
  const auto K = static_cast<std::size_t>(s.num_frequencies);
  if (x.rows() != J || x.cols() != K) throw InputError("assignment dimension mismatch");

  FeasibilityReport report;
  int total = 0;
  for (std::size_t j = 0; j < J; ++j) {
    int load = 0;
    for (std::size_t k = 0; k < K; ++k) load += x(j, k);
    total += load;
    const int slack = s.station_capacity[j] - load;
    if (slack < 0)
      report.violations.push_back({ConstraintId::kStationCapacity, static_cast<int>(j), slack});
  }
  if (s.total_receivers && total > *s.total_receivers)
    report.violations.push_back(
        {ConstraintId::kTotalReceivers, std::nullopt, *s.total_receivers - total});

  int total_excess = 0;
  for (std::size_t k = 0; k < K; ++k) {
    int cov = 0;
    for (std::size_t j = 0; j < J; ++j) cov += x(j, k);
    const int slack = cov - s.min_coverage;
    if (slack < 0)
      report.violations.push_back({ConstraintId::kMinCoverage, static_cast<int>(k), slack});
    total_excess += std::max(0, cov - s.fair_share);
  }
  if (total_excess > budget)
    report.violations.push_back({ConstraintId::kExcessBudget, std::nullopt, budget - total_excess});
  return report;
}

FeasibilityReport check_feasible(const Assignment& a, const Scenario& s, int budget) {
  return check_feasible(a.x, s, budget);
}

}  // namespace sarfreq
