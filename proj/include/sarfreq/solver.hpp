#ifndef SARFREQ_SOLVER_HPP
#define SARFREQ_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sarfreq/coeffs.hpp"
#include "sarfreq/model.hpp"

namespace sarfreq {

enum class ConstraintId {
  kStationCapacity,  // Σ_k x[j][k] <= m[j]
  kTotalReceivers,   // Σ x <= TN
  kMinCoverage,      // Σ_j x[j][k] >= min_coverage
  kExcessBudget,     // Σ_k max(0, Σ_j x[j][k] - FS) <= B
};

const char* to_string(ConstraintId id);

struct ConstraintViolation {
  ConstraintId constraint;
  std::optional<int> index;  // station j or frequency k; empty for global rows
  int slack;                 // negative by the amount of violation
};

struct FeasibilityReport {
  std::vector<ConstraintViolation> violations;
  bool feasible() const { return violations.empty(); }
};

FeasibilityReport check_feasible(const BinaryMatrix& x, const Scenario& s, int budget);
FeasibilityReport check_feasible(const Assignment& a, const Scenario& s, int budget);

struct SolveResult {
  Assignment assignment;
  double f1 = 0.0;
  int f2 = 0;
  bool optimal = false;
  std::int64_t nodes_explored = 0;
};

/// Maximizes objective1 subject to the station, total-receiver and coverage
/// constraints with total excess coverage capped at `budget`.
///
/// Branch-and-bound over x in row-major order. Among assignments with equal
/// f1 the lexicographically smallest x (row-major) is returned, so results
/// agree exactly with brute_force_oracle.
///
/// Throws InputError if `budget` is outside [0, max_excess_budget(s)] or the
/// inputs are malformed, InfeasibleError if no assignment satisfies the
/// constraints.
SolveResult solve_budgeted(const Scenario& s, const CoefficientMatrix& c, int budget);

inline constexpr int kOracleMaxVariables = 24;

/// Exhaustive enumeration of all 2^(J*K) matrices. Limited to
/// J*K <= kOracleMaxVariables.
SolveResult brute_force_oracle(const Scenario& s, const CoefficientMatrix& c, int budget);

}  // namespace sarfreq

#endif  // SARFREQ_SOLVER_HPP
