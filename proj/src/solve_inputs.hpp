#ifndef SARFREQ_SRC_SOLVE_INPUTS_HPP
#define SARFREQ_SRC_SOLVE_INPUTS_HPP

#include "sarfreq/coeffs.hpp"
#include "sarfreq/model.hpp"
#include "sarfreq/solver.hpp"

namespace sarfreq::detail {

/// Shared precondition checks for solve_budgeted and brute_force_oracle.
void check_solve_inputs(const Scenario& s, const CoefficientMatrix& c, int budget);

/// Packs a row-major 0/1 vector into a SolveResult with minimal y.
SolveResult make_result(const Scenario& s, const CoefficientMatrix& c,
                        const std::vector<std::uint8_t>& bits, std::int64_t nodes);

}  // namespace sarfreq::detail

#endif  // SARFREQ_SRC_SOLVE_INPUTS_HPP
