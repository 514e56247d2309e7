#include <cstdint>
#include <vector>

#include "sarfreq/solver.hpp"
#include "solve_inputs.hpp"

namespace sarfreq {

SolveResult brute_force_oracle(const Scenario& s, const CoefficientMatrix& c, int budget) {
  detail::check_solve_inputs(s, c, budget);
  const auto J = static_cast<std::size_t>(s.num_stations);
  const auto K = static_cast<std::size_t>(s.num_frequencies);
  const std::size_t n = J * K;
  if (n > static_cast<std::size_t>(kOracleMaxVariables)) throw InputError("oracle limit exceeded");

  // Variable v maps to bit (n-1-v), so ascending masks visit x in
  // lexicographic order and the first maximum found is the smallest.
  BinaryMatrix x(J, K);
  bool found = false;
  double best = 0.0;
  std::uint32_t best_mask = 0;
  const std::uint32_t count = std::uint32_t{1} << n;
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    for (std::size_t v = 0; v < n; ++v) x.data()[v] = (mask >> (n - 1 - v)) & 1U;
    if (!check_feasible(x, s, budget).feasible()) continue;
    const double value = objective1(x, c);
    if (!found || value > best) {
      found = true;
      best = value;
      best_mask = mask;
    }
  }
  if (!found) throw InfeasibleError("no feasible assignment");

  std::vector<std::uint8_t> bits(n);
  for (std::size_t v = 0; v < n; ++v) bits[v] = (best_mask >> (n - 1 - v)) & 1U;
  return detail::make_result(s, c, bits, static_cast<std::int64_t>(count));
}

}  // namespace sarfreq
