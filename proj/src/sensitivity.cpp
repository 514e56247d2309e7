#include "sarfreq/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <future>
#include <numeric>

#include "sarfreq/solver.hpp"

namespace sarfreq {

void validate_sequence(const WeightSequence& seq, const Scenario& s) {
  if (seq.u.size() != static_cast<std::size_t>(s.num_transmitters))
    throw InputError("weight sequence '" + seq.label + "' has " + std::to_string(seq.u.size()) +
                     " entries, expected " + std::to_string(s.num_transmitters));
  for (double v : seq.u)
    if (!std::isfinite(v) || v < 0.0 || v > 1.0)
      throw InputError("weight sequence '" + seq.label + "' has an entry outside [0,1]");
  const double sum = std::accumulate(seq.u.begin(), seq.u.end(), 0.0);
  if (!(std::abs(sum - 1.0) <= kWeightSumTolerance))
    throw InputError("weight sequence '" + seq.label + "' does not sum to 1 +/- 0.01");
}

InvarianceReport weight_sequence_study(const Scenario& s, const std::vector<WeightSequence>& seqs,
                                       int budget, unsigned workers) {
  for (const auto& seq : seqs) validate_sequence(seq, s);

  InvarianceReport report;
  report.budget = budget;
  report.outcomes.resize(seqs.size());
  auto run_one = [&](std::size_t n) {
    const auto c = compute_coefficients(s, seqs[n].u);
    auto r = solve_budgeted(s, c, budget);
    report.outcomes[n] = SequenceOutcome{seqs[n].label, std::move(r.assignment), r.f1};
  };

  if (workers <= 1 || seqs.size() <= 1) {
    for (std::size_t n = 0; n < seqs.size(); ++n) run_one(n);
  } else {
    const std::size_t lanes = std::min<std::size_t>(workers, seqs.size());
    std::vector<std::future<void>> tasks;
    for (std::size_t lane = 0; lane < lanes; ++lane)
      tasks.push_back(std::async(std::launch::async, [&, lane] {
        for (std::size_t n = lane; n < seqs.size(); n += lanes) run_one(n);
      }));
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

  for (std::size_t a = 0; a < report.outcomes.size(); ++a)
    for (std::size_t b = a + 1; b < report.outcomes.size(); ++b)
      if (report.outcomes[a].assignment.x != report.outcomes[b].assignment.x)
        report.disagreements.push_back({a, b});
  report.all_assignments_identical = report.disagreements.empty();
  return report;
}

namespace {

class WeightProbe {
 public:
  WeightProbe(const Scenario& s, int budget, std::size_t transmitter)
      : s_(s), budget_(budget), transmitter_(transmitter), weights_(s.weights) {}

  BinaryMatrix solve_at(double u) {
    weights_[transmitter_] = u;
    return solve_budgeted(s_, compute_coefficients(s_, weights_), budget_).assignment.x;
  }

 private:
  const Scenario& s_;
  int budget_;
  std::size_t transmitter_;
  std::vector<double> weights_;
};

// Moves from `inside` toward `limit` and returns the last probe known to
// keep the baseline assignment.
double bisect_edge(WeightProbe& probe, const BinaryMatrix& baseline, double inside, double limit,
                   double tol) {
  if (probe.solve_at(limit) == baseline) return limit;
  double outside = limit;
  while (std::abs(outside - inside) > tol) {
    const double mid = 0.5 * (inside + outside);
    if (probe.solve_at(mid) == baseline)
      inside = mid;
    else
      outside = mid;
  }
  return inside;
}

}  // namespace

SensitivityRange weight_range(const Scenario& s, int budget, int transmitter, double tol) {
  if (!(tol > 0.0)) throw InputError("tolerance must be positive");
  if (transmitter < 0 || transmitter >= s.num_transmitters)
    throw InputError("transmitter index " + std::to_string(transmitter) + " out of range");

  const auto i = static_cast<std::size_t>(transmitter);
  const double original = s.weights.at(i);
  const auto baseline = solve_budgeted(s, compute_coefficients(s), budget).assignment.x;

  WeightProbe probe(s, budget, i);
  SensitivityRange r;
  r.transmitter = transmitter;
  r.original_value = original;
  r.budget = budget;
  r.low = bisect_edge(probe, baseline, original, 0.0, tol);
  r.high = bisect_edge(probe, baseline, original, 1.0, tol);
  return r;
}

}  // namespace sarfreq
