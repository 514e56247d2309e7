#ifndef SARFREQ_SENSITIVITY_HPP
#define SARFREQ_SENSITIVITY_HPP

#include <string>
#include <vector>

#include "sarfreq/coeffs.hpp"
#include "sarfreq/model.hpp"

namespace sarfreq {

struct WeightSequence {
  std::string label;
  std::vector<double> u;
};

/// Throws InputError naming the label if `seq` does not fit `s`.
void validate_sequence(const WeightSequence& seq, const Scenario& s);

struct SequenceOutcome {
  std::string label;
  Assignment assignment;
  double f1 = 0.0;
};

struct Disagreement {
  std::size_t first;   // index into outcomes
  std::size_t second;  // index into outcomes, > first
};

struct InvarianceReport {
  int budget = 0;
  std::vector<SequenceOutcome> outcomes;  // input order
  bool all_assignments_identical = true;
  std::vector<Disagreement> disagreements;  // every pair whose x differs
};

/// Rebuilds the coefficients from the probability tables for each weight
/// vector and solves at `budget`. "Identical" compares x matrices exactly.
InvarianceReport weight_sequence_study(const Scenario& s, const std::vector<WeightSequence>& seqs,
                                       int budget, unsigned workers = 1);

struct SensitivityRange {
  int transmitter = 0;
  double original_value = 0.0;
  double low = 0.0;
  double high = 0.0;
  int budget = 0;
};

/// Interval of U[transmitter] over which the optimal x at `budget` stays the
/// baseline one. Only that weight moves; the others are held fixed and not
/// renormalized. Each side is bisected, re-solving at every probe, until the
/// bracket is narrower than `tol`. The search is clamped to [0, 1].
SensitivityRange weight_range(const Scenario& s, int budget, int transmitter, double tol);

}  // namespace sarfreq

#endif  // SARFREQ_SENSITIVITY_HPP
