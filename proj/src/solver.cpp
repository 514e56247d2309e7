#include "sarfreq/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "solve_inputs.hpp"

namespace sarfreq {

namespace detail {

void check_solve_inputs(const Scenario& s, const CoefficientMatrix& c, int budget) {
  require_valid(s);
  if (c.stations() != static_cast<std::size_t>(s.num_stations) ||
      c.frequencies() != static_cast<std::size_t>(s.num_frequencies))
    throw InputError("dimension mismatch in coefficients");
  for (double v : c.data())
    if (!std::isfinite(v) || v < 0.0) throw InputError("coefficients must be finite and >= 0");
  const int max_budget = max_excess_budget(s);
  if (budget < 0 || budget > max_budget)
    throw InputError("budget out of range [0," + std::to_string(max_budget) + "]");
}

SolveResult make_result(const Scenario& s, const CoefficientMatrix& c,
                        const std::vector<std::uint8_t>& bits, std::int64_t nodes) {
  BinaryMatrix x(static_cast<std::size_t>(s.num_stations),
                 static_cast<std::size_t>(s.num_frequencies));
  x.data() = bits;
  SolveResult r;
  r.assignment = Assignment::with_minimal_excess(std::move(x), s.fair_share);
  r.f1 = objective1(r.assignment, c);
  r.f2 = -std::accumulate(r.assignment.y.begin(), r.assignment.y.end(), 0);
  r.optimal = true;
  r.nodes_explored = nodes;
  return r;
}

}  // namespace detail

namespace {

// Depth-first search over the J*K binary variables in row-major order.
//
// The running objective is accumulated in exactly the order objective1 uses,
// so the incumbent value is bit-identical to a from-scratch evaluation. Ties
// are resolved by comparing the row-major bit vectors at the leaves.
class BranchAndBound {
 public:
  BranchAndBound(const Scenario& s, const CoefficientMatrix& c, int budget)
      : s_(s),
        c_(c),
        budget_(budget),
        J_(static_cast<std::size_t>(s.num_stations)),
        K_(static_cast<std::size_t>(s.num_frequencies)),
        bits_(J_ * K_, 0),
        coverage_(K_, 0),
        load_(J_, 0),
        column_order_(K_) {
    for (std::size_t k = 0; k < K_; ++k) {
      auto& order = column_order_[k];
      order.resize(J_);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return c_(a, k) > c_(b, k); });
    }
    scratch_.reserve(J_ * K_);
  }

  void run() { search(0, 0.0); }

  bool found() const { return found_; }
  const std::vector<std::uint8_t>& best_bits() const { return best_bits_; }
  std::int64_t nodes() const { return nodes_; }

 private:
  int capacity(std::size_t j) const { return s_.station_capacity[j]; }

  int receivers_left() const {
    return s_.total_receivers ? *s_.total_receivers - total_ : std::numeric_limits<int>::max();
  }

  bool undecided(std::size_t j, std::size_t k, std::size_t pos) const { return j * K_ + k >= pos; }

  // Can every frequency still reach min_coverage from the undecided variables?
  bool coverage_reachable(std::size_t pos) const {
    long deficit_total = 0;
    for (std::size_t k = 0; k < K_; ++k) {
      const int deficit = s_.min_coverage - coverage_[k];
      if (deficit <= 0) continue;
      int available = 0;
      for (std::size_t j = 0; j < J_; ++j)
        if (undecided(j, k, pos) && load_[j] < capacity(j)) ++available;
      if (available < deficit) return false;
      deficit_total += deficit;
    }
    return deficit_total <= receivers_left();
  }

  // Upper bound on the objective still obtainable from undecided variables.
  //
  // Per frequency, the first (FS - coverage) picks are free and every further
  // pick consumes one unit of the remaining excess budget. Station capacity
  // is relaxed to "has at least one slot left". The relaxation is a laminar
  // cardinality system (all picks <= receivers left, budget picks <= budget
  // left), for which taking items greedily by value is optimal.
  double bound(std::size_t pos) {
    scratch_.clear();
    for (std::size_t k = 0; k < K_; ++k) {
      int free_slots = std::max(0, s_.fair_share - coverage_[k]);
      for (std::size_t j : column_order_[k]) {
        const double v = c_(j, k);
        if (v <= 0.0) break;
        if (!undecided(j, k, pos) || load_[j] >= capacity(j)) continue;
        scratch_.emplace_back(v, free_slots == 0);
        if (free_slots > 0) --free_slots;
      }
    }
    std::sort(scratch_.begin(), scratch_.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    int picks_left = receivers_left();
    int budget_left = budget_ - excess_;
    double sum = 0.0;
    for (const auto& [v, costs_budget] : scratch_) {
      if (picks_left == 0) break;
      if (costs_budget) {
        if (budget_left == 0) continue;
        --budget_left;
      }
      sum += v;
      --picks_left;
    }
    return sum;
  }

  void consider_leaf(double value) {
    for (std::size_t k = 0; k < K_; ++k)
      if (coverage_[k] < s_.min_coverage) return;
    if (!found_ || value > best_value_ ||
        (value == best_value_ && std::lexicographical_compare(bits_.begin(), bits_.end(),
                                                              best_bits_.begin(),
                                                              best_bits_.end()))) {
      found_ = true;
      best_value_ = value;
      best_bits_ = bits_;
    }
  }

  void search(std::size_t pos, double value) {
    ++nodes_;
    if (pos == bits_.size()) {
      consider_leaf(value);
      return;
    }
    if (!coverage_reachable(pos)) return;
    // The slack keeps rounding in the bound from cutting off a leaf that ties
    // or beats the incumbent.
    if (found_ && value + bound(pos) < best_value_ - 1e-10 * best_value_) return;

    const std::size_t j = pos / K_;
    const std::size_t k = pos % K_;
    const bool adds_excess = coverage_[k] >= s_.fair_share;
    if (load_[j] < capacity(j) && receivers_left() > 0 && (!adds_excess || excess_ < budget_)) {
      bits_[pos] = 1;
      ++coverage_[k];
      ++load_[j];
      ++total_;
      if (adds_excess) ++excess_;
      search(pos + 1, value + c_(j, k));
      if (adds_excess) --excess_;
      --total_;
      --load_[j];
      --coverage_[k];
      bits_[pos] = 0;
    }
    search(pos + 1, value);
  }

  const Scenario& s_;
  const CoefficientMatrix& c_;
  const int budget_;
  const std::size_t J_;
  const std::size_t K_;

  std::vector<std::uint8_t> bits_;
  std::vector<int> coverage_;
  std::vector<int> load_;
  int total_ = 0;
  int excess_ = 0;

  std::vector<std::vector<std::size_t>> column_order_;
  std::vector<std::pair<double, bool>> scratch_;

  bool found_ = false;
  double best_value_ = 0.0;
  std::vector<std::uint8_t> best_bits_;
  std::int64_t nodes_ = 0;
};

}  // namespace

SolveResult solve_budgeted(const Scenario& s, const CoefficientMatrix& c, int budget) {
  detail::check_solve_inputs(s, c, budget);
  BranchAndBound bb(s, c, budget);
  bb.run();
  if (!bb.found()) throw InfeasibleError("no feasible assignment");
  return detail::make_result(s, c, bb.best_bits(), bb.nodes());
}

}  // namespace sarfreq
