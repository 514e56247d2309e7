#include "sarfreq/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace sarfreq {

namespace {

std::string index_label(const char* table, std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  os << table;
  for (std::size_t v : idx) os << '[' << v << ']';
  return os.str();
}

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

}  // namespace

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

ValidationReport validate_scenario(const Scenario& s) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  if (s.num_transmitters < 1) fail("num_transmitters must be positive");
  if (s.num_stations < 1) fail("num_stations must be positive");
  if (s.num_frequencies < 1) fail("num_frequencies must be positive");
  if (!report.passed()) return report;

  const auto I = static_cast<std::size_t>(s.num_transmitters);
  const auto J = static_cast<std::size_t>(s.num_stations);
  const auto K = static_cast<std::size_t>(s.num_frequencies);

  bool shapes_ok = true;
  if (s.emission_prob.rows() != I || s.emission_prob.cols() != K) {
    fail("dimension mismatch in emission_prob: expected " + std::to_string(I) + "x" +
         std::to_string(K));
    shapes_ok = false;
  }
  if (s.acquisition_prob.dim0() != I || s.acquisition_prob.dim1() != J ||
      s.acquisition_prob.dim2() != K) {
    fail("dimension mismatch in acquisition_prob: expected " + std::to_string(I) + "x" +
         std::to_string(J) + "x" + std::to_string(K));
    shapes_ok = false;
  }
  if (s.bearing_prob.rows() != I || s.bearing_prob.cols() != J) {
    fail("dimension mismatch in bearing_prob: expected " + std::to_string(I) + "x" +
         std::to_string(J));
    shapes_ok = false;
  }
  if (s.weights.size() != I) {
    fail("dimension mismatch in weights: expected " + std::to_string(I));
    shapes_ok = false;
  }
  if (s.station_capacity.size() != J) {
    fail("dimension mismatch in station_capacity: expected " + std::to_string(J));
    shapes_ok = false;
  }

  if (shapes_ok) {
    for (std::size_t i = 0; i < I; ++i)
      for (std::size_t k = 0; k < K; ++k)
        if (!is_probability(s.emission_prob(i, k)))
          fail("probability out of range at " + index_label("F", {i, k}));
    for (std::size_t i = 0; i < I; ++i)
      for (std::size_t j = 0; j < J; ++j)
        for (std::size_t k = 0; k < K; ++k)
          if (!is_probability(s.acquisition_prob(i, j, k)))
            fail("probability out of range at " + index_label("P", {i, j, k}));
    for (std::size_t i = 0; i < I; ++i)
      for (std::size_t j = 0; j < J; ++j)
        if (!is_probability(s.bearing_prob(i, j)))
          fail("probability out of range at " + index_label("W", {i, j}));
    for (std::size_t i = 0; i < I; ++i)
      if (!is_probability(s.weights[i]))
        fail("weight out of range at " + index_label("U", {i}));
    const double wsum = std::accumulate(s.weights.begin(), s.weights.end(), 0.0);
    if (!(std::abs(wsum - 1.0) <= kWeightSumTolerance))
      fail("weights sum to " + std::to_string(wsum) + ", outside 1 +/- 0.01");
    for (std::size_t j = 0; j < J; ++j) {
      const int m = s.station_capacity[j];
      if (m < 0 || m > kMaxStationCapacity)
        fail("station capacity out of range [0,10] at " + index_label("m", {j}));
    }
  }

  if (s.fair_share < 1) fail("fair_share must be >= 1");
  if (s.min_coverage < 0) fail("min_coverage must be >= 0");
  if (s.total_receivers && *s.total_receivers < 0) fail("total_receivers must be >= 0");

  if (shapes_ok && s.min_coverage >= 0) {
    const int reachable = reachable_stations(s);
    if (reachable < s.min_coverage)
      fail("coverage infeasible for every k: " + std::to_string(reachable) +
           " station(s) with capacity, min_coverage " + std::to_string(s.min_coverage));
    if (s.total_receivers && *s.total_receivers >= 0 &&
        static_cast<long>(*s.total_receivers) <
            static_cast<long>(s.min_coverage) * s.num_frequencies)
      fail("total_receivers " + std::to_string(*s.total_receivers) +
           " cannot give every frequency min_coverage " + std::to_string(s.min_coverage));
  }
  return report;
}

void require_valid(const Scenario& s) {
  const auto report = validate_scenario(s);
  if (!report.passed()) throw InputError("invalid scenario: " + report.summary());
}

int fair_share_default(int total_receivers, int num_frequencies) {
  if (num_frequencies == 0) throw InputError("zero frequencies");
  if (num_frequencies < 0) throw InputError("negative frequency count");
  if (total_receivers < 0) throw InputError("negative total_receivers");
  return (total_receivers + num_frequencies - 1) / num_frequencies;
}

int reachable_stations(const Scenario& s) {
  return static_cast<int>(std::count_if(s.station_capacity.begin(), s.station_capacity.end(),
                                        [](int m) { return m >= 1; }));
}

int max_excess_budget(const Scenario& s) {
  int per_frequency = reachable_stations(s);
  if (s.total_receivers) per_frequency = std::min(per_frequency, *s.total_receivers);
  return s.num_frequencies * std::max(0, per_frequency - s.fair_share);
}

}  // namespace sarfreq
