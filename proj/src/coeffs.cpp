#include "sarfreq/coeffs.hpp"

#include <algorithm>
#include <string>

namespace sarfreq {

int Assignment::coverage(std::size_t k) const {
  int n = 0;
  for (std::size_t j = 0; j < x.rows(); ++j) n += x(j, k);
  return n;
}

int Assignment::total_assigned() const {
  int n = 0;
  for (auto v : x.data()) n += v;
  return n;
}

Assignment Assignment::with_minimal_excess(BinaryMatrix x, int fair_share) {
  auto ex = excess(x, fair_share);
  return Assignment{std::move(x), std::move(ex.y)};
}

CoefficientMatrix compute_coefficients(const Scenario& s) {
  return compute_coefficients(s, s.weights);
}

CoefficientMatrix compute_coefficients(const Scenario& s, std::span<const double> weights) {
  const auto I = static_cast<std::size_t>(s.num_transmitters);
  const auto J = static_cast<std::size_t>(s.num_stations);
  const auto K = static_cast<std::size_t>(s.num_frequencies);
  auto mismatch = [](const char* table) {
    throw InputError(std::string("dimension mismatch in ") + table);
  };
  if (s.emission_prob.rows() != I || s.emission_prob.cols() != K) mismatch("emission_prob");
  if (s.acquisition_prob.dim0() != I || s.acquisition_prob.dim1() != J ||
      s.acquisition_prob.dim2() != K)
    mismatch("acquisition_prob");
  if (s.bearing_prob.rows() != I || s.bearing_prob.cols() != J) mismatch("bearing_prob");
  if (weights.size() != I) mismatch("weights");

  CoefficientMatrix c(J, K);
  for (std::size_t j = 0; j < J; ++j) {
    for (std::size_t k = 0; k < K; ++k) {
      double sum = 0.0;
      for (std::size_t i = 0; i < I; ++i)
        sum += weights[i] * s.bearing_prob(i, j) * s.emission_prob(i, k) *
               s.acquisition_prob(i, j, k);
      c(j, k) = sum;
    }
  }
  return c;
}

double objective1(const BinaryMatrix& x, const CoefficientMatrix& c) {
  double sum = 0.0;
  for (std::size_t j = 0; j < x.rows(); ++j)
    for (std::size_t k = 0; k < x.cols(); ++k) sum += c(j, k) * x(j, k);
  return sum;
}

double objective1(const Assignment& a, const CoefficientMatrix& c) { return objective1(a.x, c); }

ExcessResult excess(const BinaryMatrix& x, int fair_share) {
  ExcessResult r;
  r.y.assign(x.cols(), 0);
  for (std::size_t k = 0; k < x.cols(); ++k) {
    int cov = 0;
    for (std::size_t j = 0; j < x.rows(); ++j) cov += x(j, k);
    r.y[k] = std::max(0, cov - fair_share);
    r.f2 -= r.y[k];
  }
  return r;
}

}  // namespace sarfreq
