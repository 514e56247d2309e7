#ifndef SARFREQ_COEFFS_HPP
#define SARFREQ_COEFFS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sarfreq/model.hpp"

namespace sarfreq {

/// c[j][k]: expected accurate-LOB contribution of station j covering frequency k.
class CoefficientMatrix : public Matrix<double> {
 public:
  CoefficientMatrix() = default;
  CoefficientMatrix(std::size_t stations, std::size_t frequencies, double fill = 0.0)
      : Matrix<double>(stations, frequencies, fill) {}
  explicit CoefficientMatrix(Matrix<double> m) : Matrix<double>(std::move(m)) {}

  std::size_t stations() const { return rows(); }
  std::size_t frequencies() const { return cols(); }
};

using BinaryMatrix = Matrix<std::uint8_t>;

/// x[j][k] station-to-frequency indicator plus y[k] excess coverage.
struct Assignment {
  BinaryMatrix x;
  std::vector<int> y;

  int coverage(std::size_t k) const;
  int total_assigned() const;

  /// x with y recomputed as the minimal excess vector for `fair_share`.
  static Assignment with_minimal_excess(BinaryMatrix x, int fair_share);

  bool operator==(const Assignment&) const = default;
};

/// Σ_i U[i] W[i][j] F[i][k] P[i][j][k], summed in ascending i.
CoefficientMatrix compute_coefficients(const Scenario& s);

/// Same as above with `weights` substituted for s.weights. The weights are
/// taken as given: no range or normalization check.
CoefficientMatrix compute_coefficients(const Scenario& s, std::span<const double> weights);

/// Σ_j Σ_k c[j][k] x[j][k], j outer and k inner.
double objective1(const BinaryMatrix& x, const CoefficientMatrix& c);
double objective1(const Assignment& a, const CoefficientMatrix& c);

struct ExcessResult {
  std::vector<int> y;
  int f2 = 0;  // -Σ y
};

ExcessResult excess(const BinaryMatrix& x, int fair_share);

}  // namespace sarfreq

#endif  // SARFREQ_COEFFS_HPP
