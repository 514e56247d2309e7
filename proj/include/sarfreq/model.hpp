#ifndef SARFREQ_MODEL_HPP
#define SARFREQ_MODEL_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sarfreq {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad dimensions, out-of-range parameters, parse failures.
class InputError : public Error {
 public:
  using Error::Error;
};

/// The constraint system admits no assignment.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// Dense row-major matrix with value semantics.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw InputError("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<T>& data() const { return data_; }
  std::vector<T>& data() { return data_; }

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out(rows_, std::vector<T>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out[r][c] = (*this)(r, c);
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Dense rank-3 tensor indexed [a][b][c].
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t d0, std::size_t d1, std::size_t d2, double fill = 0.0)
      : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2, fill) {}

  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }

  double& operator()(std::size_t a, std::size_t b, std::size_t c) {
    return data_[(a * d1_ + b) * d2_ + c];
  }
  double operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return data_[(a * d1_ + b) * d2_ + c];
  }

  const std::vector<double>& data() const { return data_; }

  bool operator==(const Tensor3&) const = default;

 private:
  std::size_t d0_ = 0;
  std::size_t d1_ = 0;
  std::size_t d2_ = 0;
  std::vector<double> data_;
};

inline constexpr int kMaxStationCapacity = 10;
inline constexpr int kDefaultMinCoverage = 2;
inline constexpr double kWeightSumTolerance = 0.01;

/// A receiver-to-frequency assignment instance.
///
/// Indices: i = transmitter area, j = receiving station, k = frequency band.
/// Treated as immutable once built; share freely across threads.
struct Scenario {
  int num_transmitters = 0;
  int num_stations = 0;
  int num_frequencies = 0;
  Matrix<double> emission_prob;  // [i][k]
  Tensor3 acquisition_prob;      // [i][j][k]
  Matrix<double> bearing_prob;   // [i][j]
  std::vector<double> weights;   // [i]
  std::vector<int> station_capacity;  // [j]
  std::optional<int> total_receivers;
  int fair_share = 1;
  int min_coverage = kDefaultMinCoverage;

  bool operator==(const Scenario&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
  /// All violations joined with "; ".
  std::string summary() const;
};

ValidationReport validate_scenario(const Scenario& s);

/// Throws InputError carrying the full report when `s` does not validate.
void require_valid(const Scenario& s);

/// ceil(total_receivers / num_frequencies).
int fair_share_default(int total_receivers, int num_frequencies);

/// Largest total excess coverage any assignment could reach; the upper end of
/// the budget sweep.
int max_excess_budget(const Scenario& s);

/// Number of stations that can host at least one receiver assignment.
int reachable_stations(const Scenario& s);

}  // namespace sarfreq

#endif  // SARFREQ_MODEL_HPP
