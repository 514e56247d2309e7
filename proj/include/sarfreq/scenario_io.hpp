#ifndef SARFREQ_SCENARIO_IO_HPP
#define SARFREQ_SCENARIO_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sarfreq/coeffs.hpp"
#include "sarfreq/model.hpp"
#include "sarfreq/sensitivity.hpp"

namespace sarfreq {

/// Contents of a scenario file. `coefficients`, when present, replaces
/// compute_coefficients for this instance.
struct ScenarioFile {
  Scenario scenario;
  std::optional<CoefficientMatrix> coefficients;

  /// The explicit block if present, otherwise computed from the tables.
  CoefficientMatrix effective_coefficients() const;

  bool operator==(const ScenarioFile&) const = default;
};

/// Parses scenario JSON. Unknown keys are rejected, parse errors carry
/// line/column, and validation failures are listed in full. All as InputError.
ScenarioFile parse_scenario(const std::string& text);
ScenarioFile load_scenario(const std::filesystem::path& path);

/// Serializes with every optional field written explicitly.
std::string dump_scenario(const ScenarioFile& file);
void save_scenario(const ScenarioFile& file, const std::filesystem::path& path);

/// Weight-sequence file: [{"label": "...", "weights": [...]}, ...]
std::vector<WeightSequence> parse_sequences(const std::string& text);
std::vector<WeightSequence> load_sequences(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace sarfreq

#endif  // SARFREQ_SCENARIO_IO_HPP
