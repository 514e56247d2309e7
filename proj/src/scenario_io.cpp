#include "sarfreq/scenario_io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace sarfreq {

using nlohmann::json;

namespace {

constexpr std::array kScenarioKeys = {
    "num_transmitters", "num_stations",     "num_frequencies", "emission_prob",
    "acquisition_prob", "bearing_prob",     "weights",         "station_capacity",
    "total_receivers",  "fair_share",       "min_coverage",    "coefficients",
};

// Byte offset -> "line L, column C" (both 1-based).
std::string locate(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t n = 0; n < offset; ++n) {
    if (text[n] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    throw InputError(std::string(what) + " parse error at " + locate(text, at) + ": " +
                     e.what());
  }
}

template <typename T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw InputError("field '" + key + "': " + e.what());
  }
}

Matrix<double> get_matrix(const json& j, const std::string& key, std::size_t rows,
                          std::size_t cols) {
  const auto v = get_as<std::vector<std::vector<double>>>(j, key);
  if (v.size() != rows) throw InputError("dimension mismatch in " + key);
  for (const auto& r : v)
    if (r.size() != cols) throw InputError("dimension mismatch in " + key);
  Matrix<double> m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r][c];
  return m;
}

Tensor3 get_tensor(const json& j, const std::string& key, std::size_t d0, std::size_t d1,
                   std::size_t d2) {
  const auto v = get_as<std::vector<std::vector<std::vector<double>>>>(j, key);
  if (v.size() != d0) throw InputError("dimension mismatch in " + key);
  Tensor3 t(d0, d1, d2);
  for (std::size_t a = 0; a < d0; ++a) {
    if (v[a].size() != d1) throw InputError("dimension mismatch in " + key);
    for (std::size_t b = 0; b < d1; ++b) {
      if (v[a][b].size() != d2) throw InputError("dimension mismatch in " + key);
      for (std::size_t c = 0; c < d2; ++c) t(a, b, c) = v[a][b][c];
    }
  }
  return t;
}

}  // namespace

CoefficientMatrix ScenarioFile::effective_coefficients() const {
  return coefficients ? *coefficients : compute_coefficients(scenario);
}

ScenarioFile parse_scenario(const std::string& text) {
  const json j = parse_json(text, "scenario");
  if (!j.is_object()) throw InputError("scenario must be a JSON object");

  std::vector<std::string> unknown;
  for (const auto& [key, value] : j.items())
    if (std::find(kScenarioKeys.begin(), kScenarioKeys.end(), key) == kScenarioKeys.end())
      unknown.push_back(key);
  if (!unknown.empty()) {
    std::string msg = "unknown key(s):";
    for (const auto& k : unknown) msg += " '" + k + "'";
    throw InputError(msg);
  }

  ScenarioFile file;
  Scenario& s = file.scenario;
  s.num_transmitters = get_as<int>(j, "num_transmitters");
  s.num_stations = get_as<int>(j, "num_stations");
  s.num_frequencies = get_as<int>(j, "num_frequencies");
  if (s.num_transmitters < 1 || s.num_stations < 1 || s.num_frequencies < 1)
    throw InputError("dimensions must be positive");
  const auto I = static_cast<std::size_t>(s.num_transmitters);
  const auto J = static_cast<std::size_t>(s.num_stations);
  const auto K = static_cast<std::size_t>(s.num_frequencies);

  s.emission_prob = get_matrix(j, "emission_prob", I, K);
  s.acquisition_prob = get_tensor(j, "acquisition_prob", I, J, K);
  s.bearing_prob = get_matrix(j, "bearing_prob", I, J);
  s.weights = get_as<std::vector<double>>(j, "weights");

  if (j.contains("station_capacity"))
    s.station_capacity = get_as<std::vector<int>>(j, "station_capacity");
  else
    s.station_capacity.assign(J, kMaxStationCapacity);
  if (j.contains("total_receivers")) s.total_receivers = get_as<int>(j, "total_receivers");
  if (j.contains("fair_share"))
    s.fair_share = get_as<int>(j, "fair_share");
  else if (s.total_receivers)
    s.fair_share = fair_share_default(*s.total_receivers, s.num_frequencies);
  else
    throw InputError("fair_share required or derivable from total_receivers");
  if (j.contains("min_coverage")) s.min_coverage = get_as<int>(j, "min_coverage");

  if (j.contains("coefficients"))
    file.coefficients = CoefficientMatrix(get_matrix(j, "coefficients", J, K));

  auto report = validate_scenario(s);
  if (file.coefficients)
    for (std::size_t r = 0; r < J; ++r)
      for (std::size_t c = 0; c < K; ++c)
        if (!((*file.coefficients)(r, c) >= 0.0))
          report.violations.push_back("negative coefficient at c[" + std::to_string(r) + "][" +
                                      std::to_string(c) + "]");
  if (!report.passed()) throw InputError("invalid scenario: " + report.summary());
  return file;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  try {
    return parse_scenario(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string dump_scenario(const ScenarioFile& file) {
  const Scenario& s = file.scenario;
  std::vector<std::vector<std::vector<double>>> acq(
      s.acquisition_prob.dim0(),
      std::vector<std::vector<double>>(s.acquisition_prob.dim1(),
                                       std::vector<double>(s.acquisition_prob.dim2())));
  for (std::size_t a = 0; a < acq.size(); ++a)
    for (std::size_t b = 0; b < acq[a].size(); ++b)
      for (std::size_t c = 0; c < acq[a][b].size(); ++c) acq[a][b][c] = s.acquisition_prob(a, b, c);

  // ordered_json keeps the documented key order in the output.
  nlohmann::ordered_json j;
  j["num_transmitters"] = s.num_transmitters;
  j["num_stations"] = s.num_stations;
  j["num_frequencies"] = s.num_frequencies;
  j["emission_prob"] = s.emission_prob.to_rows();
  j["acquisition_prob"] = acq;
  j["bearing_prob"] = s.bearing_prob.to_rows();
  j["weights"] = s.weights;
  j["station_capacity"] = s.station_capacity;
  if (s.total_receivers) j["total_receivers"] = *s.total_receivers;
  j["fair_share"] = s.fair_share;
  j["min_coverage"] = s.min_coverage;
  if (file.coefficients) j["coefficients"] = file.coefficients->to_rows();
  return j.dump(2) + "\n";
}

void save_scenario(const ScenarioFile& file, const std::filesystem::path& path) {
  write_text_file(path, dump_scenario(file));
}

std::vector<WeightSequence> parse_sequences(const std::string& text) {
  const json j = parse_json(text, "sequences");
  if (!j.is_array()) throw InputError("sequences file must be a JSON array");
  std::vector<WeightSequence> out;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const auto& item = j[n];
    if (!item.is_object()) throw InputError("sequence #" + std::to_string(n) + " is not an object");
    for (const auto& [key, value] : item.items())
      if (key != "label" && key != "weights")
        throw InputError("sequence #" + std::to_string(n) + ": unknown key '" + key + "'");
    WeightSequence seq;
    seq.label = item.contains("label") ? get_as<std::string>(item, "label")
                                       : "#" + std::to_string(n);
    seq.u = get_as<std::vector<double>>(item, "weights");
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<WeightSequence> load_sequences(const std::filesystem::path& path) {
  try {
    return parse_sequences(read_text_file(path));
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out.flush()) throw InputError("write failed for " + path.string());
}

}  // namespace sarfreq
