#include "twopart/bench/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace twopart::bench {

using nlohmann::json;

namespace {

const std::set<std::string, std::less<>> kKnownKeys = {
    "mode",           "n",
    "k",              "m_over_n_grid",
    "c1",             "c2",
    "calibration_target", "calibration_trials",
    "epsilon_rule",   "epsilon_value",
    "noise_variance", "zero_threshold",
    "iteration_budgets", "trials_per_point",
    "base_seed",      "output_path",
    "step_size",      "precision",
    "threads",        "record_runtime",
    "redraw_signal",
};

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

std::size_t get_count(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ConfigError(std::string("config key '") + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::optional<double> number_or_calibrate(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_string() && v.get<std::string>() == "calibrate") return std::nullopt;
  if (!v.is_number()) {
    throw ConfigError(std::string("config key '") + key + "' must be a number or \"calibrate\"");
  }
  return v.get<double>();
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::noiseless ? "noiseless" : "noisy"; }

double SweepConfig::noise_std() const { return std::sqrt(noise_variance); }

double SweepConfig::epsilon() const {
  return epsilon_rule == EpsilonRule::absolute ? epsilon_value : epsilon_value * noise_std();
}

void SweepConfig::validate() const {
  const auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (k < 1 || k > n) fail("need 1 <= k <= n");
  if (m_over_n_grid.empty()) fail("m_over_n_grid must not be empty");
  for (double r : m_over_n_grid) {
    if (!(r >= 0.0 && r <= 2.0)) fail("m_over_n_grid values must lie in [0, 2]");
  }
  if (c1 && !(*c1 > 0.0)) fail("c1 must be positive");
  if (c2 && !(*c2 > 0.0 && *c2 / static_cast<double>(k) <= 1.0)) {
    fail("c2 must be positive with c2 / k <= 1");
  }
  if (!(calibration_target > 0.0 && calibration_target < 1.0)) {
    fail("calibration_target must lie in (0, 1)");
  }
  if (calibration_trials < 1) fail("calibration_trials must be at least 1");
  if (!(epsilon_value >= 0.0)) fail("epsilon_value must be nonnegative");
  if (!(noise_variance >= 0.0)) fail("noise_variance must be nonnegative");
  if (mode == Mode::noiseless && noise_variance != 0.0) {
    fail("noiseless mode requires noise_variance = 0");
  }
  if (mode == Mode::noisy && noise_variance == 0.0) fail("noisy mode requires noise_variance > 0");
  if (mode == Mode::noisy && epsilon() <= 0.0) fail("noisy mode requires epsilon > 0");
  if (zero_threshold < 1) fail("zero_threshold must be at least 1");
  if (iteration_budgets.empty()) fail("iteration_budgets must not be empty");
  for (auto b : iteration_budgets) {
    if (b < 1) fail("iteration budgets must be at least 1");
  }
  if (trials_per_point < 1) fail("trials_per_point must be at least 1");
  if (step_size && !(*step_size > 0.0)) fail("step_size must be positive");
  if (threads < 1) fail("threads must be at least 1");
  if (threads > 1 && record_runtime) {
    fail("timed sweeps run one cell at a time; set record_runtime = false to use threads > 1");
  }
  if (output_path.empty()) fail("output_path must not be empty");
}

SweepConfig parse_sweep_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!kKnownKeys.contains(key)) throw ConfigError("unknown config key '" + key + "'");
  }

  SweepConfig c;
  if (j.contains("mode")) {
    const auto mode = get_as<std::string>(j, "mode");
    if (mode == "noiseless") {
      c.mode = Mode::noiseless;
    } else if (mode != "noisy") {
      throw ConfigError("mode must be \"noiseless\" or \"noisy\"");
    }
  }
  if (c.mode == Mode::noiseless) {
    c.noise_variance = 0.0;
    c.epsilon_rule = EpsilonRule::absolute;
    c.epsilon_value = 0.0;
    c.zero_threshold = 1;
    c.iteration_budgets = {100};
  }

  if (j.contains("n")) c.n = get_count(j, "n");
  if (j.contains("k")) c.k = get_count(j, "k");
  if (j.contains("m_over_n_grid")) c.m_over_n_grid = get_as<std::vector<double>>(j, "m_over_n_grid");
  if (j.contains("c1")) c.c1 = number_or_calibrate(j, "c1");
  if (j.contains("c2")) c.c2 = number_or_calibrate(j, "c2");
  if (j.contains("calibration_target")) c.calibration_target = get_as<double>(j, "calibration_target");
  if (j.contains("calibration_trials")) c.calibration_trials = get_count(j, "calibration_trials");
  if (j.contains("epsilon_rule")) {
    const auto rule = get_as<std::string>(j, "epsilon_rule");
    if (rule == "absolute") {
      c.epsilon_rule = EpsilonRule::absolute;
    } else if (rule == "noise_std") {
      c.epsilon_rule = EpsilonRule::noise_std;
    } else {
      throw ConfigError("epsilon_rule must be \"absolute\" or \"noise_std\"");
    }
  }
  if (j.contains("epsilon_value")) c.epsilon_value = get_as<double>(j, "epsilon_value");
  if (j.contains("noise_variance")) c.noise_variance = get_as<double>(j, "noise_variance");
  if (j.contains("zero_threshold")) c.zero_threshold = get_count(j, "zero_threshold");
  if (j.contains("iteration_budgets")) {
    c.iteration_budgets.clear();
    for (const auto& v : j.at("iteration_budgets")) {
      if (!v.is_number_integer() || v.get<long long>() < 1) {
        throw ConfigError("iteration_budgets must hold positive integers");
      }
      c.iteration_budgets.push_back(v.get<std::size_t>());
    }
  }
  if (j.contains("trials_per_point")) c.trials_per_point = get_count(j, "trials_per_point");
  if (j.contains("base_seed")) c.base_seed = get_as<std::uint64_t>(j, "base_seed");
  if (j.contains("output_path")) c.output_path = get_as<std::string>(j, "output_path");
  if (j.contains("step_size")) c.step_size = get_as<double>(j, "step_size");
  if (j.contains("precision")) {
    const auto p = get_as<std::string>(j, "precision");
    if (p == "float32") {
      c.precision = Precision::float32;
    } else if (p != "float64") {
      throw ConfigError("precision must be \"float64\" or \"float32\"");
    }
  }
  if (j.contains("threads")) c.threads = get_count(j, "threads");
  if (j.contains("record_runtime")) c.record_runtime = get_as<bool>(j, "record_runtime");
  if (j.contains("redraw_signal")) c.redraw_signal = get_as<bool>(j, "redraw_signal");

  c.validate();
  return c;
}

SweepConfig load_sweep_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_sweep_config(buffer.str());
}

std::string to_canonical_json(const SweepConfig& c) {
  json j;
  j["mode"] = std::string(to_string(c.mode));
  j["n"] = c.n;
  j["k"] = c.k;
  j["m_over_n_grid"] = c.m_over_n_grid;
  j["c1"] = c.c1 ? json(*c.c1) : json("calibrate");
  j["c2"] = c.c2 ? json(*c.c2) : json("calibrate");
  j["calibration_target"] = c.calibration_target;
  j["calibration_trials"] = c.calibration_trials;
  j["epsilon_rule"] = c.epsilon_rule == EpsilonRule::absolute ? "absolute" : "noise_std";
  j["epsilon_value"] = c.epsilon_value;
  j["noise_variance"] = c.noise_variance;
  j["zero_threshold"] = c.zero_threshold;
  j["iteration_budgets"] = c.iteration_budgets;
  j["trials_per_point"] = c.trials_per_point;
  j["base_seed"] = c.base_seed;
  j["output_path"] = c.output_path;
  j["step_size"] = c.step_size ? json(*c.step_size) : json(nullptr);
  j["precision"] = c.precision == Precision::float32 ? "float32" : "float64";
  j["threads"] = c.threads;
  j["record_runtime"] = c.record_runtime;
  j["redraw_signal"] = c.redraw_signal;
  return j.dump();
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace twopart::bench
