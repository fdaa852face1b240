#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "namegame/game.hpp"

namespace namegame {

struct MethodSettings {
  std::optional<int> n_exchanges;
  std::optional<int> chain_length;
};

// Full description of a benchmark run: dataset choice, method list, game
// shape, priors, and output options.  Loadable from a key = value file with
// optional [method.<name>] sections; any key can also be set from the
// command line.
struct ExperimentConfig {
  std::string dataset = "synthetic";  // synthetic | partial_view | csv
  int n_per_cluster = 200;
  std::string feature_file;

  std::vector<Method> methods = {Method::kRmhng};
  int n_signs = 5;
  int iterations = 100;
  int trials = 5;
  int window = 10;
  std::uint64_t seed = 1;

  double alpha_bar = 1.0;
  double nu = 1.0;
  double w_scale = 0.01;

  std::optional<int> n_exchanges;  // global T override
  std::optional<int> chain_length; // global M override
  std::map<std::string, MethodSettings> method_settings;

  bool shuffle_per_object = false;
  bool use_fleiss = false;
  bool agent_average_agreement = false;
  bool compute_agreement = true;
  bool emit_plots = false;
  std::string out_dir = "out";
  double time_budget_seconds = 600.0;

  void validate() const;
};

ExperimentConfig load_config_file(const std::string& path);

// Apply one key = value pair; keys match the config file vocabulary, with
// method.<name>.<key> reaching the per-method sections.  Throws ConfigError
// on unknown keys or bad values.
void apply_config_override(ExperimentConfig& cfg, const std::string& key,
                           const std::string& value);

}  // namespace namegame
