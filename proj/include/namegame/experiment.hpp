#pragma once

#include <string>
#include <vector>

#include "namegame/config.hpp"
#include "namegame/dataset.hpp"
#include "namegame/game.hpp"

namespace namegame {

// One summary line: window-averaged scores for a method, either for a single
// agent's table (agent >= 0) or aggregated across agents (agent == -1).
// NaN marks a score that does not apply (no ground truth, single table, or
// no reference run); writers render it as an empty cell.
struct SummaryRow {
  std::string method;
  int agent = -1;
  double ari_mean = 0.0, ari_std = 0.0;
  double kappa_mean = 0.0, kappa_std = 0.0;
  double agreement = 0.0;
};

// Per-iteration trajectory: ARI per agent table, plus the cross-agent kappa
// on the aggregate (agent == -1) lines.
struct IterationRow {
  std::string method;
  int trial = 0;
  int iteration = 0;
  int agent = -1;
  double ari = 0.0;
  double kappa = 0.0;
};

struct TimingRow {
  int n_exchanges = 0;
  int chain_length = 0;
  double seconds_per_iteration = 0.0;
  double exchanges_per_iteration = 0.0;
};

struct ExperimentResult {
  std::vector<SummaryRow> summary;
  std::vector<IterationRow> iterations;
  double total_seconds = 0.0;
  bool within_budget = true;
};

// Dataset for one trial; every trial re-derives its stream from the master
// seed and the trial index alone, so all methods of a trial share data.
Dataset build_dataset(const ExperimentConfig& cfg, int trial);

Hyperparams hyper_for(const ExperimentConfig& cfg, const Dataset& dataset);

std::vector<AgentState> make_agents(const Dataset& dataset, const Hyperparams& hyper);

// Game shape for a method: per-method default T/M, then global overrides,
// then [method.<name>] settings.
GameConfig game_config_for(const ExperimentConfig& cfg, Method method, const Dataset& dataset);

// Full benchmark: every method on every trial, per-iteration metrics, and
// windowed summaries.  When agreement scores are requested the centralized
// reference runs on each trial even if it is not in the method list.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Wall-clock cost of the chain protocol across exchange counts and chain
// lengths, on the configured dataset (trial 0).  Each (T, M) cell averages
// three fresh ten-iteration runs.
std::vector<TimingRow> run_timing_sweep(const ExperimentConfig& cfg,
                                        const std::vector<int>& t_values,
                                        const std::vector<int>& m_values);

}  // namespace namegame
