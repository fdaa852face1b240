#include "namegame/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

#include "namegame/errors.hpp"
#include "namegame/logging.hpp"
#include "namegame/metrics.hpp"

namespace namegame {

namespace {

constexpr std::uint64_t kDatasetStream = 0xD5;
constexpr std::uint64_t kInitStream = 0x1A;
constexpr std::uint64_t kGameStream = 0x6A;

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double sample_mean(const std::vector<double>& xs) {
  if (xs.empty()) return kNan;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_std(const std::vector<double>& xs) {
  if (xs.empty()) return kNan;
  if (xs.size() == 1) return 0.0;
  const double m = sample_mean(xs);
  double acc = 0.0;
  for (double x : xs) acc += (x - m) * (x - m);
  return std::sqrt(acc / static_cast<double>(xs.size() - 1));
}

// Table index carrying agent n's signs: chain and isolated traces keep one
// table per agent, the centralized trace one shared table.
int table_for_agent(const GameTrace& trace, int n) {
  return trace.n_tables() > 1 ? n : 0;
}

struct TrialRun {
  Method method;
  GameTrace trace;
};

}  // namespace

Dataset build_dataset(const ExperimentConfig& cfg, int trial) {
  RngStream rng = RngStream(cfg.seed, kDatasetStream).derive(static_cast<std::uint64_t>(trial));
  if (cfg.dataset == "synthetic") return generate_synthetic(cfg.n_per_cluster, rng);
  if (cfg.dataset == "partial_view") return generate_partial_view_fixture(cfg.n_per_cluster, rng);
  if (cfg.dataset == "csv") return load_features_csv(cfg.feature_file);
  throw ConfigError("unknown dataset kind: " + cfg.dataset);
}

Hyperparams hyper_for(const ExperimentConfig& cfg, const Dataset& dataset) {
  return Hyperparams::isotropic(dataset.dim, cfg.n_signs, cfg.alpha_bar, cfg.nu, cfg.w_scale);
}

std::vector<AgentState> make_agents(const Dataset& dataset, const Hyperparams& hyper) {
  dataset.check_consistent();
  if (dataset.dim != hyper.dim()) throw ContractError("make_agents: dimension mismatch");
  std::vector<AgentState> agents(dataset.n_agents);
  for (int n = 0; n < dataset.n_agents; ++n) {
    agents[n].id = n;
    agents[n].hyper = hyper;
    agents[n].features = dataset.features[n];
  }
  return agents;
}

GameConfig game_config_for(const ExperimentConfig& cfg, Method method, const Dataset& dataset) {
  GameConfig gc;
  gc.method = method;
  gc.n_agents = dataset.n_agents;
  gc.n_signs = cfg.n_signs;
  gc.n_objects = dataset.n_objects;
  gc.iterations = cfg.iterations;
  gc.shuffle_per_object = cfg.shuffle_per_object;
  const ChainShape shape = default_chain_shape(method, dataset.n_agents);
  gc.n_exchanges = cfg.n_exchanges.value_or(shape.n_exchanges);
  gc.chain_length = cfg.chain_length.value_or(shape.chain_length);
  const auto it = cfg.method_settings.find(method_name(method));
  if (it != cfg.method_settings.end()) {
    if (it->second.n_exchanges) gc.n_exchanges = *it->second.n_exchanges;
    if (it->second.chain_length) gc.chain_length = *it->second.chain_length;
  }
  try {
    gc.validate();
  } catch (const ContractError& e) {
    // shape came from user configuration, so report it as such
    throw ConfigError(std::string(method_name(method)) + ": " + e.what());
  }
  return gc;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();
  ExperimentResult result;

  const bool want_agreement =
      cfg.compute_agreement &&
      std::any_of(cfg.methods.begin(), cfg.methods.end(),
                  [](Method m) { return m != Method::kGibbs; });
  const bool gibbs_listed =
      std::find(cfg.methods.begin(), cfg.methods.end(), Method::kGibbs) != cfg.methods.end();

  // gibbs runs first within each trial so its counts can serve as the
  // agreement reference for the other methods.
  std::vector<Method> scheduled;
  if (gibbs_listed || want_agreement) scheduled.push_back(Method::kGibbs);
  for (Method m : cfg.methods)
    if (m != Method::kGibbs) scheduled.push_back(m);

  // (method, agent) -> window samples across trials.
  struct Accum {
    std::vector<std::vector<double>> ari_per_agent;  // [agent][sample]
    std::vector<double> kappa;
    std::vector<double> agreement;
  };
  std::map<std::string, Accum> accums;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Dataset dataset = build_dataset(cfg, trial);
    const Hyperparams hyper = hyper_for(cfg, dataset);
    const int n_agents = dataset.n_agents;

    Eigen::MatrixXi gibbs_counts;
    bool have_gibbs_counts = false;

    for (Method method : scheduled) {
      const bool emit = method != Method::kGibbs || gibbs_listed;
      const GameConfig gc = game_config_for(cfg, method, dataset);
      std::vector<AgentState> agents = make_agents(dataset, hyper);
      RngStream init_rng = RngStream(cfg.seed, kInitStream)
                               .derive(static_cast<std::uint64_t>(trial))
                               .derive(static_cast<std::uint64_t>(method));
      for (auto& agent : agents) init_agent(agent, init_rng);
      RngStream game_rng = RngStream(cfg.seed, kGameStream)
                               .derive(static_cast<std::uint64_t>(trial))
                               .derive(static_cast<std::uint64_t>(method));
      const GameTrace trace = run_method(gc, agents, game_rng);

      Accum& acc = accums[method_name(method)];
      if (acc.ari_per_agent.empty()) acc.ari_per_agent.resize(n_agents);

      const int window_start = trace.n_iterations() - cfg.window;
      for (int it = 0; it < trace.n_iterations(); ++it) {
        double ari_sum = 0.0;
        int ari_count = 0;
        for (int n = 0; n < n_agents; ++n) {
          double ari = kNan;
          if (dataset.has_labels()) {
            ari = adjusted_rand_index(trace.table_signs(it, table_for_agent(trace, n)),
                                      dataset.labels);
            ari_sum += ari;
            ++ari_count;
            if (it >= window_start) acc.ari_per_agent[n].push_back(ari);
          }
          if (emit)
            result.iterations.push_back({method_name(method), trial, it, n, ari, kNan});
        }
        double kappa = kNan;
        if (trace.n_tables() > 1) {
          std::vector<std::vector<int>> tables;
          tables.reserve(trace.n_tables());
          for (int t = 0; t < trace.n_tables(); ++t) tables.push_back(trace.table_signs(it, t));
          kappa = cfg.use_fleiss ? fleiss_kappa(tables, cfg.n_signs)
                                 : mean_pairwise_kappa(tables, cfg.n_signs);
          if (it >= window_start) acc.kappa.push_back(kappa);
        }
        if (emit)
          result.iterations.push_back({method_name(method), trial, it, -1,
                                       ari_count > 0 ? ari_sum / ari_count : kNan, kappa});
      }

      if (method == Method::kGibbs && want_agreement) {
        gibbs_counts = collect_sign_counts(trace, cfg.window, SignSource::chain_tail());
        have_gibbs_counts = true;
      }
      if (method != Method::kGibbs && want_agreement) {
        if (!have_gibbs_counts) throw ContractError("run_experiment: reference counts missing");
        const bool tail_available = trace.has_tail(trace.n_iterations() - 1);
        double agreement;
        if (!cfg.agent_average_agreement && tail_available) {
          agreement = posterior_agreement(
              collect_sign_counts(trace, cfg.window, SignSource::chain_tail()), gibbs_counts);
        } else {
          double total = 0.0;
          for (int n = 0; n < n_agents; ++n)
            total += posterior_agreement(
                collect_sign_counts(trace, cfg.window, SignSource::agent_table(n)), gibbs_counts);
          agreement = total / n_agents;
        }
        acc.agreement.push_back(agreement);
      }
    }
  }

  // Summaries in the order methods were requested.
  for (Method method : cfg.methods) {
    const Accum& acc = accums.at(method_name(method));
    const int n_agents = static_cast<int>(acc.ari_per_agent.size());
    std::vector<double> all_ari;
    for (int n = 0; n < n_agents; ++n) {
      SummaryRow row;
      row.method = method_name(method);
      row.agent = n;
      row.ari_mean = sample_mean(acc.ari_per_agent[n]);
      row.ari_std = sample_std(acc.ari_per_agent[n]);
      row.kappa_mean = row.kappa_std = row.agreement = kNan;
      result.summary.push_back(row);
      all_ari.insert(all_ari.end(), acc.ari_per_agent[n].begin(), acc.ari_per_agent[n].end());
    }
    SummaryRow agg;
    agg.method = method_name(method);
    agg.agent = -1;
    agg.ari_mean = sample_mean(all_ari);
    agg.ari_std = sample_std(all_ari);
    agg.kappa_mean = sample_mean(acc.kappa);
    agg.kappa_std = sample_std(acc.kappa);
    agg.agreement = sample_mean(acc.agreement);
    result.summary.push_back(agg);
  }

  result.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  result.within_budget = result.total_seconds <= cfg.time_budget_seconds;
  if (!result.within_budget)
    log_warning("run took " + std::to_string(result.total_seconds) + "s, over the budget of " +
                std::to_string(cfg.time_budget_seconds) + "s");
  return result;
}

std::vector<TimingRow> run_timing_sweep(const ExperimentConfig& cfg,
                                        const std::vector<int>& t_values,
                                        const std::vector<int>& m_values) {
  cfg.validate();
  if (t_values.empty() || m_values.empty())
    throw ConfigError("timing sweep needs at least one T and one M value");
  const Dataset dataset = build_dataset(cfg, 0);
  const Hyperparams hyper = hyper_for(cfg, dataset);

  // Cost per configuration is averaged over a few short repeat runs with
  // fresh agents so a single slow iteration cannot skew the estimate.
  const int n_runs = 3, run_iterations = 10;
  std::vector<TimingRow> rows;
  for (int m : m_values) {
    if (m < 1 || m > dataset.n_agents) throw ConfigError("timing sweep: chain length out of range");
    for (int t : t_values) {
      if (t < 1) throw ConfigError("timing sweep: exchange count must be positive");
      GameConfig gc;
      gc.method = m == dataset.n_agents ? Method::kRmhng : Method::kLimitedLength;
      gc.n_agents = dataset.n_agents;
      gc.n_signs = cfg.n_signs;
      gc.n_objects = dataset.n_objects;
      gc.iterations = run_iterations;
      gc.n_exchanges = t;
      gc.chain_length = m;
      gc.shuffle_per_object = cfg.shuffle_per_object;
      gc.validate();

      double seconds = 0.0, exchanges = 0.0;
      for (int run = 0; run < n_runs; ++run) {
        std::vector<AgentState> agents = make_agents(dataset, hyper);
        RngStream init_rng =
            RngStream(cfg.seed, kInitStream).derive(0).derive(1000 + m * 100 + t).derive(run);
        for (auto& agent : agents) init_agent(agent, init_rng);
        RngStream game_rng =
            RngStream(cfg.seed, kGameStream).derive(0).derive(1000 + m * 100 + t).derive(run);
        const GameTrace trace = run_method(gc, agents, game_rng);
        for (int it = 0; it < trace.n_iterations(); ++it) {
          seconds += trace.stats(it).seconds;
          exchanges += static_cast<double>(trace.stats(it).exchanges);
        }
      }
      const double total_iters = static_cast<double>(n_runs * run_iterations);
      rows.push_back({t, m, seconds / total_iters, exchanges / total_iters});
    }
  }
  return rows;
}

}  // namespace namegame
