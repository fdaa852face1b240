#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "namegame/config.hpp"
#include "namegame/dataset.hpp"
#include "namegame/errors.hpp"
#include "namegame/experiment.hpp"
#include "namegame/reporting.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw namegame::ConfigError(std::string("bad ") + what + " list: " + s);
    }
  }
  if (out.empty()) throw namegame::ConfigError(std::string("empty ") + what + " list");
  return out;
}

void apply_sets(namegame::ExperimentConfig& cfg, const std::vector<std::string>& sets) {
  for (const std::string& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos)
      throw namegame::ConfigError("--set expects key=value, got '" + kv + "'");
    namegame::apply_config_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
}

void print_summary(const namegame::ExperimentResult& result) {
  std::printf("%-28s %6s %10s %10s %10s\n", "method", "agent", "ari", "kappa", "agreement");
  for (const auto& r : result.summary) {
    auto cell = [](double v) {
      char buf[32];
      if (std::isnan(v)) return std::string("-");
      std::snprintf(buf, sizeof buf, "%.3f", v);
      return std::string(buf);
    };
    std::printf("%-28s %6d %10s %10s %10s\n", r.method.c_str(), r.agent, cell(r.ari_mean).c_str(),
                cell(r.kappa_mean).c_str(), cell(r.agreement).c_str());
  }
  std::printf("total: %.1fs%s\n", result.total_seconds,
              result.within_budget ? "" : " (over budget)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decentralized naming-game benchmark"};
  app.require_subcommand(1);

  std::string config_path, out_dir, methods, features_path, t_list = "1,2,3,4", m_list = "2,3,4";
  std::vector<std::string> sets;
  std::uint64_t seed = 0;
  bool have_seed = false, plots = false;

  CLI::App* run = app.add_subcommand("run", "run the benchmark and write CSV summaries");
  run->add_option("--config", config_path, "config file (key = value)");
  run->add_option("--methods", methods, "comma-separated method list (or 'all')");
  run->add_option("--seed", seed, "master seed")->each([&](const std::string&) { have_seed = true; });
  run->add_option("--out", out_dir, "output directory");
  run->add_flag("--plots", plots, "also write SVG score trajectories");
  run->add_option("--set", sets, "extra key=value override (repeatable)");

  CLI::App* timing = app.add_subcommand("timing", "sweep chain shapes and record wall time");
  timing->add_option("--config", config_path, "config file (key = value)");
  timing->add_option("--t", t_list, "comma-separated exchange counts");
  timing->add_option("--m", m_list, "comma-separated chain lengths");
  timing->add_option("--out", out_dir, "output directory");
  timing->add_option("--set", sets, "extra key=value override (repeatable)");

  CLI::App* validate = app.add_subcommand("validate", "check a feature CSV file");
  validate->add_option("--features", features_path, "feature CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      const namegame::Dataset ds = namegame::load_features_csv(features_path);
      std::printf("ok: %d agents, %d objects, dim %d, %s\n", ds.n_agents, ds.n_objects, ds.dim,
                  ds.has_labels() ? "labeled" : "unlabeled");
      return 0;
    }

    namegame::ExperimentConfig cfg;
    if (!config_path.empty()) cfg = namegame::load_config_file(config_path);
    if (!methods.empty()) namegame::apply_config_override(cfg, "methods", methods);
    if (have_seed) cfg.seed = seed;
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (plots) cfg.emit_plots = true;
    apply_sets(cfg, sets);
    cfg.validate();
    namegame::ensure_directory(cfg.out_dir);

    if (timing->parsed()) {
      const auto rows = namegame::run_timing_sweep(cfg, parse_int_list(t_list, "T"),
                                                   parse_int_list(m_list, "M"));
      namegame::write_timing_csv(rows, cfg.out_dir + "/timing.csv");
      for (const auto& r : rows)
        std::printf("T=%d M=%d  %.4fs/iteration  %.0f exchanges/iteration\n", r.n_exchanges,
                    r.chain_length, r.seconds_per_iteration, r.exchanges_per_iteration);
      return 0;
    }

    const namegame::ExperimentResult result = namegame::run_experiment(cfg);
    namegame::write_summary_csv(result.summary, cfg.out_dir + "/summary.csv");
    namegame::write_iterations_csv(result.iterations, cfg.out_dir + "/per_iteration.csv");
    if (cfg.emit_plots) {
      namegame::write_metric_plot_svg(result.iterations, namegame::PlotMetric::kAri,
                                      cfg.out_dir + "/ari.svg");
      namegame::write_metric_plot_svg(result.iterations, namegame::PlotMetric::kKappa,
                                      cfg.out_dir + "/kappa.svg");
    }
    print_summary(result);
    return 0;
  } catch (const namegame::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const namegame::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
