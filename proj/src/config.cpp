#include "namegame/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "namegame/errors.hpp"

namespace namegame {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& v, const std::string& key) {
  std::string s = v;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw ConfigError("config key '" + key + "': expected a boolean, got '" + v + "'");
}

long long parse_int(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const long long x = std::stoll(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected an integer, got '" + v + "'");
  }
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const std::uint64_t x = std::stoull(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected an unsigned integer, got '" + v + "'");
  }
}

double parse_real(const std::string& v, const std::string& key) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + v + "'");
  }
}

std::vector<Method> parse_method_list(const std::string& v) {
  std::vector<Method> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string name = trim(item);
    if (name.empty()) continue;
    if (name == "all") {
      for (Method m : {Method::kRmhng, Method::kOneSample, Method::kLimitedLength,
                       Method::kOneSampleLimitedLength, Method::kNoCommunication,
                       Method::kAllAcceptance, Method::kGibbs})
        out.push_back(m);
      continue;
    }
    out.push_back(parse_method(name));
  }
  if (out.empty()) throw ConfigError("config key 'methods': empty method list");
  return out;
}

void apply_method_setting(MethodSettings& ms, const std::string& key, const std::string& value,
                          const std::string& full_key) {
  if (key == "t" || key == "n_exchanges")
    ms.n_exchanges = static_cast<int>(parse_int(value, full_key));
  else if (key == "m" || key == "chain_length")
    ms.chain_length = static_cast<int>(parse_int(value, full_key));
  else
    throw ConfigError("unknown per-method config key '" + full_key + "'");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (dataset != "synthetic" && dataset != "partial_view" && dataset != "csv")
    throw ConfigError("dataset must be synthetic, partial_view, or csv");
  if (dataset == "csv" && feature_file.empty())
    throw ConfigError("dataset csv needs feature_file");
  if (n_per_cluster < 1) throw ConfigError("n_per_cluster must be positive");
  if (methods.empty()) throw ConfigError("no methods selected");
  std::set<Method> seen;
  for (Method m : methods)
    if (!seen.insert(m).second)
      throw ConfigError(std::string("method listed twice: ") + method_name(m));
  if (n_signs < 1 || n_signs > 255) throw ConfigError("n_signs out of range");
  if (iterations < 1) throw ConfigError("iterations must be positive");
  if (trials < 1) throw ConfigError("trials must be positive");
  if (window < 1 || window > iterations) throw ConfigError("window must be in [1, iterations]");
  if (!(alpha_bar > 0.0)) throw ConfigError("alpha_bar must be positive");
  if (!(nu > 0.0)) throw ConfigError("nu must be positive");
  if (!(w_scale > 0.0)) throw ConfigError("w_scale must be positive");
  if (n_exchanges && *n_exchanges < 1) throw ConfigError("n_exchanges must be positive");
  if (chain_length && *chain_length < 1) throw ConfigError("chain_length must be positive");
  for (const auto& [name, ms] : method_settings) {
    parse_method(name);
    if (ms.n_exchanges && *ms.n_exchanges < 1)
      throw ConfigError("method." + name + ".t must be positive");
    if (ms.chain_length && *ms.chain_length < 1)
      throw ConfigError("method." + name + ".m must be positive");
  }
  if (!(time_budget_seconds > 0.0)) throw ConfigError("time_budget_seconds must be positive");
  if (out_dir.empty()) throw ConfigError("out_dir must not be empty");
}

void apply_config_override(ExperimentConfig& cfg, const std::string& key,
                           const std::string& value) {
  if (key.rfind("method.", 0) == 0) {
    const std::string rest = key.substr(7);
    const auto dot = rest.find('.');
    if (dot == std::string::npos)
      throw ConfigError("per-method key must look like method.<name>.<key>: " + key);
    const std::string name = rest.substr(0, dot);
    parse_method(name);
    apply_method_setting(cfg.method_settings[name], rest.substr(dot + 1), value, key);
    return;
  }
  if (key == "dataset") cfg.dataset = value;
  else if (key == "n_per_cluster") cfg.n_per_cluster = static_cast<int>(parse_int(value, key));
  else if (key == "feature_file") cfg.feature_file = value;
  else if (key == "methods") cfg.methods = parse_method_list(value);
  else if (key == "n_signs") cfg.n_signs = static_cast<int>(parse_int(value, key));
  else if (key == "iterations") cfg.iterations = static_cast<int>(parse_int(value, key));
  else if (key == "trials") cfg.trials = static_cast<int>(parse_int(value, key));
  else if (key == "window") cfg.window = static_cast<int>(parse_int(value, key));
  else if (key == "seed") cfg.seed = parse_u64(value, key);
  else if (key == "alpha_bar") cfg.alpha_bar = parse_real(value, key);
  else if (key == "nu") cfg.nu = parse_real(value, key);
  else if (key == "w_scale") cfg.w_scale = parse_real(value, key);
  else if (key == "n_exchanges" || key == "t") cfg.n_exchanges = static_cast<int>(parse_int(value, key));
  else if (key == "chain_length" || key == "m") cfg.chain_length = static_cast<int>(parse_int(value, key));
  else if (key == "shuffle_per_object") cfg.shuffle_per_object = parse_bool(value, key);
  else if (key == "fleiss") cfg.use_fleiss = parse_bool(value, key);
  else if (key == "agent_average_agreement") cfg.agent_average_agreement = parse_bool(value, key);
  else if (key == "agreement") cfg.compute_agreement = parse_bool(value, key);
  else if (key == "plots") cfg.emit_plots = parse_bool(value, key);
  else if (key == "out_dir") cfg.out_dir = value;
  else if (key == "time_budget_seconds") cfg.time_budget_seconds = parse_real(value, key);
  else throw ConfigError("unknown config key '" + key + "'");
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  ExperimentConfig cfg;
  std::string line, section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string s = trim(line);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']')
        throw ConfigError(path + ":" + std::to_string(line_no) + ": unterminated section");
      section = trim(s.substr(1, s.size() - 2));
      if (section.rfind("method.", 0) != 0)
        throw ConfigError(path + ":" + std::to_string(line_no) +
                          ": only [method.<name>] sections are supported");
      parse_method(section.substr(7));
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (key.empty()) throw ConfigError(path + ":" + std::to_string(line_no) + ": empty key");
    try {
      if (section.empty()) {
        apply_config_override(cfg, key, value);
      } else {
        const std::string name = section.substr(7);
        apply_method_setting(cfg.method_settings[name], key, value, section + "." + key);
      }
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

}  // namespace namegame
