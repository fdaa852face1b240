#include "namegame/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "namegame/errors.hpp"

namespace namegame {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // Trim surrounding whitespace.
    const auto b = field.find_first_not_of(" \t\r");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}

long parse_long(const std::string& s, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(line_no) + ": bad " + what + " value '" + s + "'");
  }
}

double parse_double(const std::string& s, int line_no, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw DataError("line " + std::to_string(line_no) + ": bad " + what + " value '" + s + "'");
  }
}

}  // namespace

void Dataset::check_consistent() const {
  if (n_agents < 1 || dim < 1 || n_objects < 1)
    throw ContractError("Dataset: empty shape");
  if (static_cast<int>(features.size()) != n_agents)
    throw ContractError("Dataset: agent count mismatch");
  for (const auto& view : features) {
    if (static_cast<int>(view.size()) != n_objects)
      throw ContractError("Dataset: object count mismatch");
    for (const auto& x : view)
      if (static_cast<int>(x.size()) != dim) throw ContractError("Dataset: dimension mismatch");
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != n_objects)
    throw ContractError("Dataset: label count mismatch");
}

Eigen::MatrixXd synthetic_cluster_means() {
  Eigen::MatrixXd means(5, 4);
  means << 0, 1, 2, 3,
           0, 5, 6, 7,
           8, 5, 10, 11,
           12, 13, 10, 15,
           16, 17, 18, 15;
  return means;
}

Dataset generate_synthetic(int n_per_cluster, RngStream& rng) {
  if (n_per_cluster < 1) throw ContractError("generate_synthetic: need a positive cluster size");
  const Eigen::MatrixXd means = synthetic_cluster_means();
  const int n_clusters = static_cast<int>(means.rows());
  const int n_agents = static_cast<int>(means.cols());

  Dataset ds;
  ds.name = "synthetic";
  ds.n_agents = n_agents;
  ds.dim = 1;
  ds.n_objects = n_clusters * n_per_cluster;
  ds.n_clusters = n_clusters;
  ds.features.assign(n_agents, std::vector<Eigen::VectorXd>());
  for (auto& view : ds.features) view.reserve(ds.n_objects);
  ds.labels.reserve(ds.n_objects);

  for (int c = 0; c < n_clusters; ++c) {
    for (int i = 0; i < n_per_cluster; ++i) {
      // One shared observation per object, split coordinate-wise.
      for (int n = 0; n < n_agents; ++n) {
        Eigen::VectorXd x(1);
        x[0] = means(c, n) + rng.normal();
        ds.features[n].push_back(std::move(x));
      }
      ds.labels.push_back(c);
    }
  }
  ds.check_consistent();
  return ds;
}

Dataset generate_partial_view_fixture(int n_per_cluster, RngStream& rng) {
  if (n_per_cluster < 1)
    throw ContractError("generate_partial_view_fixture: need a positive cluster size");
  const int n_agents = 4, n_clusters = 5, dim = 10;
  const double noise_sd = 0.1;

  // Agent n sees cluster c at unit vector e_c, except that its views of
  // clusters n and n+1 coincide.
  std::vector<Eigen::MatrixXd> agent_means(n_agents, Eigen::MatrixXd::Zero(n_clusters, dim));
  for (int n = 0; n < n_agents; ++n) {
    for (int c = 0; c < n_clusters; ++c) {
      const int effective = (c == n + 1) ? n : c;
      agent_means[n](c, effective) = 1.0;
    }
  }

  Dataset ds;
  ds.name = "partial_view";
  ds.n_agents = n_agents;
  ds.dim = dim;
  ds.n_objects = n_clusters * n_per_cluster;
  ds.n_clusters = n_clusters;
  ds.features.assign(n_agents, std::vector<Eigen::VectorXd>());
  for (auto& view : ds.features) view.reserve(ds.n_objects);
  ds.labels.reserve(ds.n_objects);

  for (int c = 0; c < n_clusters; ++c) {
    for (int i = 0; i < n_per_cluster; ++i) {
      for (int n = 0; n < n_agents; ++n) {
        Eigen::VectorXd x(dim);
        for (int j = 0; j < dim; ++j) x[j] = agent_means[n](c, j) + noise_sd * rng.normal();
        ds.features[n].push_back(std::move(x));
      }
      ds.labels.push_back(c);
    }
  }
  ds.check_consistent();
  return ds;
}

Dataset load_features_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open feature file: " + path);
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) throw DataError(path + ": empty file");
  ++line_no;
  const std::vector<std::string> header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "agent" || header[1] != "object")
    throw DataError(path + ": header must start with agent,object");
  std::size_t first_feature = 2;
  bool has_label = false;
  if (header[2] == "label") {
    has_label = true;
    first_feature = 3;
  }
  const int dim = static_cast<int>(header.size() - first_feature);
  if (dim < 1) throw DataError(path + ": no feature columns");
  for (int j = 0; j < dim; ++j) {
    if (header[first_feature + j] != "x" + std::to_string(j))
      throw DataError(path + ": feature columns must be named x0,x1,...");
  }

  struct Row {
    int agent, object;
    long label;
    Eigen::VectorXd x;
  };
  std::vector<Row> rows;
  int max_agent = -1, max_object = -1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields, got " +
                      std::to_string(fields.size()));
    Row row;
    row.agent = static_cast<int>(parse_long(fields[0], line_no, "agent"));
    row.object = static_cast<int>(parse_long(fields[1], line_no, "object"));
    row.label = has_label && !fields[2].empty() ? parse_long(fields[2], line_no, "label") : -1;
    if (row.agent < 0) throw DataError("line " + std::to_string(line_no) + ": negative agent id");
    if (row.object < 0) throw DataError("line " + std::to_string(line_no) + ": negative object id");
    row.x.resize(dim);
    for (int j = 0; j < dim; ++j)
      row.x[j] = parse_double(fields[first_feature + j], line_no, "feature");
    max_agent = std::max(max_agent, row.agent);
    max_object = std::max(max_object, row.object);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError(path + ": no data rows");

  Dataset ds;
  ds.name = path;
  ds.n_agents = max_agent + 1;
  ds.dim = dim;
  ds.n_objects = max_object + 1;
  ds.features.assign(ds.n_agents, std::vector<Eigen::VectorXd>(ds.n_objects));
  std::vector<long> labels(ds.n_objects, -1);
  std::vector<std::vector<char>> seen(ds.n_agents, std::vector<char>(ds.n_objects, 0));
  bool any_label = false;
  for (const Row& row : rows) {
    if (seen[row.agent][row.object])
      throw DataError(path + ": duplicate row for agent " + std::to_string(row.agent) +
                      ", object " + std::to_string(row.object));
    seen[row.agent][row.object] = 1;
    ds.features[row.agent][row.object] = row.x;
    if (row.label >= 0) {
      any_label = true;
      if (labels[row.object] >= 0 && labels[row.object] != row.label)
        throw DataError(path + ": conflicting labels for object " + std::to_string(row.object));
      labels[row.object] = row.label;
    }
  }
  for (int n = 0; n < ds.n_agents; ++n)
    for (int d = 0; d < ds.n_objects; ++d)
      if (!seen[n][d])
        throw DataError(path + ": missing row for agent " + std::to_string(n) + ", object " +
                        std::to_string(d));
  if (any_label) {
    ds.labels.resize(ds.n_objects);
    int max_label = -1;
    for (int d = 0; d < ds.n_objects; ++d) {
      if (labels[d] < 0) throw DataError(path + ": object " + std::to_string(d) + " has no label");
      ds.labels[d] = static_cast<int>(labels[d]);
      max_label = std::max(max_label, ds.labels[d]);
    }
    ds.n_clusters = max_label + 1;
  }
  ds.check_consistent();
  return ds;
}

void save_features_csv(const Dataset& dataset, const std::string& path) {
  dataset.check_consistent();
  std::ofstream out(path);
  if (!out) throw DataError("cannot write feature file: " + path);
  out << "agent,object";
  if (dataset.has_labels()) out << ",label";
  for (int j = 0; j < dataset.dim; ++j) out << ",x" << j;
  out << "\n";
  char buf[32];
  for (int n = 0; n < dataset.n_agents; ++n) {
    for (int d = 0; d < dataset.n_objects; ++d) {
      out << n << ',' << d;
      if (dataset.has_labels()) out << ',' << dataset.labels[d];
      for (int j = 0; j < dataset.dim; ++j) {
        std::snprintf(buf, sizeof buf, "%.17g", dataset.features[n][d][j]);
        out << ',' << buf;
      }
      out << "\n";
    }
  }
  if (!out) throw DataError("write failed: " + path);
}

}  // namespace namegame
