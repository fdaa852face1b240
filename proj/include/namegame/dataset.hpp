#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "namegame/rng.hpp"

namespace namegame {

// Observations for every agent plus optional ground-truth categories.
// features[n][d] is agent n's view of object d; all views of one agent share
// a dimension, and all agents observe the same objects.
struct Dataset {
  std::string name;
  int n_agents = 0;
  int dim = 0;
  int n_objects = 0;
  int n_clusters = 0;  // 0 when unknown
  std::vector<std::vector<Eigen::VectorXd>> features;
  std::vector<int> labels;  // empty when no ground truth is available

  bool has_labels() const { return !labels.empty(); }
  void check_consistent() const;
};

// Four-agent benchmark: five clusters with unit-variance 4-d observations,
// one shared draw per object, agent n receiving coordinate n as a scalar
// view.  Consecutive cluster pairs coincide in exactly one agent's
// coordinate, so no single agent can separate all five clusters alone.
// Objects are grouped by cluster; D = 5 * n_per_cluster.
Dataset generate_synthetic(int n_per_cluster, RngStream& rng);

// Cluster means of the shared 4-d observation space, one row per cluster.
Eigen::MatrixXd synthetic_cluster_means();

// Harder variant: four agents, each with its own 10-dimensional view of
// five clusters (noise sd 0.1, unit separation).  Agent n's views of
// clusters n and n+1 coincide, mirroring the scalar benchmark's ambiguity.
Dataset generate_partial_view_fixture(int n_per_cluster, RngStream& rng);

// CSV with header agent,object[,label],x0,...,x{dim-1} and one row per
// (agent, object) pair.  Label, when present, must be consistent across the
// agents' rows for an object.  Throws DataError with a line reference on
// malformed input.
Dataset load_features_csv(const std::string& path);
void save_features_csv(const Dataset& dataset, const std::string& path);

}  // namespace namegame
