#pragma once

#include <vector>

#include <Eigen/Dense>

#include "namegame/distributions.hpp"
#include "namegame/rng.hpp"

namespace namegame {

// Normal-Wishart prior over each component's (mean, precision) plus a
// categorical prior over signs.  The Wishart convention here is
// E[precision] = nu * w_scale.
struct Hyperparams {
  Eigen::VectorXd m;        // prior mean location
  double alpha_bar = 1.0;   // scale on the mean's precision
  double nu = 1.0;          // Wishart degrees of freedom (raw; clamped to the
                            // dimension only when a precision is drawn)
  Eigen::MatrixXd w_scale;  // Wishart scale matrix, symmetric PD
  Eigen::VectorXd gamma;    // sign prior weights, length = sign count

  // alpha_bar > 0, nu > 0, w_scale symmetric PD of m's dimension, gamma
  // non-negative with positive total.  Throws ContractError otherwise.
  void validate() const;

  // Convenience: m = 0, w_scale = w * I, uniform gamma.
  static Hyperparams isotropic(int dim, int n_signs, double alpha_bar, double nu, double w);

  int dim() const { return static_cast<int>(m.size()); }
  int n_signs() const { return static_cast<int>(gamma.size()); }
};

// Per-sign Gaussian observation models for one agent.
using ComponentParams = std::vector<GaussianParams>;

// One participant: private observations, a private sign assignment per
// object, and private per-sign Gaussian parameters.
struct AgentState {
  int id = 0;
  Hyperparams hyper;
  std::vector<Eigen::VectorXd> features;  // one vector per object, fixed
  std::vector<int> signs;                 // current sign per object
  ComponentParams theta;                  // one Gaussian per sign

  int n_objects() const { return static_cast<int>(features.size()); }
  int n_signs() const { return hyper.n_signs(); }
  int dim() const { return hyper.dim(); }
  void check_consistent() const;
};

// log [ gamma_k * N(features[d] | theta[k]) ], the agent's unnormalized log
// posterior weight for assigning sign k to object d.
double log_sign_weight(const AgentState& agent, int d, int k);

// log N(features[d] | theta[k]) alone.
double log_feature_likelihood(const AgentState& agent, int d, int k);

// Draw a sign for object d from the agent's own posterior over signs,
// proportional to gamma_k * N(features[d] | theta[k]).
int sample_sign_proposal(const AgentState& agent, int d, RngStream& rng);

// Resample every component from its Normal-Wishart full conditional given the
// agent's current sign assignment.  Components with no assigned objects fall
// back to the prior.
ComponentParams sample_theta_posterior(const AgentState& agent, RngStream& rng);

// Uniform random signs followed by one theta draw from the full conditional.
void init_agent(AgentState& agent, RngStream& rng);

}  // namespace namegame
