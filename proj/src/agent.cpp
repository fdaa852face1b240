#include "namegame/agent.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "namegame/errors.hpp"

namespace namegame {

void Hyperparams::validate() const {
  if (m.size() == 0) throw ContractError("Hyperparams: empty prior mean");
  if (!(alpha_bar > 0.0)) throw ContractError("Hyperparams: alpha_bar must be positive");
  if (!(nu > 0.0)) throw ContractError("Hyperparams: nu must be positive");
  if (w_scale.rows() != m.size() || w_scale.cols() != m.size())
    throw ContractError("Hyperparams: w_scale dimension mismatch");
  if (gamma.size() == 0) throw ContractError("Hyperparams: empty sign prior");
  double total = 0.0;
  for (int k = 0; k < gamma.size(); ++k) {
    if (!(gamma[k] >= 0.0)) throw ContractError("Hyperparams: negative sign prior weight");
    total += gamma[k];
  }
  if (!(total > 0.0)) throw ContractError("Hyperparams: sign prior has zero mass");
  // Symmetry + positive definiteness.
  robust_cholesky(w_scale, "Hyperparams");
  const double asym = (w_scale - w_scale.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-9 * std::max(1.0, w_scale.cwiseAbs().maxCoeff()))
    throw ContractError("Hyperparams: w_scale not symmetric");
}

Hyperparams Hyperparams::isotropic(int dim, int n_signs, double alpha_bar, double nu, double w) {
  if (dim <= 0 || n_signs <= 0) throw ContractError("Hyperparams::isotropic: bad sizes");
  Hyperparams h;
  h.m = Eigen::VectorXd::Zero(dim);
  h.alpha_bar = alpha_bar;
  h.nu = nu;
  h.w_scale = w * Eigen::MatrixXd::Identity(dim, dim);
  h.gamma = Eigen::VectorXd::Constant(n_signs, 1.0 / n_signs);
  h.validate();
  return h;
}

void AgentState::check_consistent() const {
  hyper.validate();
  if (signs.size() != features.size())
    throw ContractError("AgentState: signs/features length mismatch");
  for (const auto& x : features)
    if (x.size() != hyper.dim()) throw ContractError("AgentState: feature dimension mismatch");
  for (int w : signs)
    if (w < 0 || w >= n_signs()) throw ContractError("AgentState: sign out of range");
  if (!theta.empty()) {
    if (static_cast<int>(theta.size()) != n_signs())
      throw ContractError("AgentState: theta size mismatch");
    for (const auto& g : theta)
      if (g.dim() != hyper.dim()) throw ContractError("AgentState: theta dimension mismatch");
  }
}

double log_feature_likelihood(const AgentState& agent, int d, int k) {
  if (d < 0 || d >= agent.n_objects()) throw ContractError("log_feature_likelihood: bad object index");
  if (k < 0 || k >= agent.n_signs()) throw ContractError("log_feature_likelihood: bad sign index");
  if (agent.theta.empty()) throw ContractError("log_feature_likelihood: agent has no components");
  return log_gaussian_density(agent.features[d], agent.theta[k]);
}

double log_sign_weight(const AgentState& agent, int d, int k) {
  const double g = agent.hyper.gamma[k];
  if (g <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(g) + log_feature_likelihood(agent, d, k);
}

int sample_sign_proposal(const AgentState& agent, int d, RngStream& rng) {
  Eigen::VectorXd lw(agent.n_signs());
  for (int k = 0; k < agent.n_signs(); ++k) lw[k] = log_sign_weight(agent, d, k);
  return sample_categorical_log(lw, rng);
}

ComponentParams sample_theta_posterior(const AgentState& agent, RngStream& rng) {
  agent.check_consistent();
  const Hyperparams& h = agent.hyper;
  const int dim = h.dim();
  const Eigen::MatrixXd w_inv =
      Eigen::LLT<Eigen::MatrixXd>(h.w_scale).solve(Eigen::MatrixXd::Identity(dim, dim));

  ComponentParams out;
  out.reserve(h.n_signs());
  for (int k = 0; k < h.n_signs(); ++k) {
    // Gather the objects currently carrying sign k.
    int count = 0;
    Eigen::VectorXd xbar = Eigen::VectorXd::Zero(dim);
    for (int d = 0; d < agent.n_objects(); ++d) {
      if (agent.signs[d] == k) {
        ++count;
        xbar += agent.features[d];
      }
    }
    double alpha_post = h.alpha_bar;
    double nu_post = h.nu;
    Eigen::VectorXd m_post = h.m;
    Eigen::MatrixXd w_inv_post = w_inv;
    if (count > 0) {
      xbar /= count;
      Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(dim, dim);
      for (int d = 0; d < agent.n_objects(); ++d) {
        if (agent.signs[d] == k) {
          const Eigen::VectorXd c = agent.features[d] - xbar;
          scatter.noalias() += c * c.transpose();
        }
      }
      alpha_post = h.alpha_bar + count;
      nu_post = h.nu + count;
      m_post = (h.alpha_bar * h.m + count * xbar) / alpha_post;
      const Eigen::VectorXd diff = xbar - h.m;
      w_inv_post = w_inv + scatter +
                   (h.alpha_bar * count / alpha_post) * (diff * diff.transpose());
    }
    const Eigen::MatrixXd l_inv_post = robust_cholesky(w_inv_post, "sample_theta_posterior");
    const Eigen::MatrixXd w_post = l_inv_post.transpose().triangularView<Eigen::Upper>().solve(
        l_inv_post.triangularView<Eigen::Lower>()
            .solve(Eigen::MatrixXd::Identity(dim, dim)));
    // The Wishart needs df >= dim; the weak default prior may sit below that,
    // so clamp only at draw time and keep the raw value in the update above.
    const double df = std::max(nu_post, static_cast<double>(dim));
    Eigen::MatrixXd lambda = sample_wishart(df, 0.5 * (w_post + w_post.transpose()), rng);
    lambda = 0.5 * (lambda + lambda.transpose()).eval();
    Eigen::VectorXd mu = sample_gaussian(GaussianParams(m_post, alpha_post * lambda), rng);
    out.emplace_back(std::move(mu), std::move(lambda));
  }
  return out;
}

void init_agent(AgentState& agent, RngStream& rng) {
  agent.hyper.validate();
  if (agent.features.empty()) throw ContractError("init_agent: agent has no observations");
  agent.signs.resize(agent.features.size());
  for (auto& w : agent.signs)
    w = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(agent.n_signs())));
  agent.theta.clear();
  agent.theta = sample_theta_posterior(agent, rng);
}

}  // namespace namegame
