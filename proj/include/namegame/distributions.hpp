#pragma once

#include <Eigen/Dense>

#include "namegame/errors.hpp"
#include "namegame/rng.hpp"

namespace namegame {

// Multivariate Gaussian in precision form with the Cholesky factor of the
// precision cached at construction.  Immutable after construction, so the
// cache can never go stale.
class GaussianParams {
 public:
  // precision must be symmetric (1e-9 relative tolerance) and positive
  // definite; throws ContractError / NumericalError otherwise.
  GaussianParams(Eigen::VectorXd mean, Eigen::MatrixXd precision);

  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& precision() const { return precision_; }
  // Lower-triangular L with L * L^T = precision.
  const Eigen::MatrixXd& chol_lower() const { return chol_lower_; }
  // (1/2) log det precision.
  double half_log_det() const { return half_log_det_; }
  int dim() const { return static_cast<int>(mean_.size()); }

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd precision_;
  Eigen::MatrixXd chol_lower_;
  double half_log_det_;
};

// log N(x | p.mean, p.precision^-1)
double log_gaussian_density(const Eigen::VectorXd& x, const GaussianParams& p);

// Draw from N(p.mean, p.precision^-1).
Eigen::VectorXd sample_gaussian(const GaussianParams& p, RngStream& rng);

// Index draw proportional to non-negative weights.  Throws
// DegenerateDistributionError when the total mass is zero or not finite.
int sample_categorical(const Eigen::VectorXd& weights, RngStream& rng);

// Index draw proportional to exp(log_weights), computed stably.
int sample_categorical_log(const Eigen::VectorXd& log_weights, RngStream& rng);

double log_sum_exp(const Eigen::VectorXd& log_weights);

// Gamma(shape, scale 1) via Marsaglia-Tsang squeeze; shape < 1 handled with
// the standard boost.  shape must be positive.
double sample_gamma(double shape, RngStream& rng);

// Chi-square with k degrees of freedom (k > 0, need not be integral).
double sample_chi_square(double k, RngStream& rng);

// Wishart draw via the Bartlett decomposition.  Requires df >= dim and a
// symmetric positive definite scale; E[result] = df * scale.
Eigen::MatrixXd sample_wishart(double df, const Eigen::MatrixXd& scale, RngStream& rng);

// Cholesky lower factor of a symmetric matrix expected to be positive
// definite.  If the factorization fails, retries once with 1e-9 * I jitter
// (and warns on stderr); throws NumericalError if that also fails.
// `context` names the call site for the warning text.
Eigen::MatrixXd robust_cholesky(const Eigen::MatrixXd& m, const char* context);

}  // namespace namegame
