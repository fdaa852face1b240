#include "namegame/distributions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "namegame/logging.hpp"

namespace namegame {

namespace {

void check_symmetric(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols()) throw ContractError(std::string(what) + ": matrix not square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-9 * scale) throw ContractError(std::string(what) + ": matrix not symmetric");
}

}  // namespace

Eigen::MatrixXd robust_cholesky(const Eigen::MatrixXd& m, const char* context) {
  Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() == Eigen::Success) return llt.matrixL();
  log_warning(std::string(context) + ": matrix not positive definite, retrying with 1e-9 jitter");
  const Eigen::MatrixXd jittered = m + 1e-9 * Eigen::MatrixXd::Identity(m.rows(), m.cols());
  Eigen::LLT<Eigen::MatrixXd> llt2(jittered);
  if (llt2.info() == Eigen::Success) return llt2.matrixL();
  throw NumericalError(std::string(context) + ": Cholesky failed even with jitter");
}

GaussianParams::GaussianParams(Eigen::VectorXd mean, Eigen::MatrixXd precision)
    : mean_(std::move(mean)), precision_(std::move(precision)) {
  if (mean_.size() == 0) throw ContractError("GaussianParams: empty mean");
  if (precision_.rows() != mean_.size())
    throw ContractError("GaussianParams: mean/precision dimension mismatch");
  check_symmetric(precision_, "GaussianParams");
  chol_lower_ = robust_cholesky(precision_, "GaussianParams");
  half_log_det_ = chol_lower_.diagonal().array().log().sum();
}

double log_gaussian_density(const Eigen::VectorXd& x, const GaussianParams& p) {
  if (x.size() != p.dim()) throw ContractError("log_gaussian_density: dimension mismatch");
  const Eigen::VectorXd y = p.chol_lower().transpose() * (x - p.mean());
  return p.half_log_det() - 0.5 * p.dim() * std::log(2.0 * std::numbers::pi) - 0.5 * y.squaredNorm();
}

Eigen::VectorXd sample_gaussian(const GaussianParams& p, RngStream& rng) {
  Eigen::VectorXd z(p.dim());
  for (int i = 0; i < p.dim(); ++i) z[i] = rng.normal();
  // x = mean + L^-T z has covariance (L L^T)^-1 = precision^-1.
  return p.mean() + p.chol_lower().transpose().triangularView<Eigen::Upper>().solve(z);
}

int sample_categorical(const Eigen::VectorXd& weights, RngStream& rng) {
  if (weights.size() == 0) throw ContractError("sample_categorical: no categories");
  double total = 0.0;
  for (int i = 0; i < weights.size(); ++i) {
    const double w = weights[i];
    if (!std::isfinite(w) || w < 0.0)
      throw DegenerateDistributionError("sample_categorical: weight not finite and non-negative");
    total += w;
  }
  if (total <= 0.0) throw DegenerateDistributionError("sample_categorical: zero total mass");
  const double u = rng.uniform() * total;
  double acc = 0.0;
  for (int i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  // Rounding can push u past the last partial sum; return the last live bin.
  for (int i = static_cast<int>(weights.size()) - 1; i >= 0; --i)
    if (weights[i] > 0.0) return i;
  throw DegenerateDistributionError("sample_categorical: zero total mass");
}

double log_sum_exp(const Eigen::VectorXd& log_weights) {
  if (log_weights.size() == 0) throw ContractError("log_sum_exp: empty input");
  const double m = log_weights.maxCoeff();
  if (!std::isfinite(m)) return m;  // all -inf (or a stray +inf/nan propagates)
  double s = 0.0;
  for (int i = 0; i < log_weights.size(); ++i) s += std::exp(log_weights[i] - m);
  return m + std::log(s);
}

int sample_categorical_log(const Eigen::VectorXd& log_weights, RngStream& rng) {
  if (log_weights.size() == 0) throw ContractError("sample_categorical_log: no categories");
  const double m = log_weights.maxCoeff();
  if (!std::isfinite(m))
    throw DegenerateDistributionError("sample_categorical_log: no finite log-weight");
  const Eigen::VectorXd w = (log_weights.array() - m).exp();
  return sample_categorical(w, rng);
}

double sample_gamma(double shape, RngStream& rng) {
  if (!(shape > 0.0)) throw ContractError("sample_gamma: shape must be positive");
  if (shape < 1.0) {
    // Boost: Gamma(a) = Gamma(a + 1) * U^(1/a).  Keep U in (0, 1].
    const double u = 1.0 - rng.uniform();
    return sample_gamma(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
  }
  // Marsaglia-Tsang.
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double sample_chi_square(double k, RngStream& rng) {
  if (!(k > 0.0)) throw ContractError("sample_chi_square: df must be positive");
  return 2.0 * sample_gamma(0.5 * k, rng);
}

Eigen::MatrixXd sample_wishart(double df, const Eigen::MatrixXd& scale, RngStream& rng) {
  check_symmetric(scale, "sample_wishart");
  const int d = static_cast<int>(scale.rows());
  if (df < static_cast<double>(d))
    throw ContractError("sample_wishart: df must be at least the dimension");
  const Eigen::MatrixXd l = robust_cholesky(scale, "sample_wishart");
  // Bartlett: A lower triangular, A_ii = sqrt(chi2(df - i)), A_ij ~ N(0,1).
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    a(i, i) = std::sqrt(sample_chi_square(df - i, rng));
    for (int j = 0; j < i; ++j) a(i, j) = rng.normal();
  }
  const Eigen::MatrixXd la = l * a;
  return la * la.transpose();
}

}  // namespace namegame
