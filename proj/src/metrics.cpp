#include "namegame/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "namegame/errors.hpp"

namespace namegame {

namespace {

double comb2(double x) { return 0.5 * x * (x - 1.0); }

void check_labeling_pair(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty()) throw ContractError("metrics: empty labeling");
  if (a.size() != b.size()) throw ContractError("metrics: labeling length mismatch");
}

}  // namespace

double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
  check_labeling_pair(a, b);
  std::unordered_map<int, int> amap, bmap;
  for (int x : a) amap.emplace(x, static_cast<int>(amap.size()));
  for (int x : b) bmap.emplace(x, static_cast<int>(bmap.size()));
  const int r = static_cast<int>(amap.size());
  const int c = static_cast<int>(bmap.size());
  Eigen::MatrixXd contingency = Eigen::MatrixXd::Zero(r, c);
  for (std::size_t i = 0; i < a.size(); ++i)
    contingency(amap.at(a[i]), bmap.at(b[i])) += 1.0;

  double sum_ij = 0.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) sum_ij += comb2(contingency(i, j));
  double sum_a = 0.0, sum_b = 0.0;
  for (int i = 0; i < r; ++i) sum_a += comb2(contingency.row(i).sum());
  for (int j = 0; j < c; ++j) sum_b += comb2(contingency.col(j).sum());

  const double total = comb2(static_cast<double>(a.size()));
  if (total == 0.0) return 1.0;  // single item: identical trivial partitions
  const double expected = sum_a * sum_b / total;
  const double maximum = 0.5 * (sum_a + sum_b);
  const double denom = maximum - expected;
  const double scale = std::max({1.0, std::abs(maximum), std::abs(expected)});
  if (std::abs(denom) <= 1e-12 * scale) return 1.0;  // trivially identical partitions
  return (sum_ij - expected) / denom;
}

double cohen_kappa(const std::vector<int>& a, const std::vector<int>& b, int n_signs) {
  check_labeling_pair(a, b);
  if (n_signs < 1) throw ContractError("cohen_kappa: need at least one category");
  Eigen::VectorXd pa = Eigen::VectorXd::Zero(n_signs);
  Eigen::VectorXd pb = Eigen::VectorXd::Zero(n_signs);
  double agree = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0 || a[i] >= n_signs || b[i] < 0 || b[i] >= n_signs)
      throw ContractError("cohen_kappa: label out of range");
    pa[a[i]] += 1.0;
    pb[b[i]] += 1.0;
    if (a[i] == b[i]) agree += 1.0;
  }
  const double n = static_cast<double>(a.size());
  const double c_o = agree / n;
  const double c_e = pa.dot(pb) / (n * n);
  if (1.0 - c_e <= 1e-12) return 1.0;  // both raters constant and identical
  return (c_o - c_e) / (1.0 - c_e);
}

double mean_pairwise_kappa(const std::vector<std::vector<int>>& raters, int n_signs) {
  if (raters.size() < 2) throw ContractError("mean_pairwise_kappa: need at least two raters");
  double total = 0.0;
  int pairs = 0;
  for (std::size_t i = 0; i < raters.size(); ++i)
    for (std::size_t j = i + 1; j < raters.size(); ++j) {
      total += cohen_kappa(raters[i], raters[j], n_signs);
      ++pairs;
    }
  return total / pairs;
}

double fleiss_kappa(const std::vector<std::vector<int>>& raters, int n_signs) {
  if (raters.size() < 2) throw ContractError("fleiss_kappa: need at least two raters");
  const std::size_t n_items = raters[0].size();
  if (n_items == 0) throw ContractError("fleiss_kappa: empty labeling");
  for (const auto& rr : raters)
    if (rr.size() != n_items) throw ContractError("fleiss_kappa: labeling length mismatch");
  const double n_raters = static_cast<double>(raters.size());
  Eigen::VectorXd category_mass = Eigen::VectorXd::Zero(n_signs);
  double mean_item_agreement = 0.0;
  for (std::size_t d = 0; d < n_items; ++d) {
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(n_signs);
    for (const auto& rr : raters) {
      if (rr[d] < 0 || rr[d] >= n_signs) throw ContractError("fleiss_kappa: label out of range");
      counts[rr[d]] += 1.0;
    }
    category_mass += counts;
    mean_item_agreement += (counts.squaredNorm() - n_raters) / (n_raters * (n_raters - 1.0));
  }
  mean_item_agreement /= static_cast<double>(n_items);
  category_mass /= n_raters * static_cast<double>(n_items);
  const double expected = category_mass.squaredNorm();
  if (1.0 - expected <= 1e-12) return 1.0;
  return (mean_item_agreement - expected) / (1.0 - expected);
}

std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost) {
  if (cost.rows() != cost.cols() || cost.rows() < 1)
    throw ContractError("min_cost_assignment: cost matrix must be square and non-empty");
  if (!cost.allFinite()) throw ContractError("min_cost_assignment: cost entries must be finite");
  const int n = static_cast<int>(cost.rows());
  const double inf = std::numeric_limits<double>::infinity();
  // Shortest-augmenting-path assignment with dual potentials, 1-indexed.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

Eigen::MatrixXi collect_sign_counts(const GameTrace& trace, int window, const SignSource& source) {
  if (window < 1 || window > trace.n_iterations())
    throw ContractError("collect_sign_counts: window out of range");
  if (source.kind == SignSource::Kind::kAgent &&
      (source.agent < 0 || source.agent >= trace.n_tables()))
    throw ContractError("collect_sign_counts: agent table out of range");
  Eigen::MatrixXi counts = Eigen::MatrixXi::Zero(trace.n_objects(), trace.n_signs());
  for (int it = trace.n_iterations() - window; it < trace.n_iterations(); ++it) {
    const int table =
        source.kind == SignSource::Kind::kChainTail ? trace.tail_table(it) : source.agent;
    for (int d = 0; d < trace.n_objects(); ++d) counts(d, trace.sign(it, table, d)) += 1;
  }
  return counts;
}

double posterior_agreement(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ContractError("posterior_agreement: shape mismatch");
  if (a.rows() < 1 || a.cols() < 1) throw ContractError("posterior_agreement: empty counts");
  if (a.minCoeff() < 0 || b.minCoeff() < 0)
    throw ContractError("posterior_agreement: negative count");
  const std::int64_t total_a = a.cast<std::int64_t>().sum();
  const std::int64_t total_b = b.cast<std::int64_t>().sum();
  if (total_a != total_b) throw ContractError("posterior_agreement: count totals differ");
  if (total_a == 0) throw ContractError("posterior_agreement: zero total count");
  const int k = static_cast<int>(a.cols());
  Eigen::MatrixXd gain(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::int64_t g = 0;
      for (int d = 0; d < a.rows(); ++d)
        g += std::min<std::int64_t>(a(d, i), b(d, j));
      gain(i, j) = static_cast<double>(g);
    }
  const std::vector<int> match = min_cost_assignment(-gain);
  double overlap = 0.0;
  for (int i = 0; i < k; ++i) overlap += gain(i, match[i]);
  return overlap / static_cast<double>(total_a);
}

}  // namespace namegame
