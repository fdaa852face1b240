#pragma once

#include <vector>

#include <Eigen/Dense>

#include "namegame/game.hpp"

namespace namegame {

// Adjusted Rand index between two labelings of the same items.  Labels are
// arbitrary ints; the index is symmetric and invariant under relabeling.
// Degenerate pairs where the correction denominator vanishes (e.g. both
// labelings trivial) score 1.0 when the labelings agree perfectly as
// partitions and 0.0 otherwise.
double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b);

// Cohen's kappa for two raters over categories 0..n_signs-1.  When expected
// agreement is 1 (both raters constant and equal) the score is 1.
double cohen_kappa(const std::vector<int>& a, const std::vector<int>& b, int n_signs);

// Mean of Cohen's kappa over all unordered rater pairs.
double mean_pairwise_kappa(const std::vector<std::vector<int>>& raters, int n_signs);

// Fleiss' kappa over the same input shape (alternative aggregate).
double fleiss_kappa(const std::vector<std::vector<int>>& raters, int n_signs);

// Minimum-cost perfect assignment on a square cost matrix; returns the
// column assigned to each row.
std::vector<int> min_cost_assignment(const Eigen::MatrixXd& cost);

// Which table of a trace supplies sign samples.
struct SignSource {
  enum class Kind { kChainTail, kAgent };
  Kind kind = Kind::kChainTail;
  int agent = 0;
  static SignSource chain_tail() { return {Kind::kChainTail, 0}; }
  static SignSource agent_table(int n) { return {Kind::kAgent, n}; }
};

// Tally of signs over the last `window` iterations of a trace: entry (d, k)
// counts iterations whose sampled table assigned sign k to object d.  Every
// row sums to `window`.
Eigen::MatrixXi collect_sign_counts(const GameTrace& trace, int window, const SignSource& source);

// Overlap between two windowed count matrices of identical shape and total,
// maximized over a global matching of the first matrix's sign labels onto
// the second's: sum_d sum_k min(a[d, match(k)], b[d, k]) / total.  In [0, 1],
// 1 when the matrices agree exactly up to sign relabeling.
double posterior_agreement(const Eigen::MatrixXi& a, const Eigen::MatrixXi& b);

}  // namespace namegame
