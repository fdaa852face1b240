#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "namegame/agent.hpp"
#include "namegame/rng.hpp"

namespace namegame {

// The communication variants plus the two baselines and the centralized
// reference sampler.
enum class Method {
  kRmhng,                  // full chain (M = N), T exchanges per hop
  kOneSample,              // T = 1, full chain
  kLimitedLength,          // T exchanges, chain shorter than N
  kOneSampleLimitedLength, // T = 1, short chain
  kNoCommunication,        // isolated per-agent Gibbs clustering
  kAllAcceptance,          // chain protocol with every proposal adopted
  kGibbs,                  // centralized collapsed sampler over a shared table
};

const char* method_name(Method m);
Method parse_method(const std::string& name);
bool method_uses_chain(Method m);  // everything except no-communication/gibbs

// Canonical exchange count / chain length for a method at a given group
// size.  Chain length counts participating agents.
struct ChainShape {
  int n_exchanges;  // T
  int chain_length; // M
};
ChainShape default_chain_shape(Method m, int n_agents);

struct GameConfig {
  Method method = Method::kRmhng;
  int n_agents = 4;
  int n_signs = 5;
  int n_objects = 0;
  int iterations = 100;
  int n_exchanges = 4;   // T: exchanges per speaker-listener hop
  int chain_length = 4;  // M: number of agents participating per object
  bool shuffle_per_object = false;  // reshuffle roles for every object
                                    // (default: once per iteration)
  void validate() const;
};

struct IterationStats {
  std::uint64_t exchanges = 0;  // speaker proposal events
  std::uint64_t receives = 0;   // accept/reject decisions
  std::uint64_t accepts = 0;
  double seconds = 0.0;
  // Participant order used for every object of the iteration (agent ids,
  // chain head first).  Empty when roles varied within the iteration or the
  // method has no chain.
  std::vector<int> order;
};

// Per-iteration snapshots of every sign table.  Chain methods record one
// table per agent; the centralized sampler records the single shared table.
class GameTrace {
 public:
  GameTrace(int n_tables, int n_objects, int n_signs);

  int n_tables() const { return n_tables_; }
  int n_objects() const { return n_objects_; }
  int n_signs() const { return n_signs_; }
  int n_iterations() const { return static_cast<int>(records_.size()); }

  int sign(int iteration, int table, int d) const;
  std::vector<int> table_signs(int iteration, int table) const;
  const IterationStats& stats(int iteration) const;

  // Table holding the chain tail's signs at a given iteration; throws
  // ContractError when the iteration recorded no fixed order.
  int tail_table(int iteration) const;
  bool has_tail(int iteration) const;

  void push_iteration(const std::vector<const std::vector<int>*>& tables, IterationStats stats);

 private:
  int n_tables_, n_objects_, n_signs_;
  struct Record {
    Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> signs;  // tables x objects
    IterationStats stats;
  };
  std::vector<Record> records_;
};

// --- elementary operations ---------------------------------------------

// Listener decides whether to adopt the proposed sign for object d.  The
// acceptance ratio is the listener's likelihood ratio between proposal and
// current sign; one uniform deviate is always consumed.  Pure: returns the
// resulting sign, the caller stores it.
int mh_receive(int proposal, const AgentState& listener, int d, RngStream& rng);

// Speaker draws a sign from its own posterior for object d and the listener
// runs mh_receive on it.  Pure with respect to both agents.
int mh_communicate(const AgentState& speaker, const AgentState& listener, int d, RngStream& rng);

// Recursive chain protocol over the given participants (chain head first).
// Repeats n_exchanges times: the leading sub-chain produces a sign, the last
// participant runs mh_receive on it and stores the outcome.  With two
// participants the sub-chain step is a plain mh_communicate.  Returns the
// current sign of a uniformly chosen participant.  Mutates participants'
// sign tables in place.  A single participant resamples its own sign from
// its private posterior.
int rmh_communicate(std::span<AgentState* const> participants, int d, int n_exchanges,
                    RngStream& rng);

// Normalized joint posterior over signs for object d given every listed
// agent's observation and components: p(k) proportional to
// gamma_k * prod_n N(x_d^n | theta_k^n).
Eigen::VectorXd joint_sign_posterior(std::span<const AgentState* const> agents, int d);

// --- full runs ----------------------------------------------------------

// Chain-protocol game (rmhng / one-sample / limited-length variants and the
// all-acceptance ablation).  Each iteration: shuffle roles, play every
// object through the chain, then every agent resamples its components.
GameTrace run_game(const GameConfig& config, std::vector<AgentState>& agents, RngStream& rng);

// Isolated baseline: every agent runs its own Gibbs sweep (sign draws from
// its private posterior, then component resampling).  No interaction.
GameTrace run_no_communication(const GameConfig& config, std::vector<AgentState>& agents,
                               RngStream& rng);

// Centralized reference: one shared sign table sampled from the product of
// all agents' likelihoods, then per-agent component resampling.
GameTrace run_gibbs(const GameConfig& config, std::vector<AgentState>& agents, RngStream& rng);

// Dispatch on config.method.
GameTrace run_method(const GameConfig& config, std::vector<AgentState>& agents, RngStream& rng);

}  // namespace namegame
