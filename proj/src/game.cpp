#include "namegame/game.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "namegame/errors.hpp"

namespace namegame {

namespace {

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Shared chain protocol.  Ops supplies proposal sampling, the receive
// decision, and sign storage; Handle identifies one participant.  The
// recursion mirrors the protocol definition: the leading sub-chain settles
// on a sign, the last participant decides on it, n_exchanges times; a chain
// of two is the plain speaker-listener exchange.  The return value is the
// current sign of a uniformly chosen participant.  A single participant
// draws from its own posterior once (no choice deviate consumed).
template <class Handle, class Ops>
int rmh_core(std::span<const Handle> chain, int d, int n_exchanges, Ops& ops, RngStream& rng) {
  const std::size_t len = chain.size();
  if (len == 1) {
    const int w = ops.propose(chain[0], d);
    ops.store(chain[0], d, w);
    return w;
  }
  for (int t = 0; t < n_exchanges; ++t) {
    if (len == 2) {
      const int proposal = ops.propose(chain[0], d);
      const int w = ops.receive(proposal, chain[1], d);
      ops.store(chain[1], d, w);
    } else {
      const int relayed = rmh_core(chain.first(len - 1), d, n_exchanges, ops, rng);
      const int w = ops.receive(relayed, chain[len - 1], d);
      ops.store(chain[len - 1], d, w);
    }
  }
  return ops.current(chain[rng.uniform_index(len)], d);
}

struct LiveOps {
  RngStream& rng;
  int propose(AgentState* a, int d) { return sample_sign_proposal(*a, d, rng); }
  int receive(int proposal, AgentState* a, int d) { return mh_receive(proposal, *a, d, rng); }
  void store(AgentState* a, int d, int w) { a->signs[d] = w; }
  int current(AgentState* a, int d) const { return a->signs[d]; }
};

// Engine-side ops: agents indexed by id, per-iteration cache of feature
// log-likelihoods (components are fixed while the objects are played), and
// exchange counters.  Produces bit-identical draws to the public operations.
struct CachedOps {
  std::vector<AgentState>& agents;
  const std::vector<Eigen::MatrixXd>& ll;  // [agent](object, sign)
  const Eigen::VectorXd& log_gamma;
  bool accept_all;
  RngStream& rng;
  IterationStats& stats;

  int propose(int n, int d) {
    ++stats.exchanges;
    const Eigen::VectorXd lw = log_gamma + ll[n].row(d).transpose();
    return sample_categorical_log(lw, rng);
  }
  int receive(int proposal, int n, int d) {
    ++stats.receives;
    if (accept_all) {
      ++stats.accepts;
      return proposal;
    }
    const double u = rng.uniform();
    const int cur = agents[n].signs[d];
    const double delta = ll[n](d, proposal) - ll[n](d, cur);
    const bool accept = delta >= 0.0 || u <= std::exp(delta);
    if (accept) ++stats.accepts;
    return accept ? proposal : cur;
  }
  void store(int n, int d, int w) { agents[n].signs[d] = w; }
  int current(int n, int d) const { return agents[n].signs[d]; }
};

void check_agents(const GameConfig& config, const std::vector<AgentState>& agents) {
  if (static_cast<int>(agents.size()) != config.n_agents)
    throw ContractError("run: agent count does not match config");
  for (const auto& a : agents) {
    a.check_consistent();
    if (a.theta.empty()) throw ContractError("run: agents must be initialized first");
    if (a.n_objects() != config.n_objects)
      throw ContractError("run: object count does not match config");
    if (a.n_signs() != config.n_signs)
      throw ContractError("run: sign count does not match config");
    if ((a.hyper.gamma - agents[0].hyper.gamma).cwiseAbs().maxCoeff() != 0.0)
      throw ContractError("run: agents must share the sign prior");
  }
}

Eigen::VectorXd log_gamma_of(const AgentState& agent) {
  Eigen::VectorXd lg(agent.n_signs());
  for (int k = 0; k < agent.n_signs(); ++k)
    lg[k] = agent.hyper.gamma[k] > 0.0 ? std::log(agent.hyper.gamma[k])
                                       : -std::numeric_limits<double>::infinity();
  return lg;
}

void fill_likelihood_cache(const std::vector<AgentState>& agents,
                           std::vector<Eigen::MatrixXd>& ll) {
  ll.resize(agents.size());
  for (std::size_t n = 0; n < agents.size(); ++n) {
    const AgentState& a = agents[n];
    ll[n].resize(a.n_objects(), a.n_signs());
    for (int d = 0; d < a.n_objects(); ++d)
      for (int k = 0; k < a.n_signs(); ++k)
        ll[n](d, k) = log_gaussian_density(a.features[d], a.theta[k]);
  }
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::kRmhng: return "rmhng";
    case Method::kOneSample: return "one_sample";
    case Method::kLimitedLength: return "limited_length";
    case Method::kOneSampleLimitedLength: return "one_sample_limited_length";
    case Method::kNoCommunication: return "no_communication";
    case Method::kAllAcceptance: return "all_acceptance";
    case Method::kGibbs: return "gibbs";
  }
  throw ContractError("method_name: unknown method");
}

Method parse_method(const std::string& name) {
  std::string s = name;
  std::replace(s.begin(), s.end(), '-', '_');
  for (Method m : {Method::kRmhng, Method::kOneSample, Method::kLimitedLength,
                   Method::kOneSampleLimitedLength, Method::kNoCommunication,
                   Method::kAllAcceptance, Method::kGibbs})
    if (s == method_name(m)) return m;
  throw ConfigError("unknown method: " + name);
}

bool method_uses_chain(Method m) {
  return m != Method::kNoCommunication && m != Method::kGibbs;
}

ChainShape default_chain_shape(Method m, int n_agents) {
  switch (m) {
    case Method::kRmhng: return {4, n_agents};
    case Method::kOneSample: return {1, n_agents};
    case Method::kLimitedLength: return {4, 2};
    case Method::kOneSampleLimitedLength: return {1, 2};
    case Method::kAllAcceptance: return {4, n_agents};
    case Method::kNoCommunication:
    case Method::kGibbs: return {1, 1};
  }
  throw ContractError("default_chain_shape: unknown method");
}

void GameConfig::validate() const {
  if (n_agents < 2) throw ContractError("GameConfig: need at least two agents");
  if (n_signs < 1 || n_signs > 255) throw ContractError("GameConfig: sign count out of range");
  if (n_objects < 1) throw ContractError("GameConfig: need at least one object");
  if (iterations < 1) throw ContractError("GameConfig: need at least one iteration");
  if (method_uses_chain(method)) {
    if (n_exchanges < 1) throw ContractError("GameConfig: exchange count must be positive");
    if (chain_length < 1 || chain_length > n_agents)
      throw ContractError("GameConfig: chain length out of range");
    switch (method) {
      case Method::kOneSample:
        if (n_exchanges != 1) throw ContractError("GameConfig: one-sample methods need T = 1");
        [[fallthrough]];
      case Method::kRmhng:
      case Method::kAllAcceptance:
        if (chain_length != n_agents)
          throw ContractError("GameConfig: full-chain methods need M = N");
        break;
      case Method::kOneSampleLimitedLength:
        if (n_exchanges != 1) throw ContractError("GameConfig: one-sample methods need T = 1");
        [[fallthrough]];
      case Method::kLimitedLength:
        if (chain_length >= n_agents)
          throw ContractError("GameConfig: limited-length methods need M < N");
        break;
      default: break;
    }
  }
}

GameTrace::GameTrace(int n_tables, int n_objects, int n_signs)
    : n_tables_(n_tables), n_objects_(n_objects), n_signs_(n_signs) {
  if (n_tables < 1 || n_objects < 1) throw ContractError("GameTrace: empty shape");
  if (n_signs < 1 || n_signs > 255) throw ContractError("GameTrace: sign count out of range");
}

int GameTrace::sign(int iteration, int table, int d) const {
  if (iteration < 0 || iteration >= n_iterations() || table < 0 || table >= n_tables_ || d < 0 ||
      d >= n_objects_)
    throw ContractError("GameTrace::sign: index out of range");
  return records_[iteration].signs(table, d);
}

std::vector<int> GameTrace::table_signs(int iteration, int table) const {
  if (iteration < 0 || iteration >= n_iterations() || table < 0 || table >= n_tables_)
    throw ContractError("GameTrace::table_signs: index out of range");
  std::vector<int> out(n_objects_);
  for (int d = 0; d < n_objects_; ++d) out[d] = records_[iteration].signs(table, d);
  return out;
}

const IterationStats& GameTrace::stats(int iteration) const {
  if (iteration < 0 || iteration >= n_iterations())
    throw ContractError("GameTrace::stats: index out of range");
  return records_[iteration].stats;
}

bool GameTrace::has_tail(int iteration) const { return !stats(iteration).order.empty(); }

int GameTrace::tail_table(int iteration) const {
  const IterationStats& st = stats(iteration);
  if (st.order.empty())
    throw ContractError("GameTrace::tail_table: iteration recorded no fixed chain order");
  const int table = st.order.back();
  if (table < 0 || table >= n_tables_)
    throw ContractError("GameTrace::tail_table: recorded order out of range");
  return table;
}

void GameTrace::push_iteration(const std::vector<const std::vector<int>*>& tables,
                               IterationStats stats) {
  if (static_cast<int>(tables.size()) != n_tables_)
    throw ContractError("GameTrace::push_iteration: table count mismatch");
  Record rec;
  rec.signs.resize(n_tables_, n_objects_);
  for (int t = 0; t < n_tables_; ++t) {
    const std::vector<int>& src = *tables[t];
    if (static_cast<int>(src.size()) != n_objects_)
      throw ContractError("GameTrace::push_iteration: table length mismatch");
    for (int d = 0; d < n_objects_; ++d) {
      if (src[d] < 0 || src[d] >= n_signs_)
        throw ContractError("GameTrace::push_iteration: sign out of range");
      rec.signs(t, d) = static_cast<std::uint8_t>(src[d]);
    }
  }
  rec.stats = std::move(stats);
  records_.push_back(std::move(rec));
}

int mh_receive(int proposal, const AgentState& listener, int d, RngStream& rng) {
  if (proposal < 0 || proposal >= listener.n_signs())
    throw ContractError("mh_receive: proposal out of range");
  if (d < 0 || d >= listener.n_objects()) throw ContractError("mh_receive: bad object index");
  const double u = rng.uniform();
  const int cur = listener.signs[d];
  if (proposal == cur) return proposal;
  const double delta =
      log_feature_likelihood(listener, d, proposal) - log_feature_likelihood(listener, d, cur);
  if (delta >= 0.0) return proposal;
  return u <= std::exp(delta) ? proposal : cur;
}

int mh_communicate(const AgentState& speaker, const AgentState& listener, int d, RngStream& rng) {
  const int proposal = sample_sign_proposal(speaker, d, rng);
  return mh_receive(proposal, listener, d, rng);
}

int rmh_communicate(std::span<AgentState* const> participants, int d, int n_exchanges,
                    RngStream& rng) {
  if (participants.empty()) throw ContractError("rmh_communicate: no participants");
  if (n_exchanges < 1) throw ContractError("rmh_communicate: exchange count must be positive");
  for (AgentState* a : participants) {
    if (a == nullptr) throw ContractError("rmh_communicate: null participant");
    if (d < 0 || d >= a->n_objects()) throw ContractError("rmh_communicate: bad object index");
  }
  LiveOps ops{rng};
  return rmh_core<AgentState*>(participants, d, n_exchanges, ops, rng);
}

Eigen::VectorXd joint_sign_posterior(std::span<const AgentState* const> agents, int d) {
  if (agents.empty()) throw ContractError("joint_sign_posterior: no agents");
  const int k_signs = agents[0]->n_signs();
  Eigen::VectorXd lw = log_gamma_of(*agents[0]);
  for (const AgentState* a : agents) {
    if (a->n_signs() != k_signs) throw ContractError("joint_sign_posterior: sign count mismatch");
    for (int k = 0; k < k_signs; ++k) lw[k] += log_feature_likelihood(*a, d, k);
  }
  const double z = log_sum_exp(lw);
  return (lw.array() - z).exp();
}

GameTrace run_game(const GameConfig& config, std::vector<AgentState>& agents, RngStream& rng) {
  config.validate();
  if (!method_uses_chain(config.method))
    throw ContractError("run_game: method has no chain protocol");
  check_agents(config, agents);

  GameTrace trace(config.n_agents, config.n_objects, config.n_signs);
  const Eigen::VectorXd log_gamma = log_gamma_of(agents[0]);
  std::vector<Eigen::MatrixXd> ll;
  std::vector<int> order(config.n_agents);
  std::iota(order.begin(), order.end(), 0);
  const bool accept_all = config.method == Method::kAllAcceptance;

  for (int it = 0; it < config.iterations; ++it) {
    const auto started = std::chrono::steady_clock::now();
    IterationStats st;
    fill_likelihood_cache(agents, ll);
    CachedOps ops{agents, ll, log_gamma, accept_all, rng, st};
    if (!config.shuffle_per_object) {
      rng.shuffle(order.begin(), order.end());
      st.order.assign(order.begin(), order.begin() + config.chain_length);
    }
    for (int d = 0; d < config.n_objects; ++d) {
      if (config.shuffle_per_object) rng.shuffle(order.begin(), order.end());
      const std::span<const int> chain(order.data(), static_cast<std::size_t>(config.chain_length));
      rmh_core(chain, d, config.n_exchanges, ops, rng);
    }
    for (auto& agent : agents) agent.theta = sample_theta_posterior(agent, rng);
    st.seconds = elapsed_seconds(started);
    std::vector<const std::vector<int>*> tables;
    tables.reserve(agents.size());
    for (const auto& agent : agents) tables.push_back(&agent.signs);
    trace.push_iteration(tables, std::move(st));
  }
  return trace;
}

GameTrace run_no_communication(const GameConfig& config, std::vector<AgentState>& agents,
                               RngStream& rng) {
  config.validate();
  check_agents(config, agents);
  GameTrace trace(config.n_agents, config.n_objects, config.n_signs);
  for (int it = 0; it < config.iterations; ++it) {
    const auto started = std::chrono::steady_clock::now();
    IterationStats st;
    for (auto& agent : agents) {
      for (int d = 0; d < config.n_objects; ++d)
        agent.signs[d] = sample_sign_proposal(agent, d, rng);
      agent.theta = sample_theta_posterior(agent, rng);
    }
    st.seconds = elapsed_seconds(started);
    std::vector<const std::vector<int>*> tables;
    tables.reserve(agents.size());
    for (const auto& agent : agents) tables.push_back(&agent.signs);
    trace.push_iteration(tables, std::move(st));
  }
  return trace;
}

GameTrace run_gibbs(const GameConfig& config, std::vector<AgentState>& agents, RngStream& rng) {
  config.validate();
  check_agents(config, agents);
  GameTrace trace(1, config.n_objects, config.n_signs);
  const Eigen::VectorXd log_gamma = log_gamma_of(agents[0]);
  std::vector<Eigen::MatrixXd> ll;
  std::vector<int> shared(config.n_objects, 0);
  for (int it = 0; it < config.iterations; ++it) {
    const auto started = std::chrono::steady_clock::now();
    IterationStats st;
    st.order = {0};
    fill_likelihood_cache(agents, ll);
    for (int d = 0; d < config.n_objects; ++d) {
      Eigen::VectorXd lw = log_gamma;
      for (std::size_t n = 0; n < agents.size(); ++n) lw += ll[n].row(d).transpose();
      shared[d] = sample_categorical_log(lw, rng);
    }
    for (auto& agent : agents) {
      agent.signs = shared;
      agent.theta = sample_theta_posterior(agent, rng);
    }
    st.seconds = elapsed_seconds(started);
    trace.push_iteration({&shared}, std::move(st));
  }
  return trace;
}

GameTrace run_method(const GameConfig& config, std::vector<AgentState>& agents, RngStream& rng) {
  switch (config.method) {
    case Method::kNoCommunication: return run_no_communication(config, agents, rng);
    case Method::kGibbs: return run_gibbs(config, agents, rng);
    default: return run_game(config, agents, rng);
  }
}

}  // namespace namegame
