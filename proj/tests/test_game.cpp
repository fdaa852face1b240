#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "namegame/agent.hpp"
#include "namegame/errors.hpp"
#include "namegame/game.hpp"

using namespace namegame;

namespace {

Eigen::VectorXd vec1(double x) {
  Eigen::VectorXd v(1);
  v[0] = x;
  return v;
}

// Agent with hand-picked scalar components; theta stays fixed unless the
// caller resamples it.
AgentState pinned_agent(int id, const std::vector<double>& xs, const std::vector<double>& means,
                        double precision = 1.0) {
  AgentState a;
  a.id = id;
  a.hyper = Hyperparams::isotropic(1, static_cast<int>(means.size()), 1.0, 1.0, 1.0);
  for (double x : xs) a.features.push_back(vec1(x));
  a.signs.assign(xs.size(), 0);
  for (double m : means)
    a.theta.emplace_back(vec1(m), precision * Eigen::MatrixXd::Identity(1, 1));
  return a;
}

// Two-component scalar dataset: agents 0..N-1 all see the same points, two
// well separated groups, so chain runs settle fast and deterministically
// enough for structural checks.
std::vector<AgentState> grouped_agents(int n_agents, int per_group, std::uint64_t seed) {
  std::vector<AgentState> agents;
  RngStream rng(seed, 77);
  for (int n = 0; n < n_agents; ++n) {
    std::vector<double> xs;
    for (int i = 0; i < per_group; ++i) xs.push_back(-3.0 + 0.1 * rng.normal());
    for (int i = 0; i < per_group; ++i) xs.push_back(3.0 + 0.1 * rng.normal());
    AgentState a;
    a.id = n;
    a.hyper = Hyperparams::isotropic(1, 2, 1.0, 1.0, 1.0);
    for (double x : xs) a.features.push_back(vec1(x));
    a.signs.assign(xs.size(), 0);
    agents.push_back(std::move(a));
  }
  return agents;
}

void init_all(std::vector<AgentState>& agents, std::uint64_t seed) {
  RngStream rng(seed, 3);
  for (std::size_t n = 0; n < agents.size(); ++n) {
    RngStream sub = rng.derive(static_cast<std::uint64_t>(n));
    init_agent(agents[n], sub);
  }
}

double total_variation(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
  return 0.5 * (p - q).cwiseAbs().sum();
}

}  // namespace

TEST_CASE("method names round-trip and report chain use") {
  const Method all[] = {Method::kRmhng,           Method::kOneSample,
                        Method::kLimitedLength,   Method::kOneSampleLimitedLength,
                        Method::kNoCommunication, Method::kAllAcceptance,
                        Method::kGibbs};
  for (Method m : all) CHECK(parse_method(method_name(m)) == m);
  CHECK(parse_method("limited-length") == Method::kLimitedLength);
  CHECK_THROWS_AS(parse_method("bogus"), ConfigError);

  CHECK(method_uses_chain(Method::kRmhng));
  CHECK(method_uses_chain(Method::kAllAcceptance));
  CHECK_FALSE(method_uses_chain(Method::kNoCommunication));
  CHECK_FALSE(method_uses_chain(Method::kGibbs));

  CHECK(default_chain_shape(Method::kRmhng, 7).n_exchanges == 4);
  CHECK(default_chain_shape(Method::kRmhng, 7).chain_length == 7);
  CHECK(default_chain_shape(Method::kOneSample, 5).n_exchanges == 1);
  CHECK(default_chain_shape(Method::kOneSample, 5).chain_length == 5);
  CHECK(default_chain_shape(Method::kLimitedLength, 5).chain_length == 2);
  CHECK(default_chain_shape(Method::kOneSampleLimitedLength, 5).n_exchanges == 1);
  CHECK(default_chain_shape(Method::kAllAcceptance, 3).chain_length == 3);
}

TEST_CASE("game config validation") {
  GameConfig c;
  c.n_objects = 10;
  CHECK_NOTHROW(c.validate());

  GameConfig bad = c;
  bad.n_agents = 1;
  CHECK_THROWS_AS(bad.validate(), ContractError);

  bad = c;
  bad.n_signs = 0;
  CHECK_THROWS_AS(bad.validate(), ContractError);
  bad.n_signs = 256;
  CHECK_THROWS_AS(bad.validate(), ContractError);

  bad = c;
  bad.n_objects = 0;
  CHECK_THROWS_AS(bad.validate(), ContractError);

  bad = c;
  bad.iterations = 0;
  CHECK_THROWS_AS(bad.validate(), ContractError);

  bad = c;
  bad.n_exchanges = 0;
  CHECK_THROWS_AS(bad.validate(), ContractError);

  // full-chain methods pin M = N
  bad = c;
  bad.chain_length = 3;
  CHECK_THROWS_AS(bad.validate(), ContractError);

  // one-sample methods pin T = 1
  bad = c;
  bad.method = Method::kOneSample;
  bad.n_exchanges = 4;
  CHECK_THROWS_AS(bad.validate(), ContractError);
  bad.n_exchanges = 1;
  CHECK_NOTHROW(bad.validate());

  // limited-length methods need M < N
  bad = c;
  bad.method = Method::kLimitedLength;
  bad.chain_length = 4;
  CHECK_THROWS_AS(bad.validate(), ContractError);
  bad.chain_length = 2;
  CHECK_NOTHROW(bad.validate());

  // baselines ignore the chain shape
  bad = c;
  bad.method = Method::kGibbs;
  bad.chain_length = 99;
  CHECK_NOTHROW(bad.validate());
}

TEST_CASE("mh_receive consumes one deviate and follows the likelihood ratio") {
  // listener at x = 0 with components far apart: 0 is overwhelmingly better
  AgentState listener = pinned_agent(0, {0.0}, {0.0, 10.0});

  SUBCASE("uphill proposals always adopted") {
    listener.signs[0] = 1;
    RngStream rng(42);
    for (int i = 0; i < 200; ++i) CHECK(mh_receive(0, listener, 0, rng) == 0);
  }

  SUBCASE("hopeless proposals rejected") {
    listener.signs[0] = 0;
    RngStream rng(43);
    for (int i = 0; i < 200; ++i) CHECK(mh_receive(1, listener, 0, rng) == 0);
  }

  SUBCASE("identical proposal returned and one uniform still consumed") {
    listener.signs[0] = 0;
    RngStream a(7, 7), b(7, 7);
    CHECK(mh_receive(0, listener, 0, a) == 0);
    (void)b.uniform();
    CHECK(a.next_u64() == b.next_u64());
  }

  SUBCASE("acceptance rate matches exp(delta)") {
    // components N(0,1) and N(1,1) at x = 0: delta = -1/2
    AgentState close = pinned_agent(0, {0.0}, {0.0, 1.0});
    close.signs[0] = 0;
    RngStream rng(44);
    const int n = 40000;
    int accepted = 0;
    for (int i = 0; i < n; ++i)
      if (mh_receive(1, close, 0, rng) == 1) ++accepted;
    const double rate = static_cast<double>(accepted) / n;
    CHECK(std::abs(rate - std::exp(-0.5)) < 0.01);
  }

  SUBCASE("argument validation") {
    RngStream rng(1);
    CHECK_THROWS_AS(mh_receive(-1, listener, 0, rng), ContractError);
    CHECK_THROWS_AS(mh_receive(2, listener, 0, rng), ContractError);
    CHECK_THROWS_AS(mh_receive(0, listener, 5, rng), ContractError);
  }
}

TEST_CASE("pair exchange reaches the joint posterior") {
  std::vector<AgentState> pair;
  pair.push_back(pinned_agent(0, {0.3}, {-2.0, -0.5, 1.0, 2.5}));
  pair.push_back(pinned_agent(1, {0.1}, {-2.5, 0.0, 0.8, 3.0}));
  std::vector<const AgentState*> view{&pair[0], &pair[1]};
  const Eigen::VectorXd target = joint_sign_posterior(view, 0);

  RngStream rng(501);
  const int burn = 1000, n = 30000;
  Eigen::VectorXd hist = Eigen::VectorXd::Zero(4);
  for (int i = 0; i < burn + n; ++i) {
    const int sp = i % 2;
    pair[1 - sp].signs[0] = mh_communicate(pair[sp], pair[1 - sp], 0, rng);
    if (i >= burn) hist[pair[1 - sp].signs[0]] += 1.0;
  }
  hist /= n;
  CHECK(total_variation(hist, target) < 0.05);
}

TEST_CASE("four-agent chain tail tracks the joint posterior") {
  std::vector<AgentState> agents;
  agents.push_back(pinned_agent(0, {0.3}, {-2.0, -0.5, 1.0, 2.5}));
  agents.push_back(pinned_agent(1, {0.1}, {-2.5, 0.0, 0.8, 3.0}));
  agents.push_back(pinned_agent(2, {-0.2}, {-1.5, -0.4, 1.2, 2.0}));
  agents.push_back(pinned_agent(3, {0.5}, {-2.2, 0.3, 0.9, 2.8}));
  std::vector<const AgentState*> view;
  for (const auto& a : agents) view.push_back(&a);
  const Eigen::VectorXd target = joint_sign_posterior(view, 0);

  RngStream rng(502);
  std::vector<int> order{0, 1, 2, 3};
  const int burn = 500, n = 20000;
  Eigen::VectorXd tail_hist = Eigen::VectorXd::Zero(4);
  for (int i = 0; i < burn + n; ++i) {
    rng.shuffle(order.begin(), order.end());
    std::vector<AgentState*> chain;
    for (int id : order) chain.push_back(&agents[id]);
    (void)rmh_communicate(chain, 0, 10, rng);
    if (i >= burn) tail_hist[agents[order.back()].signs[0]] += 1.0;
  }
  tail_hist /= n;
  CHECK(total_variation(tail_hist, target) < 0.05);
}

TEST_CASE("single participant resamples from its own posterior") {
  AgentState solo = pinned_agent(0, {0.0, 5.0}, {0.0, 5.0});
  RngStream rng(77);
  std::vector<AgentState*> chain{&solo};
  for (int i = 0; i < 50; ++i) {
    // x = 0 sits five sigmas from the second component: the private draw is
    // effectively always sign 0, and it must be stored
    solo.signs[0] = 1;
    const int w = rmh_communicate(chain, 0, 4, rng);
    CHECK(w == 0);
    CHECK(solo.signs[0] == 0);
  }
}

TEST_CASE("rmh_communicate validates arguments and leaves features alone") {
  std::vector<AgentState> agents;
  agents.push_back(pinned_agent(0, {0.0, 1.0}, {0.0, 1.0}));
  agents.push_back(pinned_agent(1, {0.0, 1.0}, {0.0, 1.0}));
  std::vector<AgentState*> chain{&agents[0], &agents[1]};
  RngStream rng(9);

  CHECK_THROWS_AS(rmh_communicate(std::vector<AgentState*>{}, 0, 4, rng), ContractError);
  CHECK_THROWS_AS(rmh_communicate(chain, -1, 4, rng), ContractError);
  CHECK_THROWS_AS(rmh_communicate(chain, 2, 4, rng), ContractError);
  CHECK_THROWS_AS(rmh_communicate(chain, 0, 0, rng), ContractError);
  std::vector<AgentState*> with_null{&agents[0], nullptr};
  CHECK_THROWS_AS(rmh_communicate(with_null, 0, 4, rng), ContractError);

  const auto features_before = agents[0].features;
  const int other_before = agents[1].signs[1];
  (void)rmh_communicate(chain, 0, 4, rng);
  CHECK(agents[0].features[0] == features_before[0]);
  CHECK(agents[0].features[1] == features_before[1]);
  CHECK(agents[1].signs[1] == other_before);  // untouched object
}

TEST_CASE("joint_sign_posterior matches a hand computation") {
  // two scalar agents, two signs, unit precision, uniform prior
  AgentState a = pinned_agent(0, {0.4}, {0.0, 2.0});
  AgentState b = pinned_agent(1, {1.0}, {0.5, 1.5});
  std::vector<const AgentState*> view{&a, &b};
  const Eigen::VectorXd p = joint_sign_posterior(view, 0);

  auto log_n = [](double x, double mu) { return -0.5 * (x - mu) * (x - mu) - 0.5 * std::log(2.0 * M_PI); };
  const double l0 = log_n(0.4, 0.0) + log_n(1.0, 0.5);
  const double l1 = log_n(0.4, 2.0) + log_n(1.0, 1.5);
  const double z = std::max(l0, l1) + std::log(std::exp(l0 - std::max(l0, l1)) + std::exp(l1 - std::max(l0, l1)));
  CHECK(p[0] == doctest::Approx(std::exp(l0 - z)).epsilon(1e-12));
  CHECK(p[1] == doctest::Approx(std::exp(l1 - z)).epsilon(1e-12));
  CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("engine run matches a replay built from the public operations") {
  // same seeds, same protocol: the engine's cached loop must consume the
  // stream exactly like the public primitives do
  struct Shape {
    Method method;
    int t, m;
  };
  for (const Shape shape : {Shape{Method::kRmhng, 3, 3}, Shape{Method::kLimitedLength, 2, 2},
                            Shape{Method::kOneSample, 1, 3}}) {
    CAPTURE(method_name(shape.method));
    const int n_agents = 3, per_group = 3, iterations = 4;
    std::vector<AgentState> engine_agents = grouped_agents(n_agents, per_group, 11);
    std::vector<AgentState> replay_agents = grouped_agents(n_agents, per_group, 11);
    init_all(engine_agents, 21);
    init_all(replay_agents, 21);

    GameConfig cfg;
    cfg.method = shape.method;
    cfg.n_agents = n_agents;
    cfg.n_signs = 2;
    cfg.n_objects = 2 * per_group;
    cfg.iterations = iterations;
    cfg.n_exchanges = shape.t;
    cfg.chain_length = shape.m;

    RngStream engine_rng(99, 5);
    const GameTrace trace = run_game(cfg, engine_agents, engine_rng);

    RngStream replay_rng(99, 5);
    std::vector<int> order(n_agents);
    for (int n = 0; n < n_agents; ++n) order[n] = n;
    for (int it = 0; it < iterations; ++it) {
      replay_rng.shuffle(order.begin(), order.end());
      for (int d = 0; d < cfg.n_objects; ++d) {
        std::vector<AgentState*> chain;
        for (int j = 0; j < cfg.chain_length; ++j) chain.push_back(&replay_agents[order[j]]);
        (void)rmh_communicate(chain, d, cfg.n_exchanges, replay_rng);
      }
      for (auto& agent : replay_agents) agent.theta = sample_theta_posterior(agent, replay_rng);
      for (int n = 0; n < n_agents; ++n) {
        const std::vector<int> got = trace.table_signs(it, n);
        CHECK(got == replay_agents[n].signs);
      }
      for (int j = 0; j < cfg.chain_length; ++j) CHECK(trace.stats(it).order[j] == order[j]);
    }
    // both paths drew the same number of deviates
    CHECK(engine_rng.next_u64() == replay_rng.next_u64());
  }
}

TEST_CASE("all-acceptance run matches a replay that adopts every proposal") {
  const int n_agents = 3, per_group = 3, iterations = 4;
  std::vector<AgentState> engine_agents = grouped_agents(n_agents, per_group, 13);
  std::vector<AgentState> replay_agents = grouped_agents(n_agents, per_group, 13);
  init_all(engine_agents, 23);
  init_all(replay_agents, 23);

  GameConfig cfg;
  cfg.method = Method::kAllAcceptance;
  cfg.n_agents = n_agents;
  cfg.n_signs = 2;
  cfg.n_objects = 2 * per_group;
  cfg.iterations = iterations;
  cfg.n_exchanges = 2;
  cfg.chain_length = n_agents;

  RngStream engine_rng(101, 5);
  const GameTrace trace = run_game(cfg, engine_agents, engine_rng);

  // replay with the acceptance decision replaced by plain adoption (no
  // decision deviate drawn)
  struct Replay {
    RngStream& rng;
    int run(std::span<AgentState* const> part, int d, int t_count) {
      const std::size_t len = part.size();
      if (len == 1) {
        const int w = sample_sign_proposal(*part[0], d, rng);
        part[0]->signs[d] = w;
        return w;
      }
      for (int t = 0; t < t_count; ++t) {
        const int w = len == 2 ? sample_sign_proposal(*part[0], d, rng)
                               : run(part.first(len - 1), d, t_count);
        part[len - 1]->signs[d] = w;
      }
      return part[rng.uniform_index(len)]->signs[d];
    }
  };

  RngStream replay_rng(101, 5);
  std::vector<int> order(n_agents);
  for (int n = 0; n < n_agents; ++n) order[n] = n;
  for (int it = 0; it < iterations; ++it) {
    replay_rng.shuffle(order.begin(), order.end());
    for (int d = 0; d < cfg.n_objects; ++d) {
      std::vector<AgentState*> chain;
      for (int j = 0; j < cfg.chain_length; ++j) chain.push_back(&replay_agents[order[j]]);
      Replay r{replay_rng};
      (void)r.run(chain, d, cfg.n_exchanges);
    }
    for (auto& agent : replay_agents) agent.theta = sample_theta_posterior(agent, replay_rng);
    for (int n = 0; n < n_agents; ++n)
      CHECK(trace.table_signs(it, n) == replay_agents[n].signs);
  }
  CHECK(engine_rng.next_u64() == replay_rng.next_u64());

  // the policy accepts by definition
  for (int it = 0; it < iterations; ++it)
    CHECK(trace.stats(it).accepts == trace.stats(it).receives);
}

TEST_CASE("exchange counters follow the chain geometry") {
  // per object per iteration: proposals = T^(M-1), decisions = sum of
  // T^j for j = 1..M-1 (each hop level runs T decisions per activation)
  struct Shape {
    int t, m;
    std::uint64_t proposals, decisions;
  };
  const int n_agents = 4, per_group = 2;
  const int n_objects = 2 * per_group;
  for (const Shape s : {Shape{4, 2, 4, 4}, Shape{3, 3, 9, 12}, Shape{2, 4, 8, 14},
                        Shape{1, 4, 1, 3}, Shape{5, 1, 1, 0}}) {
    CAPTURE(s.t);
    CAPTURE(s.m);
    std::vector<AgentState> agents = grouped_agents(n_agents, per_group, 31);
    init_all(agents, 32);
    GameConfig cfg;
    cfg.method = s.m == n_agents ? Method::kRmhng : Method::kLimitedLength;
    if (s.t == 1 && s.m == n_agents) cfg.method = Method::kOneSample;
    cfg.n_agents = n_agents;
    cfg.n_signs = 2;
    cfg.n_objects = n_objects;
    cfg.iterations = 3;
    cfg.n_exchanges = s.t;
    cfg.chain_length = s.m;
    RngStream rng(33, 1);
    const GameTrace trace = run_game(cfg, agents, rng);
    for (int it = 0; it < 3; ++it) {
      CHECK(trace.stats(it).exchanges == s.proposals * n_objects);
      CHECK(trace.stats(it).receives == s.decisions * n_objects);
      CHECK(trace.stats(it).accepts <= trace.stats(it).receives);
    }
  }
}

TEST_CASE("trace structure and chain order bookkeeping") {
  const int n_agents = 4, per_group = 2;
  std::vector<AgentState> agents = grouped_agents(n_agents, per_group, 41);
  init_all(agents, 42);
  GameConfig cfg;
  cfg.n_agents = n_agents;
  cfg.n_signs = 2;
  cfg.n_objects = 2 * per_group;
  cfg.iterations = 5;
  cfg.chain_length = n_agents;
  RngStream rng(43, 1);
  const GameTrace trace = run_game(cfg, agents, rng);

  CHECK(trace.n_tables() == n_agents);
  CHECK(trace.n_objects() == cfg.n_objects);
  CHECK(trace.n_iterations() == cfg.iterations);
  for (int it = 0; it < cfg.iterations; ++it) {
    const auto& order = trace.stats(it).order;
    REQUIRE(static_cast<int>(order.size()) == n_agents);
    std::vector<bool> seen(n_agents, false);
    for (int id : order) {
      REQUIRE(id >= 0);
      REQUIRE(id < n_agents);
      CHECK_FALSE(seen[id]);
      seen[id] = true;
    }
    CHECK(trace.has_tail(it));
    CHECK(trace.tail_table(it) == order.back());
    // the final tables equal the agents' live tables on the last iteration
    if (it == cfg.iterations - 1)
      for (int n = 0; n < n_agents; ++n) CHECK(trace.table_signs(it, n) == agents[n].signs);
  }
  CHECK_THROWS_AS(trace.sign(0, 0, 99), ContractError);
  CHECK_THROWS_AS(trace.sign(99, 0, 0), ContractError);
  CHECK_THROWS_AS(trace.stats(-1), ContractError);

  // per-object shuffling records no fixed order
  std::vector<AgentState> agents2 = grouped_agents(n_agents, per_group, 41);
  init_all(agents2, 42);
  GameConfig cfg2 = cfg;
  cfg2.shuffle_per_object = true;
  RngStream rng2(43, 1);
  const GameTrace trace2 = run_game(cfg2, agents2, rng2);
  CHECK_FALSE(trace2.has_tail(0));
  CHECK_THROWS_AS(trace2.tail_table(0), ContractError);
}

TEST_CASE("runs are deterministic in the seed") {
  for (Method m : {Method::kRmhng, Method::kNoCommunication, Method::kGibbs}) {
    CAPTURE(method_name(m));
    GameConfig cfg;
    cfg.method = m;
    cfg.n_agents = 3;
    cfg.n_signs = 2;
    cfg.n_objects = 6;
    cfg.iterations = 4;
    cfg.chain_length = 3;

    std::vector<std::vector<std::vector<int>>> tables[2];
    for (int rep = 0; rep < 2; ++rep) {
      std::vector<AgentState> agents = grouped_agents(3, 3, 51);
      init_all(agents, 52);
      RngStream rng(53, 2);
      const GameTrace trace = run_method(cfg, agents, rng);
      for (int it = 0; it < trace.n_iterations(); ++it) {
        std::vector<std::vector<int>> iter_tables;
        for (int t = 0; t < trace.n_tables(); ++t) iter_tables.push_back(trace.table_signs(it, t));
        tables[rep].push_back(std::move(iter_tables));
      }
    }
    CHECK(tables[0] == tables[1]);
  }
}

TEST_CASE("baseline runs have the expected trace shape") {
  std::vector<AgentState> agents = grouped_agents(3, 3, 61);
  init_all(agents, 62);
  GameConfig cfg;
  cfg.method = Method::kNoCommunication;
  cfg.n_agents = 3;
  cfg.n_signs = 2;
  cfg.n_objects = 6;
  cfg.iterations = 3;
  RngStream rng(63, 1);
  const GameTrace trace = run_no_communication(cfg, agents, rng);
  CHECK(trace.n_tables() == 3);
  CHECK(trace.n_iterations() == 3);
  CHECK_FALSE(trace.has_tail(0));
  CHECK(trace.stats(0).exchanges == 0);

  std::vector<AgentState> agents2 = grouped_agents(3, 3, 61);
  init_all(agents2, 62);
  GameConfig cfg2 = cfg;
  cfg2.method = Method::kGibbs;
  RngStream rng2(63, 2);
  const GameTrace trace2 = run_gibbs(cfg2, agents2, rng2);
  CHECK(trace2.n_tables() == 1);
  CHECK(trace2.n_iterations() == 3);
  CHECK(trace2.has_tail(0));
  CHECK(trace2.tail_table(0) == 0);
  // the shared table lands on every agent
  for (const auto& a : agents2) CHECK(a.signs == trace2.table_signs(2, 0));
}

TEST_CASE("runs reject inconsistent agent sets") {
  GameConfig cfg;
  cfg.n_agents = 3;
  cfg.n_signs = 2;
  cfg.n_objects = 6;
  cfg.iterations = 1;
  cfg.chain_length = 3;
  RngStream rng(71, 1);

  // wrong agent count
  std::vector<AgentState> two = grouped_agents(2, 3, 72);
  init_all(two, 73);
  CHECK_THROWS_AS(run_game(cfg, two, rng), ContractError);

  // uninitialized theta
  std::vector<AgentState> raw = grouped_agents(3, 3, 72);
  CHECK_THROWS_AS(run_game(cfg, raw, rng), ContractError);

  // chainless method through run_game
  std::vector<AgentState> ok = grouped_agents(3, 3, 72);
  init_all(ok, 73);
  GameConfig gibbs_cfg = cfg;
  gibbs_cfg.method = Method::kGibbs;
  CHECK_THROWS_AS(run_game(gibbs_cfg, ok, rng), ContractError);

  // mismatched sign prior across agents
  std::vector<AgentState> skewed = grouped_agents(3, 3, 72);
  init_all(skewed, 73);
  skewed[1].hyper.gamma[0] = 2.0;
  CHECK_THROWS_AS(run_game(cfg, skewed, rng), ContractError);
}
