#include <doctest.h>

#include <cmath>
#include <numeric>

#include "asdn/harness.hpp"
#include "asdn/sampling.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace asdn;

namespace {

SamplerState state_at(double alpha, bool sampled, std::size_t size, double eps2,
                      SamplerParams p = {}) {
  SamplerState st(size, p);
  st.alpha = alpha;
  st.sampled = sampled;
  std::fill(st.eps2.begin(), st.eps2.end(), eps2);
  return st;
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("phi endpoints and midpoint") {
  for (double ap : {0.5, 1.0, 4.0, 10.0}) {
    CHECK(phi(ap, ap) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(phi(-ap, ap)) <= 1e-15);
    CHECK(phi(0.0, ap) == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("phi is odd around one half") {
  for (double a = -4.0; a <= 4.0; a += 0.25) {
    CHECK(phi(a, 4.0) + phi(-a, 4.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(phi_prime(a, 4.0) == doctest::Approx(phi_prime(-a, 4.0)).epsilon(1e-14));
  }
}

TEST_CASE("phi_prime at the origin") {
  CHECK(phi_prime(0.0, 4.0) == doctest::Approx(0.25932868018188704).epsilon(1e-15));
}

TEST_CASE("phi_prime matches a central difference") {
  for (double a = -4.0; a <= 4.0; a += 0.1) {
    const double fd = oracle::central_difference([](double x) { return phi(x, 4.0); }, a, 1e-5);
    CHECK(std::abs(fd - phi_prime(a, 4.0)) <= 1e-6 * std::abs(phi_prime(a, 4.0)));
  }
}

TEST_CASE("phi is strictly increasing") {
  double prev = phi(-4.0, 4.0);
  for (double a = -3.9; a <= 4.0; a += 0.1) {
    const double cur = phi(a, 4.0);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("decide thresholds alpha at zero") {
  SamplerState st(1, {});
  for (double a : {-4.0, -1e-12, 0.0, 1e-12, 4.0}) {
    st.alpha = a;
    CHECK(decide(st) == (a >= 0.0));
  }
  CHECK(decide(SamplerState(3, {})));
}

TEST_CASE("alpha update by hand") {
  const std::vector<double> c(4, 0.25);
  SUBCASE("idle node with pending error") {
    auto st = state_at(0.0, false, 4, 0.3);
    CHECK(update_alpha(st, c) == doctest::Approx(0.012222160696972335).epsilon(1e-14));
  }
  SUBCASE("sampled node with error below the threshold") {
    auto st = state_at(0.0, true, 4, 0.3);
    const double expect = 0.1571 * 0.25932868018188704 * (0.3 - 0.68);
    CHECK(update_alpha(st, c) == doctest::Approx(expect).epsilon(1e-14));
  }
  SUBCASE("clamped at both ends") {
    SamplerParams p;
    p.mu_s = 1e3;
    auto hi = state_at(3.9, false, 4, 10.0, p);
    CHECK(update_alpha(hi, c) == 4.0);
    auto lo = state_at(-3.9, true, 4, 0.0, p);
    CHECK(update_alpha(lo, c) == -4.0);
  }
  SUBCASE("weights select the neighbors") {
    auto st = state_at(1.0, false, 3, 0.0);
    st.eps2 = {1.0, 0.0, 0.0};
    const std::vector<double> w{0.5, 0.25, 0.25};
    const double expect = 1.0 + 0.1571 * phi_prime(1.0, 4.0) * 0.5;
    CHECK(update_alpha(st, w) == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("alpha never decreases while idle and never increases under a quiet neighborhood") {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> a(-4.0, 4.0);
  std::uniform_real_distribution<double> e(0.0, 2.0);
  for (int trial = 0; trial < 500; ++trial) {
    auto c = oracle::random_vector(5, eng, 0.0, 1.0);
    const double total = std::accumulate(c.begin(), c.end(), 0.0);
    for (auto& x : c) x /= total;

    auto idle = state_at(a(eng), false, 5, 0.0);
    for (auto& x : idle.eps2) x = e(eng);
    const double before = idle.alpha;
    CHECK(update_alpha(idle, c) >= before);

    auto busy = state_at(a(eng), true, 5, 0.0);
    for (auto& x : busy.eps2) x = e(eng) * 0.3;  // Σ c ε² < 0.68
    const double b2 = busy.alpha;
    CHECK(update_alpha(busy, c) <= b2);
  }
}

TEST_CASE("refresh_eps only records sampled errors") {
  SamplerState st(2, {});
  refresh_eps(st, 1, 0.5, true);
  CHECK(st.eps2[1] == 0.25);
  refresh_eps(st, 1, 3.0, false);
  CHECK(st.eps2[1] == 0.25);
  CHECK(st.eps2[0] == 0.0);
}

TEST_CASE("policy kind names round trip") {
  for (PolicyKind k : {PolicyKind::full, PolicyKind::as_sampling, PolicyKind::as_censoring,
                       PolicyKind::random_sampling, PolicyKind::probabilistic_transmission,
                       PolicyKind::non_cooperative}) {
    CHECK(policy_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(policy_kind_from_string("sometimes"), std::invalid_argument);
}

TEST_CASE("censoring transmissions") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {1, 3}};
  const Topology t = Topology::from_edges(4, edges);
  SUBCASE("all idle") {
    const auto tx = censoring_step(t, Bitmap(4, 0));
    CHECK(tx.transfers == 0);
    CHECK(std::count(tx.transmits.begin(), tx.transmits.end(), 1) == 0);
  }
  SUBCASE("all sampled equals every directed link") {
    const auto tx = censoring_step(t, Bitmap(4, 1));
    CHECK(tx.transfers == t.directed_link_count());
    CHECK(tx.transfers == 6);
  }
  SUBCASE("hub only") {
    const auto tx = censoring_step(t, Bitmap{0, 1, 0, 0});
    CHECK(tx.transfers == 3);
    CHECK(tx.transmits == Bitmap{0, 1, 0, 0});
  }
}

TEST_CASE("idle censoring nodes keep a frozen intermediate estimate") {
  RunConfig cfg = fixture::small_config(PolicyKind::as_censoring, 3000, 1);
  cfg.flip_iteration.reset();
  const Scenario sc = prepare(cfg);
  Simulator sim(sc, cfg, 0);
  std::size_t idle_checks = 0;
  for (int n = 0; n < 3000; ++n) {
    std::vector<std::vector<double>> before;
    for (const auto& node : sim.nodes()) before.push_back(node.psi);
    sim.step();
    for (NodeIndex k = 0; k < sc.topology.size(); ++k) {
      if (sim.sampled()[k]) continue;
      CHECK(sim.nodes()[k].psi == before[k]);
      ++idle_checks;
    }
  }
  CHECK(idle_checks > 0);
}

TEST_CASE("idle sampling nodes forward their combined estimate") {
  RunConfig cfg = fixture::small_config(PolicyKind::as_sampling, 3000, 1);
  cfg.flip_iteration.reset();
  const Scenario sc = prepare(cfg);
  Simulator sim(sc, cfg, 0);
  std::size_t idle_checks = 0;
  for (int n = 0; n < 3000; ++n) {
    std::vector<std::vector<double>> w_before;
    for (const auto& node : sim.nodes()) w_before.push_back(node.w);
    sim.step();
    for (NodeIndex k = 0; k < sc.topology.size(); ++k) {
      if (sim.sampled()[k]) continue;
      CHECK(sim.nodes()[k].psi == w_before[k]);
      ++idle_checks;
    }
  }
  CHECK(idle_checks > 0);
}

TEST_CASE("random sampling picks exactly V_s nodes") {
  PolicyConfig p;
  p.kind = PolicyKind::random_sampling;
  Engine eng(3);
  for (std::size_t vs : {0u, 1u, 7u, 20u}) {
    p.sampled_nodes = vs;
    for (int trial = 0; trial < 50; ++trial) {
      const Bitmap b = baseline_step(p, eng, 20);
      CHECK(static_cast<std::size_t>(std::count(b.begin(), b.end(), 1)) == vs);
    }
  }
  p.sampled_nodes = 21;
  CHECK_THROWS_AS(baseline_step(p, eng, 20), std::invalid_argument);
}

TEST_CASE("random sampling is uniform over nodes") {
  PolicyConfig p;
  p.kind = PolicyKind::random_sampling;
  p.sampled_nodes = 5;
  Engine eng(4);
  std::vector<int> hits(20, 0);
  const int rounds = 20000;
  for (int r = 0; r < rounds; ++r) {
    const Bitmap b = baseline_step(p, eng, 20);
    for (std::size_t k = 0; k < 20; ++k) hits[k] += b[k];
  }
  for (int h : hits) CHECK(std::abs(h / double(rounds) - 0.25) < 0.02);
}

TEST_CASE("other baselines sample every node") {
  Engine eng(5);
  for (PolicyKind k : {PolicyKind::full, PolicyKind::probabilistic_transmission,
                       PolicyKind::non_cooperative}) {
    PolicyConfig p;
    p.kind = k;
    CHECK(baseline_step(p, eng, 6) == Bitmap(6, 1));
  }
}

TEST_CASE("probabilistic transmission link activity") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}};
  const Topology t = Topology::from_edges(3, edges);
  std::vector<Engine> engines{Engine(1), Engine(2), Engine(3)};
  for (double p : {0.0, 1.0}) {
    const auto active = draw_active_links(t, p, engines);
    for (NodeIndex k = 0; k < 3; ++k) {
      for (std::size_t s = 0; s < t.neighbors(k).size(); ++s) {
        const bool self = t.neighbors(k)[s] == k;
        CHECK(active[k][s] == (self || p == 1.0 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("probabilistic transmission with p = 0 never communicates") {
  RunConfig cfg = fixture::small_config(PolicyKind::probabilistic_transmission, 200, 1);
  cfg.policy.link_probability = 0.0;
  const Scenario sc = prepare(cfg);
  for (const auto& rec : run_realization(sc, cfg, 0)) CHECK(rec.communications == 0);
}

TEST_CASE("steady-state nodes alternate between sampled and idle runs") {
  RunConfig cfg = fixture::small_config(PolicyKind::as_sampling, 14000, 1);
  cfg.flip_iteration.reset();
  const Scenario sc = prepare(cfg);
  const std::size_t v = sc.topology.size();
  std::vector<std::size_t> on(v, 0), off(v, 0), switches(v, 0);
  Bitmap last(v, 1);
  run_realization(sc, cfg, 0, [&](const Simulator& sim, const IterationRecord& rec) {
    if (rec.n < 4000) return;
    for (NodeIndex k = 0; k < v; ++k) {
      const auto s = sim.sampled()[k];
      (s ? on : off)[k] += 1;
      if (rec.n > 4000 && s != last[k]) ++switches[k];
      last[k] = s;
    }
  });
  for (NodeIndex k = 0; k < v; ++k) {
    CAPTURE(k);
    CHECK(on[k] > 0);
    CHECK(off[k] > 0);
    CHECK(switches[k] >= 2);
  }
}

}  // TEST_SUITE
