#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "asdn/analysis.hpp"

using namespace asdn;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Independent restatement of the duty-cycle ratio with the floors.
double duty_oracle(double s2, double beta) {
  if (beta == s2) return 1.0;
  const double theta = std::max(s2 / (beta - s2), 1.0);
  const double bar = std::max((beta - s2) / s2, 1.0);
  return theta / (theta + bar);
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("beta admissibility") {
  CHECK(beta_admissible(0.68, 0.4));
  CHECK(beta_admissible(0.4, 0.4));
  CHECK_FALSE(beta_admissible(0.3, 0.4));
}

TEST_CASE("theta extremes for the default environment") {
  const ThetaBounds t = theta_bounds(0.68, 0.1, 0.4);
  CHECK(t.theta_max == doctest::Approx(1.4285714285714286).epsilon(1e-15));
  CHECK(t.theta_min == 1.0);
  CHECK(t.theta_bar_max == doctest::Approx(5.8).epsilon(1e-15));
  CHECK(t.theta_bar_min == 1.0);
}

TEST_CASE("homogeneous noise collapses the extremes") {
  const ThetaBounds t = theta_bounds(0.5, 0.1, 0.1);
  CHECK(t.theta_max == t.theta_min);
  CHECK(t.theta_bar_max == t.theta_bar_min);
  CHECK(t.theta_bar_max == doctest::Approx(4.0));
}

TEST_CASE("theta preconditions") {
  CHECK_THROWS_AS(theta_bounds(0.68, 0.0, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(theta_bounds(0.68, 0.5, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(theta_bounds(0.3, 0.1, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(sampled_node_bounds(20, 0.3, 0.1, 0.4), std::invalid_argument);
}

TEST_CASE("beta at the largest noise variance") {
  const ThetaBounds t = theta_bounds(0.4, 0.1, 0.4);
  CHECK(t.theta_max == kInf);
  const auto p = predict(20, 0.4, 0.1, 0.4);
  CHECK(p.duty_upper == 1.0);
  CHECK(p.bounds.upper == doctest::Approx(20.0));
  CHECK(p.duty_upper * 20 == doctest::Approx(p.bounds.upper));
}

TEST_CASE("duty cycle limits") {
  CHECK(duty_cycle_estimate(1.0, 1.0) == 0.5);
  CHECK(duty_cycle_estimate(kInf, 3.0) == 1.0);
  CHECK(duty_cycle_estimate(2.0, kInf) == 0.0);
  CHECK(duty_cycle_estimate(1.0, 5.8) == doctest::Approx(1.0 / 6.8));
}

TEST_CASE("sampled node bounds for the default environment") {
  const auto b = sampled_node_bounds(20, 0.68, 0.1, 0.4);
  CHECK(b.lower == doctest::Approx(2.941176470588235).epsilon(1e-14));
  CHECK(b.upper == doctest::Approx(11.76470588235294).epsilon(1e-14));
  const auto same = sampled_node_bounds(10, 0.5, 0.2, 0.2);
  CHECK(same.lower == same.upper);
  CHECK(same.lower == doctest::Approx(4.0));
}

TEST_CASE("duty cycles reproduce the bounds on random admissible triples") {
  std::mt19937_64 eng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double a = 0.01 + u(eng);
    const double b = 0.01 + u(eng);
    const double s2min = std::min(a, b);
    const double s2max = std::max(a, b);
    const double beta = s2max * (1.0 + 4.0 * u(eng));
    const std::size_t v = 1 + static_cast<std::size_t>(u(eng) * 100);
    const auto p = predict(v, beta, s2min, s2max);
    const double vd = static_cast<double>(v);
    CHECK(std::abs(vd * p.duty_lower - p.bounds.lower) <= 1e-12 * vd);
    CHECK(std::abs(vd * p.duty_upper - p.bounds.upper) <= 1e-12 * vd);
    CHECK(std::abs(p.duty_upper - duty_oracle(s2max, beta)) <= 1e-12);
    CHECK(std::abs(p.duty_lower - duty_oracle(s2min, beta)) <= 1e-12);
    CHECK(p.bounds.lower <= p.bounds.upper);
  }
}

TEST_CASE("bounds shrink as beta grows") {
  double prev_lo = kInf;
  double prev_hi = kInf;
  for (double beta = 0.4; beta < 5.0; beta += 0.1) {
    const auto b = sampled_node_bounds(20, beta, 0.1, 0.4);
    CHECK(b.lower <= prev_lo);
    CHECK(b.upper <= prev_hi);
    prev_lo = b.lower;
    prev_hi = b.upper;
  }
}

TEST_CASE("operation table rows") {
  SUBCASE("diffusion NLMS") {
    CHECK(op_cost_model(CostRow::dnlms, 50, 4, true, 4) == OpCount{354, 353});
    CHECK(op_cost_model(CostRow::dnlms, 1, 1, true, 1) == OpCount{8, 7});
  }
  SUBCASE("adaptive sampling, sampled node") {
    CHECK(op_cost_model(CostRow::as_dnlms, 50, 4, true, 4) == OpCount{360, 358});
  }
  SUBCASE("adaptive sampling, idle node") {
    CHECK(op_cost_model(CostRow::as_dnlms, 50, 4, false, 0) == OpCount{202, 156});
  }
  SUBCASE("sampling overhead over diffusion NLMS") {
    for (std::size_t m : {1u, 10u, 50u}) {
      for (std::size_t nk = 1; nk <= 8; ++nk) {
        for (std::size_t s = 1; s <= nk; ++s) {
          const OpCount as = op_cost_model(CostRow::as_dnlms, m, nk, true, s);
          const OpCount d = op_cost_model(CostRow::dnlms, m, nk, true, nk);
          CHECK(as.mults - d.mults == s + 2);
          CHECK(as.adds - d.adds == nk + 1);
        }
      }
    }
  }
  SUBCASE("partial diffusion NLMS") {
    CHECK(op_cost_model(CostRow::dnlms_partial, 50, 4, true, 0) ==
          op_cost_model(CostRow::dnlms, 50, 4, true, 4));
    CHECK(op_cost_model(CostRow::dnlms_partial, 50, 4, false, 0) == OpCount{200, 150});
  }
}

TEST_CASE("policy to cost row") {
  CHECK(cost_row_for(PolicyKind::as_sampling) == CostRow::as_dnlms);
  CHECK(cost_row_for(PolicyKind::as_censoring) == CostRow::as_dnlms);
  CHECK(cost_row_for(PolicyKind::random_sampling) == CostRow::dnlms_partial);
  CHECK(cost_row_for(PolicyKind::full) == CostRow::dnlms);
  CHECK(cost_row_for(PolicyKind::probabilistic_transmission) == CostRow::dnlms);
  CHECK(cost_row_for(PolicyKind::non_cooperative) == CostRow::dnlms);
}

TEST_CASE("network cost sums the rows") {
  const std::vector<Edge> edges{{0, 1}, {1, 2}};
  const Topology t = Topology::from_edges(3, edges);
  const Bitmap all(3, 1);
  // degrees 2, 3, 2
  CHECK(network_cost(PolicyKind::full, 2, t, all) ==
        OpCount{(2 * 5 + 4) * 2 + (2 * 6 + 4), (2 * 5 + 3) * 2 + (2 * 6 + 3)});
  CHECK(network_cost(PolicyKind::non_cooperative, 2, t, all) == OpCount{3 * 12, 3 * 11});
  const Bitmap mid{0, 1, 0};
  const OpCount as = network_cost(PolicyKind::as_sampling, 2, t, mid);
  CHECK(as == op_cost_model(CostRow::as_dnlms, 2, 2, false, 1) +
                  op_cost_model(CostRow::as_dnlms, 2, 3, true, 1) +
                  op_cost_model(CostRow::as_dnlms, 2, 2, false, 1));
}

}  // TEST_SUITE
