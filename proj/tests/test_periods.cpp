#include <arh/periods.hpp>
#include <arh/specfun.hpp>

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>

using namespace arh;

namespace {
WeightVector W(double a, double b, double c) { return WeightVector{{a, b, c}}; }
}

TEST_SUITE("periods") {

TEST_CASE("configuration checks") {
  CHECK(polarity_of(W(0.75, 0.75, 0.75)) == Polarity::canonical);
  CHECK(polarity_of(W(0.5, 0.5, 0.5)) == Polarity::anticanonical);
  CHECK_THROWS_AS(polarity_of(W(2.0 / 3, 2.0 / 3, 2.0 / 3)), DomainError);
  CHECK_THROWS_AS(validate_period_config({1, W(0.75, 0.75, 0.75), Polarity::canonical}), DomainError);
  CHECK_THROWS_AS(validate_period_config({10, W(0.75, 0.75, 0.75), Polarity::anticanonical}), DomainError);
  // w_k - V/2 = 0 sits on the wall
  CHECK_THROWS_AS(validate_period_config({10, W(1, 1, 0.5), Polarity::canonical}), DomainError);
}

TEST_CASE("workers") {
  CHECK(resolve_workers(3) == 3);
  CHECK(resolve_workers(0) >= 1);
}

TEST_CASE("Dotsenko-Fateev sums") {
  const PeriodConfig cfg{20000, W(0.75, 0.75, 0.75), Polarity::canonical};
  const auto a = df_log_Z(cfg, 1);
  const auto b = df_log_Z(cfg, 4);
  const auto c = df_log_Z_reverse(cfg);
  CHECK(std::fabs(a.value - b.value) <= 1e-10 * std::fabs(a.value));
  CHECK(std::fabs(a.value - c.value) <= 1e-8 * std::fabs(a.value));
  CHECK(a.err < 1e-6 * std::fabs(a.value));

  // N = 2 against the product written out by hand
  const WeightVector w = W(5.0 / 6, 5.0 / 6, 5.0 / 6);
  const double rho = w.V() / 2;
  double expect = std::log(2.0) + 2 * (std::log(std::numbers::pi) - log_l(rho).log_abs);
  for (int j = 0; j < 2; ++j) {
    expect += log_l((j + 1) * rho).log_abs;
    for (double wk : w.w) expect -= log_l(wk - j * rho).log_abs;
  }
  CHECK(df_log_Z({2, w, Polarity::canonical}).value == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("large N stays finite") {
  const PeriodConfig cfg{1000000, W(0.75, 0.75, 0.75), Polarity::canonical};
  const auto h = height_from_periods(cfg);
  CHECK(std::isfinite(h.value));
  CHECK(std::fabs(h.value - h_can_positive(cfg.w).value) < 1e-5);
}

TEST_CASE("convergence toward the closed forms") {
  const auto rows = convergence_report(W(0.75, 0.75, 0.75), Polarity::canonical, {100, 1000, 10000});
  REQUIRE(rows.size() == 3);
  CHECK(std::fabs(rows[2].gap) < 5e-3);
  CHECK(std::fabs(rows[1].gap) < std::fabs(rows[0].gap));
  CHECK(std::fabs(rows[2].gap) < std::fabs(rows[1].gap));
  // successive differences shrink like N^-p with p near 1
  const double d1 = std::fabs(rows[1].estimate - rows[0].estimate);
  const double d2 = std::fabs(rows[2].estimate - rows[1].estimate);
  const double p = std::log10(d1 / d2);
  CHECK(p > 0.8);
  CHECK(p < 1.2);
  CHECK(convergence_report(W(0.75, 0.75, 0.75), Polarity::canonical, {}).empty());

  const auto fano = convergence_report(W(0.5, 0.5, 0.5), Polarity::anticanonical, {10000});
  CHECK(std::fabs(fano[0].gap) < 1e-2);
}

TEST_CASE("Stirling consistency of the leading terms") {
  const double V = 0.25;
  const long N = 100000;
  const double rho = V / (2.0 * (N - 1));
  const double lead = (std::lgamma(N + 1.0) + N * std::log(std::numbers::pi) - N * log_l(rho).log_abs) / (2.0 * N);
  CHECK(std::fabs(lead - 0.5 * (std::log(V / 2) - 1 + std::log(std::numbers::pi))) < 1e-3);
}

TEST_CASE("integrability") {
  CHECK_NOTHROW(check_integrable(2, W(5.0 / 6, 5.0 / 6, 5.0 / 6)));
  CHECK_NOTHROW(check_integrable(3, W(0.5, 0.5, 0.5)));
  CHECK_THROWS_AS(check_integrable(2, W(1, 0.5, 0.5)), DivergenceError);
  CHECK_THROWS_AS(mc_oracle_Z(4, W(0.5, 0.5, 0.5), OracleScheme::monte_carlo), DomainError);
  CHECK_THROWS_AS(mc_oracle_Z(3, W(0.5, 0.5, 0.5), OracleScheme::quadrature), DomainError);
}

TEST_CASE("counter-based generator") {
  CHECK(uniform01(1, 5) == uniform01(1, 5));
  CHECK(uniform01(1, 5) != uniform01(2, 5));
  for (std::uint64_t k = 0; k < 1000; ++k) {
    const double u = uniform01(42, k);
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("Monte Carlo oracle at N = 2" * doctest::timeout(60)) {
  OracleBudget budget;
  budget.samples = 400000;
  for (const auto& w : {W(5.0 / 6, 5.0 / 6, 5.0 / 6), W(0.5, 0.5, 0.5)}) {
    const double df = std::exp(df_log_Z({2, w, polarity_of(w)}).value);
    const auto a = mc_oracle_Z(2, w, OracleScheme::monte_carlo, budget);
    CHECK(a.value == doctest::Approx(df).epsilon(0.02));
    budget.workers = 1;
    const auto b = mc_oracle_Z(2, w, OracleScheme::monte_carlo, budget);
    budget.workers = 3;
    const auto c = mc_oracle_Z(2, w, OracleScheme::monte_carlo, budget);
    CHECK(b.value == c.value);  // block reduction is independent of the worker count
  }
}

}  // TEST_SUITE
