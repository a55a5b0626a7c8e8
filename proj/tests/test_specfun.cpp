#include <arh/specfun.hpp>

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace arh;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("specfun") {

TEST_CASE("log gamma and its sign") {
  CHECK(log_gamma(0.5).value == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-15));
  auto s = log_gamma_signed(-0.5);  // Gamma(-1/2) = -2 sqrt(pi)
  CHECK(s.sign == -1);
  CHECK(s.log_abs == doctest::Approx(std::log(2.0 * std::sqrt(kPi))).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma_signed(-2.0), PoleError);
  CHECK(digamma(1.0).value == doctest::Approx(-0.5772156649015329).epsilon(1e-14));
}

TEST_CASE("Hurwitz zeta special values") {
  CHECK(hurwitz_zeta(2.0, 1.0).value == doctest::Approx(kPi * kPi / 6).epsilon(1e-15));
  CHECK(hurwitz_zeta(0.0, 0.3).value == doctest::Approx(0.2).epsilon(1e-14));
  // zeta'(-1) = 1/12 - log A
  CHECK(hurwitz_zeta_ds(1.0).value == doctest::Approx(-0.16542114370045092).epsilon(1e-13));
  // zeta'(0, x) = log Gamma(x) - 1/2 log 2 pi
  for (double x : {0.2, 0.5, 0.9, 2.5})
    CHECK(hurwitz_zeta_ds(0.0, x).value == doctest::Approx(std::lgamma(x) - 0.5 * std::log(2 * kPi)).epsilon(1e-13));
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
}

TEST_CASE("Bernoulli identity") {
  for (double a = 0.05; a < 3.0; a += 0.17)
    CHECK(std::fabs(hurwitz_zeta(-1.0, a).value + 0.5 * bernoulli2(a)) < 1e-13);
}

TEST_CASE("negative non-integer s keeps relative accuracy") {
  // recurrence at s = -9.5 stresses cancellation in the shifted sum
  const double s = -9.5, x = 0.3;
  const double lhs = hurwitz_zeta(s, x).value - hurwitz_zeta(s, x + 1).value;
  CHECK(lhs == doctest::Approx(std::pow(x, -s)).epsilon(1e-9));
}

TEST_CASE("F and gamma") {
  CHECK(F(0.0).value == F(1.0).value);
  CHECK(std::fabs(gamma_ab(0.3, 0.3).value) < 1e-15);
  // antisymmetry: log l(1-x) = -log l(x)
  CHECK(std::fabs(gamma_ab(0.0, 1.0).value) < 1e-12);
  CHECK(gamma_ab(0.1, 0.7).value == doctest::Approx(gamma_ab_quad(0.1, 0.7).value).epsilon(1e-12));
  CHECK(std::fabs(gamma_ab(0.0, 0.25).value + 3 * gamma_ab(0.5, 0.75).value - 0.25 * std::log(2.0)) < 1e-10);
  for (double V : {0.1, 0.7, 1.3, 1.9})
    CHECK(std::fabs(gamma_ab(0.0, V / 2).value + gamma_ab(1 - V / 2, 1.0).value) < 1e-10);
}

TEST_CASE("log l") {
  auto l = log_l(0.5);
  CHECK(l.sign == 1);
  CHECK(std::fabs(l.log_abs) < 1e-15);
  CHECK(log_l(1.0).sign == 0);
  CHECK(log_l(1.5).sign == -1);  // Gamma(3/2)/Gamma(-1/2) < 0
}

TEST_CASE("Dirichlet L and Dedekind log-derivatives") {
  const auto& Q = builtin_field("Q");
  CHECK(dirichlet_L(-1.0, Q.characters[0]).value.real() == doctest::Approx(-1.0 / 12).epsilon(1e-14));
  CHECK(dedekind_log_deriv(Q).value == doctest::Approx(1.9850537244054109).epsilon(1e-12));
  CHECK(dedekind_log_deriv(builtin_field("Qsqrt2")).value == doctest::Approx(1.15847986583187).epsilon(1e-11));
  CHECK(dedekind_log_deriv(builtin_field("Qsqrt3")).value == doctest::Approx(0.830586431994451).epsilon(1e-11));
  CHECK(dedekind_log_deriv(builtin_field("Qsqrt5")).value == doctest::Approx(1.50373765335411).epsilon(1e-11));
  CHECK(dedekind_log_deriv(builtin_field("Qsqrt6")).value == doctest::Approx(0.218027615251189).epsilon(1e-10));
  CHECK(dedekind_log_deriv(builtin_field("Qcos7")).value == doctest::Approx(0.517361598272463).epsilon(1e-10));
  CHECK(dedekind_log_deriv(builtin_field("Qcos9")).value == doctest::Approx(0.104155927989648).epsilon(1e-9));
  // zeta_{Q(sqrt 5)}(-1) = 1/30
  auto t = dedekind_terms(builtin_field("Qsqrt5"));
  CHECK(t.product.real() == doctest::Approx(1.0 / 30).epsilon(1e-12));
}

}  // TEST_SUITE
