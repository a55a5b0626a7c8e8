#include <arh/fermat.hpp>
#include <arh/heights.hpp>

#include <doctest.h>

#include <cmath>

using namespace arh;

TEST_SUITE("fermat") {

TEST_CASE("genus and twist coefficient") {
  CHECK(genus(4) == 3);
  CHECK(genus(3) == 1);
  CHECK(genus(7) == 15);
  CHECK(twist_coefficient(4) == Rational(3, 8));
}

TEST_CASE("canonical height of the quartic") {
  const double t = 0.75;
  const double base = h_can_positive({t, t, t}).value + std::log(4.0);
  CHECK(fermat_h_can({}).value == doctest::Approx(base).epsilon(1e-13));
  const double twisted = fermat_h_can({4, {8, 1, 1}}).value;
  CHECK(twisted - base == doctest::Approx(9.0 / 8.0 * std::log(2.0)).epsilon(1e-12));
  CHECK_THROWS_AS(fermat_h_can({3, {1, 1, 1}}), DomainError);
  CHECK_THROWS_AS(fermat_h_can({5, {1, 0, 1}}), DomainError);
}

TEST_CASE("the cover by x -> x^m adds (1/2) log m^2") {
  for (long m : {4, 5, 9}) {
    const double t = 1.0 - 1.0 / m;
    CHECK(fermat_h_can({m, {1, 1, 1}}).value - h_can_positive({t, t, t}).value ==
          doctest::Approx(0.5 * std::log(double(m * m))).epsilon(1e-13));
  }
}

TEST_CASE("f(t,t,t) decreases on the Fermat range") {
  double prev = h_can_positive({0.7, 0.7, 0.7}).value;
  for (double t = 0.72; t <= 0.95; t += 0.02) {
    const double cur = h_can_positive({t, t, t}).value;
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("epsilon and gap closed forms") {
  CHECK(epsilon_m(4) == doctest::Approx(std::log(2.0) + 0.25).epsilon(1e-14));
  const auto e4 = epsilon_m_exact(4);
  CHECK(e4.q0 == Rational(1, 4));
  CHECK(e4.logs.at(2) == Rational(1));
  for (long m = 4; m <= 30; ++m) {
    CHECK(lc_eval(epsilon_m_exact(m)).value == doctest::Approx(epsilon_m(m)).epsilon(1e-12));
    CHECK(lc_eval(arakelov_gap_exact(m)).value == doctest::Approx(arakelov_gap(m)).epsilon(1e-12));
    CHECK(arakelov_gap(m) > 0);
  }
  CHECK_THROWS_AS(epsilon_m(3), DomainError);
}

TEST_CASE("epsilon stays below eps_4 and tends to zero") {
  const double e4 = epsilon_m(4);
  long argmin = 4;
  for (long m = 5; m <= 100; ++m) {
    CHECK(epsilon_m(m) <= e4);
    if (epsilon_m(m) < epsilon_m(argmin)) argmin = m;
  }
  for (long m = 5; m <= argmin; ++m) CHECK(epsilon_m(m) < epsilon_m(m - 1));
  CHECK(std::fabs(epsilon_m(100)) < 0.15);
}

TEST_CASE("constant of the second bound") {
  CHECK(lc_eval(fermat_constant_exact()).value == doctest::Approx(fermat_constant()).epsilon(1e-14));
  // the value implied by the stated ingredients, not the printed -0.44
  CHECK(fermat_constant() == doctest::Approx(-0.887002197962598).epsilon(1e-12));
}

TEST_CASE("bounds") {
  for (long m = 4; m <= 100; ++m) {
    const auto b = arakelov_upper_bound(m);
    CHECK(b.first <= b.second + 1e-12);
    CHECK(lc_eval(b.second_exact).value == doctest::Approx(b.second).epsilon(1e-12));
  }
  CHECK_THROWS_AS(arakelov_upper_bound(3), DomainError);
}

}  // TEST_SUITE
