#include <arh/shimura.hpp>

#include <doctest.h>

#include <cmath>

using namespace arh;

TEST_SUITE("shimura") {

TEST_CASE("orbifold degree") {
  CHECK(orbifold_degree(parse_ram_indices("2,4,12")) == Rational(1, 6));
  CHECK(orbifold_degree(parse_ram_indices("3,4,6")) == Rational(1, 4));
  CHECK(orbifold_degree(parse_ram_indices("2,3,inf")) == Rational(1, 6));
  CHECK(orbifold_degree(std::vector<long>{3, 3, 2, 2}) == Rational(1, 3));
}

TEST_CASE("shipped cases load and validate") {
  REQUIRE(builtin_cases().size() == 4);
  for (const char* id : {"modular", "disc6", "Qsqrt3", "Qsqrt6"}) {
    const auto& c = builtin_case(id);
    CHECK(c.k_degree > 0);
    CHECK(case_from_json(case_to_json(c)).optimal.pet_closed_form == c.optimal.pet_closed_form);
  }
  CHECK_THROWS_AS(builtin_case("disc10"), DomainError);
}

TEST_CASE("Yuan heights") {
  const auto y6 = yuan_height(builtin_case("disc6"));
  CHECK(y6.logs.at(2) == Rational(5, 4));
  CHECK(y6.logs.at(3) == Rational(1));
  CHECK(yuan_height(builtin_case("Qsqrt3")).logs.at(3) == Rational(1, 2));
  CHECK(yuan_height(builtin_case("Qsqrt6")).logs.at(2) == Rational(7, 8));
  const auto ym = yuan_height(builtin_case("modular"));
  CHECK(ym.logs.empty());
  CHECK(ym.q0 == Rational(-1, 2));
}

TEST_CASE("optimal models") {
  const auto& d6 = builtin_case("disc6");
  const auto o = optimal_pet_height(d6);
  CHECK(o.logs.at(2) == Rational(-1, 6) + Rational(1, 2));
  CHECK(o.logs.at(3) == Rational(1, 8));
  // optimal closed form equals the (6,2,6) row of the Petersson table
  for (const auto& row : table1_rows())
    if (row.indices.m == d6.optimal.ram_indices.m && row.field_id == "Q")
      CHECK(table1_pet_closed_form(row) == d6.optimal.pet_closed_form);
}

TEST_CASE("h(p) for the shipped cases") {
  CHECK(h_p_map(builtin_case("disc6")) == std::map<long, Rational>{{2, Rational(11, 18)}, {3, Rational(7, 12)}});
  CHECK(h_p_map(builtin_case("Qsqrt3")) == std::map<long, Rational>{{2, Rational(5, 9)}, {3, Rational(15, 48)}});
  CHECK(h_p_map(builtin_case("Qsqrt6")) == std::map<long, Rational>{{2, Rational(43, 144)}, {3, Rational(3, 32)}});
  const auto hm = h_p_analysis(builtin_case("modular"));
  CHECK(hm.h_hat == std::map<long, Rational>{{2, Rational(1, 2)}, {3, Rational(1, 4)}});
  CHECK(hm.h == std::map<long, Rational>{{2, Rational(1, 6)}, {3, Rational(1, 12)}});
}

TEST_CASE("invariants of every case") {
  for (const auto& c : builtin_cases()) {
    const auto r = h_p_analysis(c);
    double weighted = 0;
    for (const auto& [p, h] : r.h) {
      CHECK(h >= 0);
      weighted += rational_to_double(h / (2 * c.k_degree)) * std::log(double(p));
    }
    CHECK(std::fabs(lc_eval(r.difference).value - weighted) < 1e-9);
  }
}

TEST_CASE("j-invariant shift carries the optimal model to the canonical one") {
  const auto& m = builtin_case("modular");
  CHECK(shifted_pet_height(m) == yuan_height(m));
  // numerically, through the heights module
  const auto w = m.optimal.ram_indices.weights();
  const double h1 = lc_eval(optimal_pet_height(m)).value;
  CHECK(shift_by_a(h1, w, 1728) == doctest::Approx(lc_eval(yuan_height(m)).value).epsilon(1e-12));
}

TEST_CASE("field terms must cancel") {
  ShimuraCase c = builtin_case("Qsqrt3");
  c.optimal.pet_closed_form = c.optimal.pet_closed_form + LogCombo::zeta_term("Qsqrt3", 1) - LogCombo::zeta_term("Qsqrt3", 2);
  CHECK_THROWS_AS(h_p_analysis(c), NonCancellationError);
  ShimuraCase d = builtin_case("Qsqrt3");
  d.optimal.pet_closed_form.zeta = {{"Qsqrt2", -1}};
  CHECK_THROWS_AS(validate_case(d), DomainError);
}

TEST_CASE("table rows against the heights module") {
  int good = 0;
  for (const auto& row : table1_rows()) good += std::fabs(table1_residual(row)) < 1e-9;
  // (5,5,5) and (3,4,6) carry constants that disagree with the formula
  CHECK(good == 8);
  const auto& r555 = table1_rows()[6];
  CHECK(table1_residual(r555) == doctest::Approx(std::log(5.0)).epsilon(1e-9));
  const auto& r346 = table1_rows()[7];
  CHECK(table1_residual(r346) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-9));
  int good2 = 0;
  for (const auto& row : table2_rows()) good2 += std::fabs(table2_residual(row)) < 1e-9;
  CHECK(good2 == 3);
}

TEST_CASE("malformed case JSON") {
  CHECK_THROWS_AS(case_from_json("{"), DomainError);
  CHECK_THROWS_AS(case_from_json(R"({"id":"x","field":"Q","optimal":{"ram_indices":"2,3,inf","pet_closed_form":{}},"k_degree":"0"})"),
                  DomainError);
  CHECK_THROWS_AS(case_from_json(R"({"id":"x","field":"Q","ramified":[{"norm":6,"prime":2}],"optimal":{"ram_indices":"2,3,inf","pet_closed_form":{}},"k_degree":"1/6"})"),
                  DomainError);
}

}  // TEST_SUITE
