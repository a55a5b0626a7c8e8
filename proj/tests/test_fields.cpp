#include <arh/fields.hpp>
#include <arh/common.hpp>

#include <doctest.h>

using namespace arh;

TEST_SUITE("fields") {

TEST_CASE("built-in fields validate") {
  for (const auto& f : builtin_fields()) CHECK_NOTHROW(validate_field(f));
  CHECK(builtin_field("Qcos7").degree() == 3);
  CHECK_THROWS_AS(builtin_field("Qsqrt7"), DomainError);
}

TEST_CASE("character values and conductors") {
  const auto& f = builtin_field("Qsqrt2");
  const auto& chi = f.characters[1];
  CHECK(chi(1).real() == 1.0);
  CHECK(chi(3).real() == -1.0);
  CHECK(chi(7).real() == 1.0);
  CHECK(chi(2) == std::complex<double>(0.0, 0.0));
  CHECK(chi.conductor() == 8);
  CHECK(f.characters[0].conductor() == 1);  // trivial mod 8 is induced from mod 1

  // real character mod 12 of Q(sqrt 3) is primitive
  CHECK(builtin_field("Qsqrt3").characters[1].conductor() == 12);
  const auto& c7 = builtin_field("Qcos7").characters[1];
  CHECK_FALSE(c7.is_real());
  CHECK(c7.conductor() == 7);
}

TEST_CASE("validation rejects broken tables") {
  // not multiplicative: chi(3) = -1 and chi(5) = -1 force chi(7) = 1
  FieldSpec bad{"bad", 8, {DirichletCharacter(8, {{1, {0, 1}}, {3, {1, 2}}, {5, {1, 2}}, {7, {1, 2}}})}};
  bad.characters.insert(bad.characters.begin(), DirichletCharacter(8, {{1, {0, 1}}, {3, {0, 1}}, {5, {0, 1}}, {7, {0, 1}}}));
  CHECK_THROWS_AS(validate_field(bad), DomainError);

  FieldSpec no_trivial{"nt", 5, {DirichletCharacter(5, {{1, {0, 1}}, {2, {1, 2}}, {3, {1, 2}}, {4, {0, 1}}})}};
  CHECK_THROWS_AS(validate_field(no_trivial), DomainError);

  CHECK_THROWS_AS(DirichletCharacter(6, {{2, {0, 1}}}), DomainError);
}

TEST_CASE("JSON round trip") {
  for (const auto& f : builtin_fields()) {
    const FieldSpec g = field_from_json(field_to_json(f));
    CHECK(g.id == f.id);
    CHECK(g.modulus == f.modulus);
    CHECK(g.degree() == f.degree());
    CHECK(field_to_json(g) == field_to_json(f));
  }
  CHECK_THROWS_AS(field_from_json("{\"id\": 3}"), DomainError);
}

}  // TEST_SUITE
