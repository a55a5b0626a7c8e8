#include <arh/common.hpp>
#include <arh/fields.hpp>

#include <cmath>
#include <numbers>
#include <set>

#include "json.hpp"

namespace arh {

long gcd_long(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

long mod_pos(long a, long f) {
  long r = a % f;
  return r < 0 ? r + f : r;
}

// Normalize k/n into [0, 1) with n > 0 and gcd(k, n) = 1.
Angle reduce(Angle a) {
  if (a.n == 0) throw DomainError("character angle with zero denominator");
  if (a.n < 0) {
    a.n = -a.n;
    a.k = -a.k;
  }
  a.k = mod_pos(a.k, a.n);
  long g = gcd_long(a.k, a.n);
  if (g > 1) {
    a.k /= g;
    a.n /= g;
  }
  if (a.k == 0) a.n = 1;
  return a;
}

bool same(Angle a, Angle b) {
  a = reduce(a);
  b = reduce(b);
  return a.k == b.k && a.n == b.n;
}

Angle add(Angle a, Angle b) { return reduce({a.k * b.n + b.k * a.n, a.n * b.n}); }

std::complex<double> root_of_unity(Angle a) {
  a = reduce(a);
  // exact values for the quarter turns keep real characters exactly real
  if (a.k == 0) return {1.0, 0.0};
  if (a.n == 2) return {-1.0, 0.0};
  if (a.n == 4) return a.k == 1 ? std::complex<double>{0.0, 1.0} : std::complex<double>{0.0, -1.0};
  double t = 2.0 * std::numbers::pi * static_cast<double>(a.k) / static_cast<double>(a.n);
  return {std::cos(t), std::sin(t)};
}

long residue_key(long a, long f) {
  long r = mod_pos(a, f);
  return r == 0 ? f : r;
}

}  // namespace

DirichletCharacter::DirichletCharacter(long modulus, std::map<long, Angle> angles)
    : modulus_(modulus) {
  if (modulus < 1) throw DomainError("character modulus must be positive");
  for (auto& [a, ang] : angles) {
    long key = residue_key(a, modulus);
    if (gcd_long(key, modulus) != 1)
      throw DomainError("character value given on a non-unit residue " + std::to_string(a));
    angles_[key] = reduce(ang);
  }
  for (long a = 1; a <= modulus; ++a) {
    if (gcd_long(a, modulus) == 1 && !angles_.count(a))
      throw DomainError("character table misses unit residue " + std::to_string(a) + " mod " +
                        std::to_string(modulus));
  }
  values_.assign(static_cast<std::size_t>(modulus), {0.0, 0.0});
  for (const auto& [a, ang] : angles_) values_[static_cast<std::size_t>(a % modulus)] = root_of_unity(ang);
}

std::complex<double> DirichletCharacter::operator()(long a) const {
  return values_[static_cast<std::size_t>(mod_pos(a, modulus_))];
}

bool DirichletCharacter::is_trivial() const {
  for (const auto& [a, ang] : angles_)
    if (ang.k != 0) return false;
  return true;
}

bool DirichletCharacter::is_real() const {
  for (const auto& [a, ang] : angles_)
    if (ang.k != 0 && ang.n != 2) return false;
  return true;
}

DirichletCharacter DirichletCharacter::conjugate() const {
  std::map<long, Angle> conj;
  for (const auto& [a, ang] : angles_) conj[a] = reduce({-ang.k, ang.n});
  return {modulus_, conj};
}

long DirichletCharacter::conductor() const {
  for (long d = 1; d <= modulus_; ++d) {
    if (modulus_ % d != 0) continue;
    bool ok = true;
    for (const auto& [a, ang] : angles_) {
      if (mod_pos(a - 1, d) == 0 && ang.k != 0) {
        ok = false;
        break;
      }
    }
    if (ok) return d;
  }
  return modulus_;
}

DirichletCharacter DirichletCharacter::primitive() const {
  long d = conductor();
  if (d == modulus_) return *this;
  std::map<long, Angle> prim;
  for (const auto& [a, ang] : angles_) {
    long key = residue_key(a, d);
    if (!prim.count(key)) prim[key] = ang;
  }
  return {d, prim};
}

void validate_field(const FieldSpec& field) {
  if (field.modulus < 1) throw DomainError("field " + field.id + ": modulus must be positive");
  if (field.characters.empty()) throw DomainError("field " + field.id + ": no characters");
  bool has_trivial = false;
  for (const auto& chi : field.characters) {
    if (chi.modulus() != field.modulus)
      throw DomainError("field " + field.id + ": character modulus differs from field modulus");
    has_trivial = has_trivial || chi.is_trivial();
    const auto& ang = chi.angles();
    for (const auto& [a, x] : ang) {
      for (const auto& [b, y] : ang) {
        long ab = residue_key(a * b, field.modulus);
        if (!same(add(x, y), ang.at(ab)))
          throw DomainError("field " + field.id + ": character is not multiplicative at (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
    if (!chi.is_real()) {
      auto cj = chi.conjugate();
      bool found = false;
      for (const auto& other : field.characters) {
        bool eq = true;
        for (const auto& [a, x] : cj.angles()) eq = eq && same(x, other.angles().at(a));
        if (eq) found = true;
      }
      if (!found) throw DomainError("field " + field.id + ": non-real character without its conjugate");
    }
  }
  if (!has_trivial) throw DomainError("field " + field.id + ": trivial character missing");
  std::set<std::vector<std::pair<long, long>>> seen;
  for (const auto& chi : field.characters) {
    std::vector<std::pair<long, long>> sig;
    for (const auto& [a, x] : chi.angles()) sig.emplace_back(x.k, x.n);
    if (!seen.insert(sig).second) throw DomainError("field " + field.id + ": repeated character");
  }
}

FieldSpec field_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("FieldSpec JSON: ") + e.what());
  }
  FieldSpec field;
  try {
    field.id = j.at("id").get<std::string>();
    field.modulus = j.at("modulus").get<long>();
    for (const auto& c : j.at("characters")) {
      std::map<long, Angle> angles;
      for (const auto& [key, v] : c.at("values").items())
        angles[std::stol(key)] = Angle{v.at(0).get<long>(), v.at(1).get<long>()};
      field.characters.emplace_back(field.modulus, std::move(angles));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("FieldSpec JSON: ") + e.what());
  }
  if (j.contains("degree") && j["degree"].get<int>() != field.degree())
    throw DomainError("field " + field.id + ": degree does not match the number of characters");
  validate_field(field);
  return field;
}

std::string field_to_json(const FieldSpec& field) {
  nlohmann::json j;
  j["id"] = field.id;
  j["modulus"] = field.modulus;
  j["degree"] = field.degree();
  j["characters"] = nlohmann::json::array();
  for (const auto& chi : field.characters) {
    nlohmann::json vals = nlohmann::json::object();
    for (const auto& [a, x] : chi.angles()) vals[std::to_string(a)] = {x.k, x.n};
    j["characters"].push_back({{"values", vals}});
  }
  return j.dump();
}

namespace {

DirichletCharacter trivial_mod(long f) {
  std::map<long, Angle> m;
  for (long a = 1; a <= f; ++a)
    if (gcd_long(a, f) == 1) m[a] = {0, 1};
  return {f, m};
}

DirichletCharacter quadratic(long f, std::initializer_list<long> minus) {
  std::map<long, Angle> m;
  for (long a = 1; a <= f; ++a)
    if (gcd_long(a, f) == 1) m[a] = {0, 1};
  for (long a : minus) m[a] = {1, 2};
  return {f, m};
}

// Order-3 character sending the primitive root g to exp(2 pi i / 3).
DirichletCharacter cubic(long f, long g) {
  std::map<long, Angle> m;
  long x = 1;
  for (long k = 0; m.size() < static_cast<std::size_t>(f) && !m.count(x); ++k) {
    m[x] = {k % 3, 3};
    x = x * g % f;
  }
  return {f, m};
}

FieldSpec make(std::string id, long f, std::vector<DirichletCharacter> chars) {
  FieldSpec fs{std::move(id), f, std::move(chars)};
  validate_field(fs);
  return fs;
}

}  // namespace

const std::vector<FieldSpec>& builtin_fields() {
  static const std::vector<FieldSpec> fields = [] {
    std::vector<FieldSpec> v;
    v.push_back(make("Q", 1, {trivial_mod(1)}));
    v.push_back(make("Qsqrt2", 8, {trivial_mod(8), quadratic(8, {3, 5})}));
    v.push_back(make("Qsqrt3", 12, {trivial_mod(12), quadratic(12, {5, 7})}));
    v.push_back(make("Qsqrt5", 5, {trivial_mod(5), quadratic(5, {2, 3})}));
    v.push_back(make("Qsqrt6", 24, {trivial_mod(24), quadratic(24, {7, 11, 13, 17})}));
    auto c7 = cubic(7, 3);
    v.push_back(make("Qcos7", 7, {trivial_mod(7), c7, c7.conjugate()}));
    auto c9 = cubic(9, 2);
    v.push_back(make("Qcos9", 9, {trivial_mod(9), c9, c9.conjugate()}));
    return v;
  }();
  return fields;
}

const FieldSpec& builtin_field(const std::string& id) {
  for (const auto& f : builtin_fields())
    if (f.id == id) return f;
  throw DomainError("unknown field id '" + id + "'");
}

}  // namespace arh
