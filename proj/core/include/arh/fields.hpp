#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arh {

// Root of unity exp(2 pi i k / n) stored as the exact angle k/n.
struct Angle {
  long k = 0;
  long n = 1;
};

class DirichletCharacter {
public:
  DirichletCharacter() = default;
  // angles: residue a (1 <= a <= modulus, gcd(a, modulus) = 1) -> k/n.
  DirichletCharacter(long modulus, std::map<long, Angle> angles);

  long modulus() const { return modulus_; }
  const std::map<long, Angle>& angles() const { return angles_; }
  std::complex<double> operator()(long a) const;
  bool is_trivial() const;
  bool is_real() const;
  DirichletCharacter conjugate() const;
  // Smallest modulus d | f through which the character factors.
  long conductor() const;
  DirichletCharacter primitive() const;

private:
  long modulus_ = 1;
  std::map<long, Angle> angles_;
  std::vector<std::complex<double>> values_;  // indexed by a mod f
};

struct FieldSpec {
  std::string id;
  long modulus = 1;
  std::vector<DirichletCharacter> characters;

  int degree() const { return static_cast<int>(characters.size()); }
};

// Throws DomainError describing the first violated invariant.
void validate_field(const FieldSpec& field);

FieldSpec field_from_json(const std::string& text);
std::string field_to_json(const FieldSpec& field);

// Q, Qsqrt2, Qsqrt3, Qsqrt5, Qsqrt6, Qcos7, Qcos9.
const std::vector<FieldSpec>& builtin_fields();
const FieldSpec& builtin_field(const std::string& id);

long gcd_long(long a, long b);

}  // namespace arh
