#pragma once

#include <arh/common.hpp>
#include <arh/fields.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace arh {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

std::string rational_to_string(const Rational& r);  // "n/d", or "n" when d = 1
Rational parse_rational(const std::string& text);    // accepts "n/d", "n", "-n/d"
double rational_to_double(const Rational& r);

// q0 + logpi*log(pi) + sum logs[p]*log(p) + sum zeta[F]*(1/[F:Q]) zeta_F'(-1)/zeta_F(-1)
//    + sum named[c]*c
// Zero coefficients are never stored.
struct LogCombo {
  Rational q0;
  Rational logpi;
  std::map<long, Rational> logs;
  std::map<std::string, Rational> zeta;
  std::map<std::string, Rational> named;

  static LogCombo rational(const Rational& r);
  static LogCombo log_prime(long p, const Rational& c = 1);
  static LogCombo log_pi(const Rational& c = 1);
  static LogCombo zeta_term(const std::string& field_id, const Rational& c = 1);
  static LogCombo named_term(const std::string& name, const Rational& c = 1);

  bool is_zero() const;
  bool operator==(const LogCombo& o) const = default;
};

// Exact factorization of a positive integer into primes.
std::map<long, long> factor_integer(long n);
// c * log n expanded over the primes of n.
LogCombo log_integer(long n, const Rational& c = 1);

LogCombo lc_add(const LogCombo& a, const LogCombo& b);
LogCombo lc_scale(const LogCombo& a, const Rational& r);
inline LogCombo operator+(const LogCombo& a, const LogCombo& b) { return lc_add(a, b); }
inline LogCombo operator-(const LogCombo& a, const LogCombo& b) { return lc_add(a, lc_scale(b, -1)); }
inline LogCombo operator*(const Rational& r, const LogCombo& a) { return lc_scale(a, r); }

// Evaluators for named constants and the fields behind zeta terms.
class ConstantRegistry {
public:
  using Evaluator = std::function<EvalResult()>;

  // Ships "logGammaRatio23" and "EulerGamma" plus the built-in fields.
  static const ConstantRegistry& standard();

  void add_constant(const std::string& name, Evaluator fn);
  void add_field(const FieldSpec& field);
  bool has_constant(const std::string& name) const { return constants_.count(name) != 0; }
  EvalResult constant(const std::string& name) const;
  const FieldSpec& field(const std::string& id) const;

private:
  std::map<std::string, Evaluator> constants_;
  std::map<std::string, FieldSpec> fields_;
};

EvalResult lc_eval(const LogCombo& a, const ConstantRegistry& reg = ConstantRegistry::standard());

// Best rational p/q with q <= max_den from the continued fraction of x;
// nullopt when |x - p/q| > tol.
std::optional<Rational> rationalize(double x, long max_den = 10000, double tol = 1e-8);

std::string lc_to_json(const LogCombo& a);
LogCombo lc_from_json(const std::string& text);
// Human-readable form such as "-1/2 - 1/4 log 3 - D(Q)".
std::string lc_to_string(const LogCombo& a);

}  // namespace arh
