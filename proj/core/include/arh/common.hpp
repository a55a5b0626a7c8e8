#pragma once

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace arh {

// Thrown when an argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Argument sits on a pole (Gamma at non-positive integers, zeta at s = 1).
class PoleError : public DomainError {
public:
  using DomainError::DomainError;
};

// An integral that does not converge for the requested exponents.
class DivergenceError : public DomainError {
public:
  using DomainError::DomainError;
};

// Numerical breakdown inside an otherwise valid configuration.
class InstabilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct EvalResult {
  double value = 0.0;
  double err = 0.0;

  EvalResult operator+(const EvalResult& o) const { return {value + o.value, err + o.err}; }
  EvalResult operator-(const EvalResult& o) const { return {value - o.value, err + o.err}; }
  EvalResult operator-() const { return {-value, err}; }
  EvalResult& operator+=(const EvalResult& o) {
    value += o.value;
    err += o.err;
    return *this;
  }
  EvalResult& operator-=(const EvalResult& o) {
    value -= o.value;
    err += o.err;
    return *this;
  }
};

inline EvalResult operator*(double c, const EvalResult& r) {
  return {c * r.value, (c < 0 ? -c : c) * r.err};
}

struct ComplexEval {
  std::complex<double> value;
  double err = 0.0;
};

// log|x| together with the sign of x; sign 0 marks x = 0 (log_abs = -inf).
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;

  static SignedLog zero() { return {-std::numeric_limits<double>::infinity(), 0}; }

  SignedLog operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return {log_abs + o.log_abs, sign * o.sign};
  }
  SignedLog operator/(const SignedLog& o) const;
};

inline SignedLog SignedLog::operator/(const SignedLog& o) const {
  if (o.sign == 0) throw PoleError("SignedLog: division by zero");
  if (sign == 0) return zero();
  return {log_abs - o.log_abs, sign * o.sign};
}

inline constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace arh
