#include <arh/fermat.hpp>

#include <arh/heights.hpp>
#include <arh/specfun.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace arh {

namespace {

void require_m(long m, long lo) {
  if (m < lo) throw DomainError("Fermat degree m = " + std::to_string(m) + " must be >= " + std::to_string(lo));
}

WeightVector diagonal(long m) {
  const double t = 1.0 - 1.0 / static_cast<double>(m);
  return WeightVector{{t, t, t}};
}

// (m-1)(m-2) - 2 = 2g - 2
long two_g_minus_two(long m) { return (m - 1) * (m - 2) - 2; }

}  // namespace

Rational twist_coefficient(long m) { return Rational(m - 1, 2 * m); }

EvalResult fermat_h_can(const FermatSpec& spec) {
  require_m(spec.m, 4);
  double log_twist = 0;
  for (long ai : spec.a) {
    if (ai == 0) throw DomainError("Fermat twist coefficients must be nonzero");
    log_twist += std::log(std::fabs(static_cast<double>(ai)));
  }
  EvalResult h = h_can_positive(diagonal(spec.m));
  h.value += std::log(static_cast<double>(spec.m)) + rational_to_double(twist_coefficient(spec.m)) * log_twist;
  return h;
}

long genus(long m) {
  if (m < 1) throw DomainError("Fermat degree must be positive");
  return (m - 1) * (m - 2) / 2;
}

double epsilon_m(long m) {
  require_m(m, 4);
  const double k = static_cast<double>(two_g_minus_two(m));
  const double md = static_cast<double>(m);
  return 0.5 * (4.0 * std::log(k) + 1.0) / (static_cast<double>((m - 1) * (m - 2)) / 2.0 - 1.0) +
         0.5 * std::log(k / (md * md));
}

LogCombo epsilon_m_exact(long m) {
  require_m(m, 4);
  // (g - 1) = k/2, so the first term is (4 log k + 1)/k
  const long k = two_g_minus_two(m);
  return log_integer(k, Rational(4, k)) + LogCombo::rational(Rational(1, k)) + log_integer(k, Rational(1, 2)) -
         log_integer(m, 1);
}

double arakelov_gap(long m) {
  require_m(m, 4);
  const double g = static_cast<double>(genus(m));
  return 0.5 * ((4.0 * std::log(2 * g - 2) + 1.0) / (g - 1) + std::log(std::numbers::pi * (g - 1)));
}

LogCombo arakelov_gap_exact(long m) {
  require_m(m, 4);
  const long k = two_g_minus_two(m);
  // 1/2 [ 2(4 log k + 1)/k + log pi + log k - log 2 ]
  return log_integer(k, Rational(4, k)) + LogCombo::rational(Rational(1, k)) + LogCombo::log_pi(Rational(1, 2)) +
         log_integer(k, Rational(1, 2)) - LogCombo::log_prime(2, Rational(1, 2));
}

ArakelovBound arakelov_upper_bound(long m) {
  require_m(m, 4);
  ArakelovBound b;
  b.eps = epsilon_m(m);
  const double md = static_cast<double>(m);
  const double V = 1.0 - 3.0 / md;
  const double logm2 = 2.0 * std::log(md);
  const double bracket = gamma_ab(0.0, V / 2).value - 3.0 * gamma_ab(0.5 + 0.5 / md, 1.0 - 1.0 / md).value;
  b.first = 0.5 * (1.0 - std::log(V / 2)) - bracket / V + logm2 + b.eps;
  b.second_exact = fermat_constant_exact() - epsilon_m_exact(4) + epsilon_m_exact(m) + log_integer(m, 2);
  b.second = lc_eval(b.second_exact).value;
  if (b.first < 0 || b.second < 0)
    throw InconsistencyError("Arakelov upper bound is negative at m = " + std::to_string(m));
  return b;
}

LogCombo fermat_constant_exact() {
  return LogCombo::rational(Rational(-1, 2)) - LogCombo::log_prime(2, Rational(13, 12)) -
         LogCombo::zeta_term("Qsqrt2", 1) + epsilon_m_exact(4);
}

double fermat_constant() { return lc_eval(fermat_constant_exact()).value; }

}  // namespace arh
