#include <arh/specfun.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace arh {

namespace {

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
}

// B_{2k} / (2k)! for k = 0..13.
constexpr int kTerms = 12;
const std::array<long double, 14>& em_coeffs() {
  static const std::array<long double, 14> c = [] {
    const long double num[14] = {1.0L,     1.0L,        -1.0L,      1.0L,        -1.0L,
                                 5.0L,     -691.0L,     7.0L,       -3617.0L,    43867.0L,
                                 -174611.0L, 854513.0L, -236364091.0L, 8553103.0L};
    const long double den[14] = {1.0L,  6.0L,    30.0L, 42.0L,  30.0L, 66.0L, 2730.0L,
                                 6.0L,  510.0L,  798.0L, 330.0L, 138.0L, 2730.0L, 6.0L};
    std::array<long double, 14> out{};
    long double fact = 1.0L;
    for (int k = 0; k < 14; ++k) {
      if (k > 0) fact *= static_cast<long double>((2 * k - 1) * (2 * k));
      out[k] = num[k] / den[k] / fact;
    }
    return out;
  }();
  return c;
}

using real = long double;
constexpr real kEpsL = std::numeric_limits<real>::epsilon();

struct Tail {
  real value = 0.0L;
  real abs_sum = 0.0L;
  real omitted = 0.0L;
};

// Euler-Maclaurin remainder of sum_{n >= 0} (n + a)^{-s}, optionally its s-derivative.
Tail em_tail(real s, real a, bool deriv) {
  const auto& c = em_coeffs();
  const real la = std::log(a);
  const real a1s = std::pow(a, 1.0L - s);
  const real as = a1s / a;
  const real inv_a2 = 1.0L / (a * a);
  Tail t;
  auto push = [&t](real v) {
    t.value += v;
    t.abs_sum += std::fabs(v);
  };
  if (!deriv) {
    push(a1s / (s - 1.0L));
    push(0.5L * as);
  } else {
    push(-la * a1s / (s - 1.0L));
    push(-a1s / ((s - 1.0L) * (s - 1.0L)));
    push(-0.5L * as * la);
  }
  // P = (s)_{2k-1}, dP its s-derivative, pw = a^{-s-2k+1}
  real P = s, dP = 1.0L, pw = a1s * inv_a2;
  for (int k = 1; k <= kTerms + 1; ++k) {
    if (k > 1) {
      for (int j = 2 * k - 3; j <= 2 * k - 2; ++j) {
        dP = dP * (s + j) + P;
        P *= (s + j);
      }
      pw *= inv_a2;
    }
    const real term = deriv ? c[k] * (dP - P * la) * pw : c[k] * P * pw;
    if (k <= kTerms)
      push(term);
    else
      t.omitted = std::fabs(term);
  }
  return t;
}

// Picks the smallest shift M whose truncation error is below the rounding
// level of the terms summed so far. Small M matters for negative s, where the
// head sum grows like a^{1-s} and would swamp the result. Extended precision
// buys the three digits that this cancellation costs.
EvalResult em_eval(double s_in, double x_in, bool deriv) {
  const real s = s_in, x = x_in;
  real head = 0.0L, head_abs = 0.0L;
  constexpr int hard_cap = 4000;
  Tail best;
  for (int M = 0;; ++M) {
    const real a = x + M;
    Tail t = em_tail(s, a, deriv);
    best = t;
    if (t.omitted <= 0.25L * kEpsL * (head_abs + t.abs_sum) || M >= hard_cap) break;
    const real p = std::pow(a, -s);
    const real term = deriv ? -p * std::log(a) : p;
    head += term;
    head_abs += std::fabs(term);
  }
  const double value = static_cast<double>(head + best.value);
  const real err = best.omitted + 4.0L * kEpsL * (head_abs + best.abs_sum);
  return {value, static_cast<double>(err) + 0.5 * kEps * std::fabs(value)};
}

}  // namespace

EvalResult log_gamma(double x) {
  require_finite(x, "log_gamma");
  if (x <= 0.0) throw DomainError("log_gamma: requires x > 0");
  double v = boost::math::lgamma(x);
  return {v, 4.0 * kEps * std::max(1.0, std::fabs(v))};
}

SignedLog log_gamma_signed(double x) {
  require_finite(x, "log_gamma_signed");
  if (is_nonpositive_integer(x)) throw PoleError("log_gamma_signed: pole at non-positive integer");
  int sign = 1;
  double v = boost::math::lgamma(x, &sign);
  return {v, sign};
}

EvalResult digamma(double x) {
  require_finite(x, "digamma");
  if (x <= 0.0) throw DomainError("digamma: requires x > 0");
  double v = boost::math::digamma(x);
  return {v, 4.0 * kEps * std::max(1.0, std::fabs(v))};
}

double bernoulli2(double a) { return a * a - a + 1.0 / 6.0; }

EvalResult hurwitz_zeta(double s, double x) {
  require_finite(s, "hurwitz_zeta");
  require_finite(x, "hurwitz_zeta");
  if (s == 1.0) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (x <= 0.0) throw DomainError("hurwitz_zeta: requires x > 0");
  return em_eval(s, x, false);
}

EvalResult hurwitz_zeta_ds(double s, double x) {
  require_finite(s, "hurwitz_zeta_ds");
  require_finite(x, "hurwitz_zeta_ds");
  if (s == 1.0) throw PoleError("hurwitz_zeta_ds: pole at s = 1");
  if (x <= 0.0) throw DomainError("hurwitz_zeta_ds: requires x > 0");
  return em_eval(s, x, true);
}

EvalResult hurwitz_zeta_ds(double x) { return hurwitz_zeta_ds(-1.0, x); }

EvalResult F(double x) {
  require_finite(x, "F");
  if (x < 0.0 || x > 1.0) throw DomainError("F: requires x in [0, 1]");
  if (x == 0.0) x = 1.0;
  return hurwitz_zeta(-1.0, x) + hurwitz_zeta_ds(x);
}

EvalResult gamma_ab(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
    throw DomainError("gamma_ab: requires a, b in [0, 1]");
  return F(b) + F(1.0 - b) - F(a) - F(1.0 - a);
}

EvalResult gamma_ab_quad(double a, double b) {
  if (!(a >= 0.0 && a <= 1.0 && b >= 0.0 && b <= 1.0))
    throw DomainError("gamma_ab_quad: requires a, b in [0, 1]");
  if (a == b) return {0.0, 0.0};
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  // g(x) = log Gamma(x) - log Gamma(1 - x), with y = 1 - x passed exactly
  auto g = [](double x, double y) { return boost::math::lgamma(x) - boost::math::lgamma(y); };
  // tanh-sinh handles the log singularity; each half is written so that it sits at 0
  boost::math::quadrature::tanh_sinh<double> ts;
  double total = 0.0, err = 0.0;
  if (a < 0.5) {
    double e = 0.0;
    total += ts.integrate([&g](double x) { return x <= 0.0 ? 0.0 : g(x, 1.0 - x); }, a, std::min(b, 0.5), 1e-13, &e);
    err += e;
  }
  if (b > 0.5) {
    double e = 0.0;
    total += ts.integrate([&g](double y) { return y <= 0.0 ? 0.0 : -g(y, 1.0 - y); }, 1.0 - b, 1.0 - std::max(a, 0.5),
                          1e-13, &e);
    err += e;
  }
  return {sign * total, err + 16.0 * kEps * std::fabs(total)};
}

SignedLog log_l(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("log l: pole of Gamma(x)");
  if (is_nonpositive_integer(1.0 - x)) return SignedLog::zero();
  return log_gamma_signed(x) / log_gamma_signed(1.0 - x);
}

ComplexEval dirichlet_L(double s, const DirichletCharacter& chi) {
  if (s == 1.0) {
    if (chi.is_trivial()) throw PoleError("dirichlet_L: pole of the trivial character at s = 1");
    throw DomainError("dirichlet_L: s = 1 is not supported by the Hurwitz expansion");
  }
  const long f = chi.modulus();
  std::complex<double> sum{0.0, 0.0};
  double err = 0.0;
  for (long a = 1; a <= f; ++a) {
    auto c = chi(a);
    if (c == std::complex<double>{0.0, 0.0}) continue;
    auto z = hurwitz_zeta(s, static_cast<double>(a) / static_cast<double>(f));
    sum += c * z.value;
    err += z.err + 2.0 * kEps * (1.0 + std::fabs(s)) * (std::fabs(z.value) + 1.0);
  }
  const double scale = std::pow(static_cast<double>(f), -s);
  return {scale * sum, scale * err + 4.0 * kEps * scale * std::abs(sum)};
}

ComplexEval dirichlet_L_ds(const DirichletCharacter& chi) {
  const long f = chi.modulus();
  const double lf = std::log(static_cast<double>(f));
  std::complex<double> sz{0.0, 0.0}, sd{0.0, 0.0};
  double ez = 0.0, ed = 0.0;
  for (long a = 1; a <= f; ++a) {
    auto c = chi(a);
    if (c == std::complex<double>{0.0, 0.0}) continue;
    const double x = static_cast<double>(a) / static_cast<double>(f);
    auto z = hurwitz_zeta(-1.0, x);
    auto d = hurwitz_zeta_ds(x);
    sz += c * z.value;
    sd += c * d.value;
    ez += z.err + 4.0 * kEps;
    ed += d.err + 4.0 * kEps * (1.0 + std::fabs(d.value));
  }
  const double scale = static_cast<double>(f);
  auto v = scale * (-lf * sz + sd);
  return {v, scale * (lf * ez + ed) + 4.0 * kEps * std::abs(v)};
}

DedekindTerms dedekind_terms(const FieldSpec& field) {
  DedekindTerms out{{1.0, 0.0}, {0.0, 0.0}, 0.0};
  for (const auto& chi : field.characters) {
    auto p = chi.primitive();
    auto L = dirichlet_L(-1.0, p);
    auto dL = dirichlet_L_ds(p);
    const double absL = std::abs(L.value);
    if (absL <= 1e-12 + L.err)
      throw DomainError("dedekind_log_deriv: L(-1, chi) vanishes for field " + field.id);
    out.product *= L.value;
    out.log_deriv += dL.value / L.value;
    out.err += (dL.err + std::abs(dL.value) / absL * L.err) / absL;
  }
  return out;
}

EvalResult dedekind_log_deriv(const FieldSpec& field) {
  auto t = dedekind_terms(field);
  if (std::fabs(t.log_deriv.imag()) > std::max(1e-12, 10.0 * t.err))
    throw InstabilityError("dedekind_log_deriv: non-real result for field " + field.id +
                           " (characters not closed under conjugation?)");
  return {t.log_deriv.real(), t.err};
}

}  // namespace arh
