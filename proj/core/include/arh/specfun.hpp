#pragma once

#include <arh/common.hpp>
#include <arh/fields.hpp>

namespace arh {

EvalResult log_gamma(double x);
SignedLog log_gamma_signed(double x);
EvalResult digamma(double x);

// B_2(a) = a^2 - a + 1/6.
double bernoulli2(double a);

EvalResult hurwitz_zeta(double s, double x);
// d/ds zeta(s, x); the one-argument form is evaluated at s = -1.
EvalResult hurwitz_zeta_ds(double s, double x);
EvalResult hurwitz_zeta_ds(double x);

// F(x) = zeta(-1, x) + zeta'(-1, x) on [0, 1], with F(0) := F(1).
EvalResult F(double x);
// gamma(a, b) = F(b) + F(1-b) - F(a) - F(1-a) = int_a^b log(Gamma(x)/Gamma(1-x)) dx.
EvalResult gamma_ab(double a, double b);
EvalResult gamma_ab_quad(double a, double b);

// log l(x) with l(x) = Gamma(x) / Gamma(1-x); sign-tracked.
SignedLog log_l(double x);

ComplexEval dirichlet_L(double s, const DirichletCharacter& chi);
ComplexEval dirichlet_L_ds(const DirichletCharacter& chi);

struct DedekindTerms {
  std::complex<double> product;     // prod_chi L(-1, chi)
  std::complex<double> log_deriv;   // sum_chi L'(-1, chi) / L(-1, chi)
  double err = 0.0;
};

// Uses the primitive character inducing each table entry.
DedekindTerms dedekind_terms(const FieldSpec& field);
EvalResult dedekind_log_deriv(const FieldSpec& field);

}  // namespace arh
