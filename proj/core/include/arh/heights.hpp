#pragma once

#include <arh/common.hpp>
#include <arh/symbolic.hpp>

#include <array>
#include <string>

namespace arh {

// Tolerance used when checking the box and stability inequalities, so that
// rounded rational weights such as 2/3 sit inside the region.
inline constexpr double kWeightTol = 1e-12;

// Coefficients of the boundary divisor at 0, 1 and infinity.
struct WeightVector {
  std::array<double, 3> w{};

  double V() const { return w[0] + w[1] + w[2] - 2.0; }
  double sum() const { return w[0] + w[1] + w[2]; }
};

// Ramification indices; kInfinity stands for a cusp (weight 1).
struct RamIndices {
  static constexpr long kInfinity = 0;
  std::array<long, 3> m{};

  WeightVector weights() const;
  std::array<Rational, 3> exact_weights() const;
  std::string to_string() const;
};

Rational ram_weight(long m);  // 1 - 1/m, with infinity -> 1
RamIndices parse_ram_indices(const std::string& text);  // "2,3,inf"
WeightVector parse_weights(const std::string& text);    // "0.5,0.6667,1"

double volume(const WeightVector& w);
bool in_box(const WeightVector& w);
bool k_semistable(const WeightVector& w);
// Throws DomainError naming the violated condition.
void require_semistable(const WeightVector& w);

EvalResult h_can_positive(const WeightVector& w);  // V > 0, the function f(w)
EvalResult h_can_fano(const WeightVector& w);      // V < 0
// +h_can(K) for V > 0 and -h_can(-K) for V < 0.
EvalResult h_can_signed(const WeightVector& w);
EvalResult h_pet(const WeightVector& w);
// Height for the Kaehler-Einstein metric of volume pi:
// h_can + 1/2 log pi (V > 0), h_can(-K) - 1/2 log pi (V < 0).
EvalResult h_pi_normalized(const WeightVector& w);

// Divisor w0 at 0, w_inf at infinity and w1 at both 1 and -1.
EvalResult four_point_h_can(double w0, double w1, double winf);

// Bracket sum_i w_i / 2 - (w_0 + w_1) of the coordinate change z = a * zeta.
double shift_coefficient(const WeightVector& w);
double shift_by_a(double h, const WeightVector& w, long a);

double fujita_height_pn(int n);

// -1/2 log of the integral of |z|^{-2 w0} |z-1|^{-2 w1} over C, for V = 0.
EvalResult faltings_logCY(const WeightVector& w);

double sharp_bound();          // -1/2 (1 + log pi)
double semiample_sharp_bound();  // -1/2 log pi + 3/2 log(Gamma(2/3)/Gamma(1/3))
double fano_linear_slope();    // 1/4 (1 + log 3/4)
double bound_linear_fano(const WeightVector& w);
// literal_typo evaluates the printed Gamma'(1/3)/Gamma(2/3) in place of psi(1/3).
double semiample_slope(bool literal_typo = false);
double bound_semiample(const WeightVector& w, bool literal_typo = false);

// Closed form 1/2 (1 + log pi - log(|V|/2)) for the pair (t, 0, t), V < 0.
double two_point_fano(double V);

}  // namespace arh
