#pragma once

#include <arh/common.hpp>
#include <arh/symbolic.hpp>

#include <array>

namespace arh {

// a0 x0^m + a1 x1^m + a2 x2^m = 0
struct FermatSpec {
  long m = 4;
  std::array<long, 3> a{-1, 1, 1};
};

// Raised when a derived upper bound comes out negative.
class InconsistencyError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

EvalResult fermat_h_can(const FermatSpec& spec);
// Coefficient ((m-3)/2 + 1)/m of sum log|a_i|.
Rational twist_coefficient(long m);

long genus(long m);

double epsilon_m(long m);
// The same number as an exact log-combination (every log is of an integer).
LogCombo epsilon_m_exact(long m);

double arakelov_gap(long m);
LogCombo arakelov_gap_exact(long m);

struct ArakelovBound {
  double first = 0;        // gamma-based bound
  double second = 0;       // Q(sqrt 2) zeta bound
  LogCombo second_exact;   // includes eps_m and 2 log m
  double eps = 0;
};

ArakelovBound arakelov_upper_bound(long m);

// m-independent constant of the second bound, taken with eps_4.
LogCombo fermat_constant_exact();
double fermat_constant();

}  // namespace arh
