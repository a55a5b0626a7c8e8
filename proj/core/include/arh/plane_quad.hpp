#pragma once

#include <arh/common.hpp>

#include <complex>
#include <functional>
#include <vector>

namespace arh {

// A point where the integrand behaves like |z - p|^exponent.
struct PlaneSingularity {
  std::complex<double> where;
  double exponent = 0.0;
};

// A sample written as center + offset so that distances to the center stay
// exact even when the offset is far below the center's ulp.
struct PlanePoint {
  std::complex<double> center;
  std::complex<double> offset;

  std::complex<double> z() const { return center + offset; }
  double dist(std::complex<double> q) const { return std::abs((center - q) + offset); }
};

struct PlaneQuadOptions {
  int n_theta = 48;        // trapezoid nodes per circle
  double rel_tol = 1e-9;   // radial Gauss-Kronrod tolerance
  int max_depth = 12;
  int pou_power = 8;       // partition of unity weight |z - p|^-k
};

// Integral of g over the complex plane with respect to area, where g is
// nonnegative-ish and smooth away from the listed points, and
// g ~ |z|^tail_exponent at infinity (tail_exponent < -2).
// The plane is split by a partition of unity around each point; every piece
// is done in polar coordinates in the variable log r, with the innermost disc
// and the far tail closed analytically from the local power laws.
EvalResult integrate_plane(const std::function<double(const PlanePoint&)>& g,
                           const std::vector<PlaneSingularity>& points, double tail_exponent,
                           const PlaneQuadOptions& opt = {});

}  // namespace arh
