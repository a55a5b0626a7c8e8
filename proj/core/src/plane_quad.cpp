#include <arh/plane_quad.hpp>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace arh {

EvalResult integrate_plane(const std::function<double(const PlanePoint&)>& g,
                           const std::vector<PlaneSingularity>& points, double tail_exponent,
                           const PlaneQuadOptions& opt) {
  if (points.empty()) throw DomainError("integrate_plane: at least one anchor point required");
  if (!(tail_exponent < -2.0)) throw DivergenceError("integrate_plane: integrand does not decay fast enough");
  for (const auto& p : points)
    if (!(p.exponent > -2.0)) throw DivergenceError("integrate_plane: non-integrable point singularity");

  using boost::math::quadrature::gauss_kronrod;
  const int n = opt.n_theta;
  const double dtheta = 2.0 * std::numbers::pi / n;
  std::vector<std::complex<double>> dirs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) dirs[static_cast<std::size_t>(j)] = std::polar(1.0, (j + 0.5) * dtheta);

  // phi_p = |z-p|^-k / sum_q |z-q|^-k, written to stay finite near every point
  auto weight = [&](const PlanePoint& x) {
    const double k = opt.pou_power;
    const double dp = std::abs(x.offset);
    double s = 0.0;
    for (const auto& q : points) s += std::pow(dp / x.dist(q.where), k);
    return 1.0 / s;
  };

  EvalResult total{0.0, 0.0};
  for (std::size_t ip = 0; ip < points.size(); ++ip) {
    const auto p = points[ip].where;
    double rho = 1.0;
    if (points.size() > 1) {
      rho = std::numeric_limits<double>::infinity();
      for (std::size_t iq = 0; iq < points.size(); ++iq)
        if (iq != ip) rho = std::min(rho, std::abs(points[iq].where - p));
    }
    auto ring = [&](double r) {
      double acc = 0.0;
      for (const auto& d : dirs) {
        const PlanePoint x{p, r * d};
        acc += g(x) * weight(x);
      }
      return acc * dtheta;
    };
    // rho_far: beyond it every point looks like the cluster around p
    double rho_far = rho;
    for (const auto& q : points) rho_far = std::max(rho_far, std::abs(q.where - p));
    const double log_tol = std::log(1.0 / opt.rel_tol);
    const double e = points[ip].exponent;
    // Below r0 the piece is r^e times a smooth even correction, so the
    // analytic tail is off by O((r0/rho)^2) of itself.
    const double L_in = log_tol / (4.0 + e) + 2.0;
    const double L_out = log_tol / (-tail_exponent) + 2.0;
    const double t_rho = std::log(rho);
    const double t_lo = t_rho - L_in;
    const double t_hi = std::log(rho_far) + L_out;
    auto radial = [&](double t) {
      const double r = std::exp(t);
      return ring(r) * r * r;
    };
    double e1 = 0.0, e2 = 0.0;
    const double a_mid = gauss_kronrod<double, 15>::integrate(radial, t_lo, t_rho, opt.max_depth, opt.rel_tol, &e1);
    const double b_mid = gauss_kronrod<double, 15>::integrate(radial, t_rho, t_hi, opt.max_depth, opt.rel_tol, &e2);
    const double a = a_mid + radial(t_lo) / (2.0 + e);
    const double b = b_mid + radial(t_hi) / (-2.0 - tail_exponent);
    total.value += a + b;
    total.err += e1 + e2;
  }
  total.err += 8.0 * kEps * std::fabs(total.value);
  return total;
}

}  // namespace arh
