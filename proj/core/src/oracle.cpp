#include <arh/periods.hpp>
#include <arh/plane_quad.hpp>

#include <cmath>
#include <numbers>
#include <thread>

namespace arh {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double uniform01(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t h = splitmix64(splitmix64(seed) ^ counter);
  return (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
}

void check_integrable(int N, const WeightVector& w) {
  if (N < 2) throw DomainError("oracle requires N >= 2");
  const double V = w.V();
  const double beta = 2.0 * V / (N - 1);  // exponent of each |z_i - z_j|
  const double w0 = w.w[0], w1 = w.w[1];
  for (int k = 1; k <= N; ++k) {
    const double pairs_in = k * (k - 1) / 2.0;
    // k points collapsing onto 0, onto 1, or onto a generic point
    if (!(2.0 * k - 2.0 * k * w0 + pairs_in * beta > 0.0))
      throw DivergenceError("Vandermonde integral diverges: points collapsing at 0");
    if (!(2.0 * k - 2.0 * k * w1 + pairs_in * beta > 0.0))
      throw DivergenceError("Vandermonde integral diverges: points collapsing at 1");
    if (k >= 2 && !(2.0 * (k - 1) + pairs_in * beta > 0.0))
      throw DivergenceError("Vandermonde integral diverges: points colliding with each other");
    // k points escaping to infinity while the others stay bounded
    const double pairs_out = pairs_in + k * (N - k);
    if (!(2.0 * k - 2.0 * k * (w0 + w1) + pairs_out * beta < 0.0))
      throw DivergenceError("Vandermonde integral diverges at infinity");
  }
}

namespace {

constexpr double kPi = std::numbers::pi;

// N = 2: nested plane quadratures, inner over z2 with z1 fixed.
EvalResult quadrature_Z2(const WeightVector& w, const OracleBudget& budget) {
  const double w0 = w.w[0], w1 = w.w[1], V = w.V();
  auto g = [w0, w1](const PlanePoint& x) {
    return std::pow(x.dist(0.0), -2.0 * w0) * std::pow(x.dist(1.0), -2.0 * w1);
  };
  PlaneQuadOptions inner_opt;
  inner_opt.n_theta = 12;
  inner_opt.rel_tol = 1e-6;
  inner_opt.max_depth = 12;
  const double inner_tail = -2.0 * (w0 + w1) + 2.0 * V;
  auto I = [&](std::complex<double> z1) {
    auto h = [&](const PlanePoint& x) { return g(x) * std::pow(x.dist(z1), 2.0 * V); };
    return integrate_plane(h, {{0.0, -2.0 * w0}, {1.0, -2.0 * w1}, {z1, 2.0 * V}}, inner_tail, inner_opt);
  };
  // budget counts outer nodes, each of which is a full inner plane integral
  long outer_evals = 0;
  constexpr int n_outer = 12;
  const double outer_tail = inner_tail + std::max(0.0, 2.0 - 2.0 * (w0 + w1));
  auto run = [&](int n_theta) {
    PlaneQuadOptions opt;
    opt.n_theta = n_theta;
    opt.rel_tol = 1e-5;
    opt.max_depth = 12;
    auto outer = [&](const PlanePoint& x) {
      if (++outer_evals > budget.evaluations)
        throw InstabilityError("quadrature oracle exceeded its evaluation budget");
      return g(x) * I(x.z()).value;
    };
    const double e0 = -2.0 * w0 + std::min(0.0, 2.0 + 2.0 * V - 2.0 * w0);
    const double e1 = -2.0 * w1 + std::min(0.0, 2.0 + 2.0 * V - 2.0 * w1);
    return integrate_plane(outer, {{0.0, e0}, {1.0, e1}}, outer_tail, opt);
  };
  auto fine = run(n_outer);
  auto coarse = run(n_outer / 2);
  const double err = fine.err + std::fabs(fine.value - coarse.value) + 10.0 * inner_opt.rel_tol * fine.value;
  return {fine.value, err};
}

// Per-point proposal: power-law discs at 0 and 1, a Cauchy-type plane
// component, and (for attracting pairs) power-law discs at earlier points.
struct Proposal {
  double a0, a1;       // disc exponents, density ~ |z - p|^{-2a}
  double R = 0.5;      // disc radius
  double tau, s = 1.0; // Cauchy tail: density ~ (1 + |z - 1/2|^2 / s^2)^{-1-tau}
  double b;            // pair exponent for attracting pairs (0 if none)
  double p_disc0, p_disc1, p_cauchy, p_pair;

  double disc_density(double r, double a) const {
    if (r >= R) return 0.0;
    return (2.0 - 2.0 * a) / (2.0 * kPi * std::pow(R, 2.0 - 2.0 * a)) * std::pow(r, -2.0 * a);
  }
  double cauchy_density(std::complex<double> z) const {
    const double q = std::norm(z - 0.5) / (s * s);
    return tau / (kPi * s * s) * std::pow(1.0 + q, -1.0 - tau);
  }
  std::complex<double> disc_sample(std::complex<double> c, double a, double u, double v) const {
    return c + std::polar(R * std::pow(u, 1.0 / (2.0 - 2.0 * a)), 2.0 * kPi * v);
  }
  std::complex<double> cauchy_sample(double u, double v) const {
    return 0.5 + std::polar(s * std::sqrt(std::pow(u, -1.0 / tau) - 1.0), 2.0 * kPi * v);
  }
};

struct Moments {
  double sum = 0.0, sum2 = 0.0;
  long n = 0;
};

Moments combine(const Moments& a, const Moments& b) { return {a.sum + b.sum, a.sum2 + b.sum2, a.n + b.n}; }

Moments pairwise(const std::vector<Moments>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return combine(pairwise(v, lo, mid), pairwise(v, mid, hi));
}

EvalResult monte_carlo_Z(int N, const WeightVector& w, const OracleBudget& budget) {
  const double w0 = w.w[0], w1 = w.w[1], V = w.V();
  const double beta = 2.0 * V / (N - 1);
  Proposal P;
  P.a0 = w0;
  P.a1 = w1;
  // single-point decay |z|^{2 w2 - 4}; keep the proposal tail heavier
  const double decay = 4.0 - 2.0 * w.w[2];
  P.tau = std::max(0.05, 0.5 * (decay - 2.0));
  P.b = beta < 0.0 ? -beta / 2.0 : 0.0;
  if (P.b > 0.0) {
    P.p_disc0 = 0.25;
    P.p_disc1 = 0.25;
    P.p_cauchy = 0.3;
    P.p_pair = 0.2;
  } else {
    P.p_disc0 = 0.3;
    P.p_disc1 = 0.3;
    P.p_cauchy = 0.4;
    P.p_pair = 0.0;
  }

  constexpr long kBlock = 1 << 14;
  constexpr std::uint64_t kDraws = 4;  // uniforms per point
  const long nsamples = std::max<long>(budget.samples, kBlock);
  const long nblocks = (nsamples + kBlock - 1) / kBlock;
  std::vector<Moments> blocks(static_cast<std::size_t>(nblocks));

  auto sample_block = [&](long b) {
    Moments m;
    std::complex<double> z[3];
    for (long i = b * kBlock; i < std::min(nsamples, (b + 1) * kBlock); ++i) {
      double logq = 0.0;
      for (int p = 0; p < N; ++p) {
        const std::uint64_t base = (static_cast<std::uint64_t>(i) * 3 + p) * kDraws;
        const double c = uniform01(budget.seed, base);
        const double u = uniform01(budget.seed, base + 1);
        const double v = uniform01(budget.seed, base + 2);
        const int npair = p;  // attracting discs around the earlier points
        double acc = P.p_disc0;
        if (c < acc) {
          z[p] = P.disc_sample(0.0, P.a0, u, v);
        } else if (c < (acc += P.p_disc1)) {
          z[p] = P.disc_sample(1.0, P.a1, u, v);
        } else if (npair == 0 || c < (acc += P.p_cauchy)) {
          z[p] = P.cauchy_sample(u, v);
        } else {
          const double t = uniform01(budget.seed, base + 3);
          const int q = std::min(npair - 1, static_cast<int>(t * npair));
          z[p] = P.disc_sample(z[q], P.b, u, v);
        }
        // mixture density at z[p]; without earlier points the pair mass joins the Cauchy part
        const double pc = npair == 0 ? P.p_cauchy + P.p_pair : P.p_cauchy;
        double dens = P.p_disc0 * P.disc_density(std::abs(z[p]), P.a0) +
                      P.p_disc1 * P.disc_density(std::abs(z[p] - 1.0), P.a1) + pc * P.cauchy_density(z[p]);
        for (int q = 0; q < npair; ++q)
          dens += P.p_pair / npair * P.disc_density(std::abs(z[p] - z[q]), P.b);
        logq += std::log(dens);
      }
      double logf = 0.0;
      for (int p = 0; p < N; ++p) {
        logf += -w0 * std::log(std::norm(z[p])) - w1 * std::log(std::norm(z[p] - 1.0));
        for (int q = 0; q < p; ++q) logf += 0.5 * beta * std::log(std::norm(z[p] - z[q]));
      }
      const double wgt = std::exp(logf - logq);
      m.sum += wgt;
      m.sum2 += wgt * wgt;
      ++m.n;
    }
    blocks[static_cast<std::size_t>(b)] = m;
  };

  const int nw = std::max(1, std::min<int>(resolve_workers(budget.workers), static_cast<int>(nblocks)));
  if (nw == 1) {
    for (long b = 0; b < nblocks; ++b) sample_block(b);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nw; ++t)
      pool.emplace_back([&, t] {
        for (long b = t; b < nblocks; b += nw) sample_block(b);
      });
    for (auto& th : pool) th.join();
  }
  const Moments tot = pairwise(blocks, 0, blocks.size());
  const double n = static_cast<double>(tot.n);
  const double mean = tot.sum / n;
  const double var = std::max(0.0, tot.sum2 / n - mean * mean);
  return {mean, std::sqrt(var / n)};
}

}  // namespace

EvalResult mc_oracle_Z(int N, const WeightVector& w, OracleScheme scheme, const OracleBudget& budget) {
  if (!in_box(w)) throw DomainError("oracle weights must lie in [0, 1]");
  if (w.V() == 0.0) throw DomainError("oracle requires V != 0");
  if (N != 2 && N != 3) throw DomainError("oracle supports N in {2, 3}");
  check_integrable(N, w);
  if (scheme == OracleScheme::quadrature) {
    if (N != 2) throw DomainError("quadrature oracle supports N = 2 only; use monte-carlo for N = 3");
    return quadrature_Z2(w, budget);
  }
  return monte_carlo_Z(N, w, budget);
}

}  // namespace arh
