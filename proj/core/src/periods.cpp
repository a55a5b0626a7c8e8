#include <arh/periods.hpp>
#include <arh/specfun.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <thread>

namespace arh {

const char* to_string(Polarity p) { return p == Polarity::canonical ? "canonical" : "anticanonical"; }

Polarity polarity_of(const WeightVector& w) {
  if (w.V() > 0.0) return Polarity::canonical;
  if (w.V() < 0.0) return Polarity::anticanonical;
  throw DomainError("V = 0: no period polarity on the log Calabi-Yau wall");
}

int resolve_workers(int hint) {
  if (hint > 0) return hint;
  if (const char* env = std::getenv("ARH_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void validate_period_config(const PeriodConfig& cfg) {
  if (cfg.N < 2) throw DomainError("period config requires N >= 2");
  if (!(cfg.margin > 0.0 && cfg.margin < 0.5)) throw DomainError("period margin must lie in (0, 1/2)");
  require_semistable(cfg.w);
  const double V = cfg.w.V();
  if (cfg.polarity == Polarity::canonical && !(V > 0.0))
    throw DomainError("canonical polarity requires V > 0");
  if (cfg.polarity == Polarity::anticanonical && !(V < 0.0))
    throw DomainError("anticanonical polarity requires V < 0");
  // arguments w_k - j rho sweep the segment between w_k and w_k - V/2
  for (double wk : cfg.w.w) {
    const double lo = std::min(wk, wk - V / 2.0), hi = std::max(wk, wk - V / 2.0);
    if (lo < cfg.margin || hi > 1.0 - cfg.margin)
      throw DomainError("weight " + std::to_string(wk) +
                        " puts a DF argument within the margin of a stability wall");
  }
  if (V <= -2.0 + cfg.margin) throw DomainError("V too close to -2 (pole of the DF product)");
}

namespace {

struct BlockSum {
  double sum = 0.0;
  double abs_sum = 0.0;
  int sign = 1;
};

// sum_{j=lo}^{hi-1} [log l((j+1) rho) - sum_k log l(w_k - j rho)]
BlockSum df_block(const PeriodConfig& cfg, double rho, long lo, long hi) {
  BlockSum b;
  for (long j = lo; j < hi; ++j) {
    auto t = log_l((j + 1) * rho);
    b.sum += t.log_abs;
    b.abs_sum += std::fabs(t.log_abs);
    b.sign *= t.sign;
    for (double wk : cfg.w.w) {
      auto u = log_l(wk - j * rho);
      b.sum -= u.log_abs;
      b.abs_sum += std::fabs(u.log_abs);
      b.sign *= u.sign;
    }
  }
  return b;
}

BlockSum pairwise(const std::vector<BlockSum>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return v[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  BlockSum a = pairwise(v, lo, mid), b = pairwise(v, mid, hi);
  return {a.sum + b.sum, a.abs_sum + b.abs_sum, a.sign * b.sign};
}

constexpr long kBlock = 2048;

EvalResult finish(const PeriodConfig& cfg, double rho, double body, double body_abs, int body_sign) {
  const double N = static_cast<double>(cfg.N);
  auto l0 = log_l(rho);
  const int sign = body_sign * (cfg.N % 2 == 0 || l0.sign > 0 ? 1 : -1);
  if (sign <= 0)
    throw InstabilityError("DF product has non-positive sign; configuration outside the stable region");
  const double head = log_gamma(N + 1.0).value + N * (std::log(std::numbers::pi) - l0.log_abs);
  const double value = head + body;
  const double err = 8.0 * kEps * (body_abs + std::fabs(head) + N * std::fabs(l0.log_abs));
  return {value, err};
}

}  // namespace

EvalResult df_log_Z(const PeriodConfig& cfg, int workers) {
  validate_period_config(cfg);
  const double rho = cfg.w.V() / (2.0 * static_cast<double>(cfg.N - 1));
  const long nblocks = (cfg.N + kBlock - 1) / kBlock;
  std::vector<BlockSum> blocks(static_cast<std::size_t>(nblocks));
  const int nw = std::max(1, std::min<int>(resolve_workers(workers), static_cast<int>(nblocks)));
  auto run = [&](int id) {
    for (long b = id; b < nblocks; b += nw)
      blocks[static_cast<std::size_t>(b)] = df_block(cfg, rho, b * kBlock, std::min(cfg.N, (b + 1) * kBlock));
  };
  if (nw == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nw; ++i) pool.emplace_back(run, i);
    for (auto& t : pool) t.join();
  }
  BlockSum total = pairwise(blocks, 0, blocks.size());
  return finish(cfg, rho, total.sum, total.abs_sum, total.sign);
}

EvalResult df_log_Z_reverse(const PeriodConfig& cfg) {
  validate_period_config(cfg);
  const double rho = cfg.w.V() / (2.0 * static_cast<double>(cfg.N - 1));
  double sum = 0.0, comp = 0.0, abs_sum = 0.0;
  int sign = 1;
  auto kahan = [&](double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    abs_sum += std::fabs(x);
  };
  for (long j = cfg.N - 1; j >= 0; --j) {
    for (int k = 2; k >= 0; --k) {
      auto u = log_l(cfg.w.w[static_cast<std::size_t>(k)] - j * rho);
      kahan(-u.log_abs);
      sign *= u.sign;
    }
    auto t = log_l((j + 1) * rho);
    kahan(t.log_abs);
    sign *= t.sign;
  }
  return finish(cfg, rho, sum, abs_sum, sign);
}

EvalResult height_from_periods(const PeriodConfig& cfg, int workers) {
  auto lz = df_log_Z(cfg, workers);
  const double scale = 1.0 / (2.0 * static_cast<double>(cfg.N));
  return cfg.polarity == Polarity::canonical ? -scale * lz : scale * lz;
}

std::vector<ConvergenceRow> convergence_report(const WeightVector& w, Polarity polarity,
                                               const std::vector<long>& N_list, double margin,
                                               int workers) {
  std::vector<ConvergenceRow> rows;
  if (N_list.empty()) return rows;
  const double target =
      polarity == Polarity::canonical ? h_can_positive(w).value : h_can_fano(w).value;
  for (long N : N_list) {
    PeriodConfig cfg{N, w, polarity, margin};
    const double est = height_from_periods(cfg, workers).value;
    rows.push_back({N, est, est - target});
  }
  return rows;
}

}  // namespace arh
