#pragma once

#include <arh/common.hpp>
#include <arh/heights.hpp>

#include <cstdint>
#include <vector>

namespace arh {

enum class Polarity { canonical, anticanonical };

const char* to_string(Polarity p);
Polarity polarity_of(const WeightVector& w);  // sign of V; throws at V = 0

struct PeriodConfig {
  long N = 2;
  WeightVector w;
  Polarity polarity = Polarity::canonical;
  double margin = 1e-3;  // distance of every w_k-dependent DF argument from {0, 1}
};

// Throws DomainError naming the violated condition.
void validate_period_config(const PeriodConfig& cfg);

// Worker count: the hint if positive, else $ARH_WORKERS, else hardware concurrency.
int resolve_workers(int hint);

// log Z_N from the Dotsenko-Fateev product, summed in fixed blocks with a
// pairwise reduction so the result does not depend on the worker count.
EvalResult df_log_Z(const PeriodConfig& cfg, int workers = 0);
// Same sum taken in reverse order with Kahan compensation (cross-check).
EvalResult df_log_Z_reverse(const PeriodConfig& cfg);

// -(1/2N) log Z_N (canonical) or +(1/2N) log Z_N (anticanonical).
EvalResult height_from_periods(const PeriodConfig& cfg, int workers = 0);

struct ConvergenceRow {
  long N = 0;
  double estimate = 0.0;
  double gap = 0.0;  // estimate minus the closed-form height
};

std::vector<ConvergenceRow> convergence_report(const WeightVector& w, Polarity polarity,
                                               const std::vector<long>& N_list,
                                               double margin = 1e-3, int workers = 0);

enum class OracleScheme { quadrature, monte_carlo };

struct OracleBudget {
  long evaluations = 1000000;  // quadrature
  long samples = 10000000;     // Monte Carlo
  std::uint64_t seed = 0x5eed;
  int workers = 0;
};

// Throws DivergenceError unless the N-point Vandermonde integral converges.
void check_integrable(int N, const WeightVector& w);

// Direct estimate of Z_N (not its log) by 2N-dimensional integration.
// Quadrature supports N = 2; Monte Carlo supports N in {2, 3}.
EvalResult mc_oracle_Z(int N, const WeightVector& w, OracleScheme scheme,
                       const OracleBudget& budget = {});

// Counter-based generator: the k-th draw of a stream is a pure function of (seed, k).
std::uint64_t splitmix64(std::uint64_t x);
double uniform01(std::uint64_t seed, std::uint64_t counter);

}  // namespace arh
