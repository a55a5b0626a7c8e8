#include <arh/verify.hpp>

#include <arh/fermat.hpp>
#include <arh/heights.hpp>
#include <arh/periods.hpp>
#include <arh/shimura.hpp>
#include <arh/specfun.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

namespace arh::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Runs body and turns an escaping exception into a failed check.
void guarded(std::vector<Check>& out, const std::string& name, const std::function<Check()>& body) {
  try {
    Check c = body();
    if (c.name.empty()) c.name = name;
    out.push_back(std::move(c));
  } catch (const std::exception& e) {
    out.push_back({name, false, std::string("exception: ") + e.what()});
  }
}

Check within(const std::string& name, double diff, double tol) {
  return {name, std::isfinite(diff) && std::fabs(diff) < tol, "|diff| = " + sci(std::fabs(diff)) + " (tol " + sci(tol) + ")"};
}

std::vector<Check> table1() {
  std::vector<Check> out;
  for (const auto& row : table1_rows()) {
    const std::string name = "row " + row.indices.to_string() + " " + row.field_id;
    guarded(out, name, [&] { return within(name, table1_residual(row), 1e-9); });
  }
  return out;
}

std::vector<Check> table2() {
  std::vector<Check> out;
  for (const auto& row : table2_rows()) {
    const std::string name = "row " + row.indices.to_string();
    guarded(out, name, [&] { return within(name, table2_residual(row), 1e-9); });
  }
  return out;
}

std::string h_text(const std::map<long, Rational>& h) {
  std::string s = "{";
  for (const auto& [p, v] : h) s += (s.size() > 1 ? ", " : "") + std::to_string(p) + ": " + rational_to_string(v);
  return s + "}";
}

std::vector<Check> shimura() {
  std::vector<Check> out;
  for (const auto& c : builtin_cases()) {
    guarded(out, c.id, [&] {
      const auto h = h_p_map(c);
      const bool ok = h == c.expected_h;
      return Check{c.id, ok, "h = " + h_text(h) + ", expected " + h_text(c.expected_h)};
    });
  }
  return out;
}

std::vector<Check> sharp_bounds() {
  std::vector<Check> out;
  const double bound = sharp_bound();
  const double semi = semiample_sharp_bound();
  long n = 0, above = 0, eq_elsewhere = 0, semi_above = 0;
  bool eq_at_zero = false;
  double worst = -INFINITY, worst_semi = -INFINITY;
  for (int i = 0; i < 20; ++i)
    for (int j = 0; j < 20; ++j)
      for (int k = 0; k < 20; ++k) {
        const WeightVector w{{i / 19.0, j / 19.0, k / 19.0}};
        if (!k_semistable(w) || std::fabs(w.V()) < 1e-12) continue;
        ++n;
        const double s = h_can_signed(w).value;
        worst = std::max(worst, s - bound);
        if (s > bound + 1e-9) ++above;
        const bool zero = i == 0 && j == 0 && k == 0;
        if (std::fabs(s - bound) < 1e-9) {
          if (zero)
            eq_at_zero = true;
          else
            ++eq_elsewhere;
        }
        if (w.V() > 0) {
          worst_semi = std::max(worst_semi, s - semi);
          if (s > semi + 1e-9) ++semi_above;
        }
      }
  out.push_back({"signed height below -1/2(1+log pi)", above == 0,
                 std::to_string(n) + " grid points, max excess " + sci(worst)});
  out.push_back({"equality only at w = 0", eq_at_zero && eq_elsewhere == 0,
                 std::string("at zero: ") + (eq_at_zero ? "yes" : "no") + ", elsewhere: " + std::to_string(eq_elsewhere)});
  out.push_back({"semi-ample branch below the Gamma-ratio constant", semi_above == 0, "max excess " + sci(worst_semi)});
  return out;
}

std::vector<Check> period_convergence() {
  std::vector<Check> out;
  guarded(out, "canonical (3/4,3/4,3/4)", [] {
    const WeightVector w{{0.75, 0.75, 0.75}};
    const auto rows = convergence_report(w, Polarity::canonical, {100, 1000, 10000});
    bool decreasing = true;
    for (std::size_t i = 1; i < rows.size(); ++i)
      decreasing = decreasing && std::fabs(rows[i].gap) < std::fabs(rows[i - 1].gap);
    const double last = rows.back().gap;
    return Check{"canonical (3/4,3/4,3/4)", decreasing && std::fabs(last) < 5e-3,
                 "gaps " + sci(rows[0].gap) + ", " + sci(rows[1].gap) + ", " + sci(last) +
                     (decreasing ? " (decreasing)" : " (not decreasing)")};
  });
  guarded(out, "anticanonical (1/2,1/2,1/2)", [] {
    const WeightVector w{{0.5, 0.5, 0.5}};
    PeriodConfig cfg{10000, w, Polarity::anticanonical};
    const double target = 0.5 * (1.0 + std::log(kPi)) + 0.5 * std::log(2.0);
    return within("anticanonical (1/2,1/2,1/2)", height_from_periods(cfg).value - target, 1e-2);
  });
  return out;
}

std::vector<Check> small_n_oracle() {
  std::vector<Check> out;
  for (const auto& w : {WeightVector{{5.0 / 6, 5.0 / 6, 5.0 / 6}}, WeightVector{{0.5, 0.5, 0.5}}}) {
    const std::string name = std::string(to_string(polarity_of(w))) + " w = (" + num(w.w[0]) + ")^3";
    guarded(out, name, [&] {
      const PeriodConfig cfg{2, w, polarity_of(w)};
      const double df = std::exp(df_log_Z(cfg).value);
      const auto q = mc_oracle_Z(2, w, OracleScheme::quadrature);
      const double rel = q.value / df - 1.0;
      return Check{name, std::fabs(rel) < 1e-2,
                   "quadrature " + num(q.value) + " +- " + sci(q.err) + ", product " + num(df) + ", rel " + sci(rel)};
    });
  }
  return out;
}

// Richardson limit of f along (t,t,t) as V = 3t - 2 -> 0+.
double limit_from_above(double delta) {
  auto f = [](double V) {
    const double t = (V + 2.0) / 3.0;
    return h_can_positive(WeightVector{{t, t, t}}).value;
  };
  return 2.0 * f(delta) - f(2.0 * delta);
}

std::vector<Check> faltings() {
  std::vector<Check> out;
  const double t = 2.0 / 3.0;
  guarded(out, "closed form at (2/3,2/3,2/3)", [&] {
    const double h = faltings_logCY(WeightVector{{t, t, t}}).value;
    return within("closed form at (2/3,2/3,2/3)", h - semiample_sharp_bound(), 1e-5);
  });
  guarded(out, "V -> 0+ limit of f", [&] {
    const double h = faltings_logCY(WeightVector{{t, t, t}}).value;
    return within("V -> 0+ limit of f", h - limit_from_above(1e-3), 1e-5);
  });
  return out;
}

std::vector<Check> fermat() {
  std::vector<Check> out;
  guarded(out, "constant -0.88 +- 0.005", [] {
    const double c = fermat_constant();
    return Check{"constant -0.88 +- 0.005", std::fabs(c + 0.88) <= 0.005, "constant = " + num(c)};
  });
  guarded(out, "eps_4 = log 2 + 1/4", [] {
    const LogCombo expect = LogCombo::rational(Rational(1, 4)) + LogCombo::log_prime(2);
    const bool exact = epsilon_m_exact(4) == expect;
    const double diff = epsilon_m(4) - (std::log(2.0) + 0.25);
    return Check{"eps_4 = log 2 + 1/4", exact && std::fabs(diff) < 1e-14,
                 std::string("exact form ") + (exact ? "matches" : "differs") + ", numeric diff " + sci(diff)};
  });
  guarded(out, "bound chain m in [4,60]", [] {
    std::string failing;
    long n_fail = 0;
    for (long m = 4; m <= 60; ++m) {
      const double lhs = fermat_h_can(FermatSpec{m, {-1, 1, 1}}).value + arakelov_gap(m);
      const double rhs = arakelov_upper_bound(m).second;
      if (!(lhs <= rhs + 1e-9)) {
        ++n_fail;
        if (failing.size() < 60) failing += (failing.empty() ? "" : ",") + std::to_string(m);
      }
    }
    return Check{"bound chain m in [4,60]", n_fail == 0,
                 n_fail == 0 ? std::string("holds for all m") : std::to_string(n_fail) + " failures at m = " + failing};
  });
  return out;
}

std::vector<Check> specfun_suite() {
  std::vector<Check> out;
  guarded(out, "zeta(-1,a) = -B2(a)/2", [] {
    double worst = 0;
    for (int i = 0; i <= 40; ++i) {
      const double a = 0.05 + 0.1 * i;
      worst = std::max(worst, std::fabs(hurwitz_zeta(-1.0, a).value + 0.5 * bernoulli2(a)));
    }
    return within("zeta(-1,a) = -B2(a)/2", worst, 1e-13);
  });
  guarded(out, "Hurwitz recurrences", [] {
    double worst = 0;
    for (double s : {-3.5, -1.0, -0.5, 0.5, 2.0, 3.25})
      for (double x : {0.1, 0.37, 0.5, 0.93, 1.7}) {
        const double r = hurwitz_zeta(s, x).value - hurwitz_zeta(s, x + 1).value - std::pow(x, -s);
        const double rd = hurwitz_zeta_ds(s, x).value - hurwitz_zeta_ds(s, x + 1).value + std::pow(x, -s) * std::log(x);
        const double scale = std::max(1.0, std::pow(x, -s));
        worst = std::max({worst, std::fabs(r) / scale, std::fabs(rd) / scale});
      }
    return within("Hurwitz recurrences", worst, 1e-10);
  });
  guarded(out, "multiplication theorem", [] {
    double worst = 0;
    for (int n : {2, 3, 5})
      for (double s : {-1.0, -0.5, 2.5})
        for (double x : {0.15, 0.4, 0.7}) {
          double sum = 0, dsum = 0;
          for (int k = 0; k < n; ++k) {
            sum += hurwitz_zeta(s, x + double(k) / n).value;
            dsum += hurwitz_zeta_ds(s, x + double(k) / n).value;
          }
          const double ns = std::pow(double(n), s);
          const double z = hurwitz_zeta(s, n * x).value, dz = hurwitz_zeta_ds(s, n * x).value;
          const double r = sum - ns * z;
          const double rd = dsum - (ns * std::log(double(n)) * z + ns * dz);
          const double scale = std::max({1.0, std::fabs(sum), std::fabs(dsum)});
          worst = std::max({worst, std::fabs(r) / scale, std::fabs(rd) / scale});
        }
    return within("multiplication theorem", worst, 1e-10);
  });
  guarded(out, "F' = log Gamma - 1/2 log 2 pi", [] {
    double worst = 0;
    const double h = 1e-5;
    for (int i = 1; i <= 9; ++i) {
      const double x = 0.1 * i;
      const double fd = (F(x + h).value - F(x - h).value) / (2 * h);
      worst = std::max(worst, std::fabs(fd - (std::lgamma(x) - 0.5 * std::log(2 * kPi))));
    }
    return within("F' = log Gamma - 1/2 log 2 pi", worst, 1e-6);
  });
  guarded(out, "gamma closed form vs quadrature", [] {
    double worst = 0;
    for (auto [a, b] : {std::pair{0.0, 0.25}, {0.1, 0.7}, {0.3, 0.95}, {0.5, 1.0}, {0.0, 1.0}, {0.62, 0.64}})
      worst = std::max(worst, std::fabs(gamma_ab(a, b).value - gamma_ab_quad(a, b).value));
    return within("gamma closed form vs quadrature", worst, 1e-9);
  });
  guarded(out, "two-point identity", [] {
    double worst = 0;
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> U(0.0, 2.0);
    for (int i = 0; i < 50; ++i) {
      const double V = U(rng);
      worst = std::max(worst, std::fabs(gamma_ab(0, V / 2).value + gamma_ab(1 - V / 2, 1).value));
    }
    return within("two-point identity", worst, 1e-10);
  });
  guarded(out, "gamma(0,1/4) + 3 gamma(1/2,3/4) = 1/4 log 2", [] {
    const double lhs = gamma_ab(0, 0.25).value + 3 * gamma_ab(0.5, 0.75).value;
    return within("gamma(0,1/4) + 3 gamma(1/2,3/4) = 1/4 log 2", lhs - 0.25 * std::log(2.0), 1e-10);
  });
  return out;
}

WeightVector random_semistable(std::mt19937_64& rng, int sign) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (;;) {
    const WeightVector w{{U(rng), U(rng), U(rng)}};
    const double V = w.V();
    if (k_semistable(w) && V * sign > 1e-3) return w;
  }
}

std::vector<Check> concavity() {
  std::vector<Check> out;
  guarded(out, "midpoint concavity, 100 segments", [] {
    std::mt19937_64 rng(0xc0ffee);
    double worst = -INFINITY;
    long bad = 0;
    for (int i = 0; i < 100; ++i) {
      const int sign = i % 2 == 0 ? 1 : -1;
      const WeightVector a = random_semistable(rng, sign), b = random_semistable(rng, sign);
      WeightVector mid;
      for (int k = 0; k < 3; ++k) mid.w[k] = 0.5 * (a.w[k] + b.w[k]);
      const double gap = 0.5 * (h_can_signed(a).value + h_can_signed(b).value) - h_can_signed(mid).value;
      worst = std::max(worst, gap);
      if (gap > 1e-9) ++bad;
    }
    return Check{"midpoint concavity, 100 segments", bad == 0,
                 std::to_string(bad) + " violations, max chord excess " + sci(worst)};
  });
  return out;
}

struct Spec {
  const char* title;
  double limit;
  std::vector<Check> (*run)();
};

const Spec kSpecs[kCriterionCount] = {
    {"Petersson closed-form rows", 5, table1},
    {"Fano closed-form rows", 2, table2},
    {"Shimura h(p)", 1, shimura},
    {"sharp bounds", 30, sharp_bounds},
    {"period convergence", 10, period_convergence},
    {"small-N oracle", 120, small_n_oracle},
    {"Faltings log-CY", 60, faltings},
    {"Fermat/Arakelov", 5, fermat},
    {"special-function properties", 10, specfun_suite},
    {"concavity", 5, concavity},
};

}  // namespace

bool CriterionReport::pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CriterionReport run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw DomainError("criterion must be in 1.." + std::to_string(kCriterionCount));
  const Spec& s = kSpecs[id - 1];
  CriterionReport r;
  r.id = id;
  r.title = s.title;
  r.time_limit = s.limit;
  const auto t0 = std::chrono::steady_clock::now();
  r.checks = s.run();
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"tables",   "shimura", "bounds", "periods",   "oracle", "faltings",
                                                 "fermat",   "specfun", "concavity", "fast",   "all"};
  return names;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "tables") return {1, 2};
  if (suite == "shimura") return {3};
  if (suite == "bounds") return {4};
  if (suite == "periods") return {5};
  if (suite == "oracle") return {6};
  if (suite == "faltings") return {7};
  if (suite == "fermat") return {8};
  if (suite == "specfun") return {9};
  if (suite == "concavity") return {10};
  if (suite == "fast") return {1, 2, 3, 4, 5, 7, 8, 9, 10};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  throw DomainError("unknown suite '" + suite + "'");
}

}  // namespace arh::verify
