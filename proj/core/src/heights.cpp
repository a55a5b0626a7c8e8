#include <arh/heights.hpp>
#include <arh/plane_quad.hpp>
#include <arh/specfun.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace arh {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

EvalResult gam(double a, double b) { return gamma_ab(clamp01(a), clamp01(b)); }

std::string describe(const WeightVector& w) {
  std::ostringstream os;
  os.precision(12);
  os << "(" << w.w[0] << "," << w.w[1] << "," << w.w[2] << ")";
  return os.str();
}

}  // namespace

Rational ram_weight(long m) {
  if (m == RamIndices::kInfinity) return 1;
  if (m < 1) throw DomainError("ramification index must be >= 1 or infinity");
  return Rational(m - 1, m);
}

WeightVector RamIndices::weights() const {
  WeightVector out;
  for (int i = 0; i < 3; ++i) out.w[i] = rational_to_double(ram_weight(m[i]));
  return out;
}

std::array<Rational, 3> RamIndices::exact_weights() const {
  return {ram_weight(m[0]), ram_weight(m[1]), ram_weight(m[2])};
}

std::string RamIndices::to_string() const {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    if (i) s += ",";
    s += m[i] == kInfinity ? std::string("inf") : std::to_string(m[i]);
  }
  return s + ")";
}

namespace {

std::array<std::string, 3> split3(const std::string& text, const char* what) {
  std::array<std::string, 3> parts;
  std::stringstream ss(text);
  std::string item;
  int n = 0;
  while (std::getline(ss, item, ',')) {
    if (n >= 3) throw DomainError(std::string(what) + ": expected exactly three comma-separated values");
    parts[n++] = item;
  }
  if (n != 3) throw DomainError(std::string(what) + ": expected exactly three comma-separated values");
  return parts;
}

}  // namespace

RamIndices parse_ram_indices(const std::string& text) {
  RamIndices r;
  auto parts = split3(text, "ramification indices");
  for (int i = 0; i < 3; ++i) {
    const auto& p = parts[i];
    if (p == "inf" || p == "infinity" || p == "oo") {
      r.m[i] = RamIndices::kInfinity;
      continue;
    }
    try {
      std::size_t used = 0;
      long v = std::stol(p, &used);
      if (used != p.size() || v < 1) throw DomainError("");
      r.m[i] = v;
    } catch (const std::exception&) {
      throw DomainError("ramification index '" + p + "' is not a positive integer or inf");
    }
  }
  return r;
}

WeightVector parse_weights(const std::string& text) {
  WeightVector w;
  auto parts = split3(text, "weights");
  for (int i = 0; i < 3; ++i) {
    try {
      std::size_t used = 0;
      const auto& p = parts[i];
      if (p.find('/') != std::string::npos) {
        w.w[i] = rational_to_double(parse_rational(p));
        continue;
      }
      w.w[i] = std::stod(p, &used);
      if (used != p.size()) throw DomainError("");
    } catch (const std::exception&) {
      throw DomainError("weight '" + parts[i] + "' is not a number");
    }
  }
  return w;
}

double volume(const WeightVector& w) { return w.V(); }

bool in_box(const WeightVector& w) {
  return std::all_of(w.w.begin(), w.w.end(), [](double x) {
    return std::isfinite(x) && x >= -kWeightTol && x <= 1.0 + kWeightTol;
  });
}

bool k_semistable(const WeightVector& w) {
  if (!in_box(w)) return false;
  const double bound = w.V() / 2.0 + 1.0;
  return std::all_of(w.w.begin(), w.w.end(), [bound](double x) { return x <= bound + kWeightTol; });
}

void require_semistable(const WeightVector& w) {
  if (!in_box(w)) throw DomainError("weights " + describe(w) + " violate 0 <= w_i <= 1");
  const double bound = w.V() / 2.0 + 1.0;
  for (int i = 0; i < 3; ++i)
    if (w.w[i] > bound + kWeightTol)
      throw DomainError("weights " + describe(w) + " violate w_i <= V/2 + 1 at i = " + std::to_string(i));
}

EvalResult h_can_positive(const WeightVector& w) {
  require_semistable(w);
  const double V = w.V();
  if (!(V > 0.0)) throw DomainError("h_can_positive requires V > 0, got V = " + std::to_string(V));
  EvalResult bracket = gam(0.0, V / 2.0);
  for (double wi : w.w) bracket -= gam(wi - V / 2.0, wi);
  EvalResult out{0.5 * (1.0 - std::log(kPi * V / 2.0)), 2.0 * kEps};
  out -= (1.0 / V) * bracket;
  out.err += 4.0 * kEps * std::fabs(out.value);
  return out;
}

EvalResult h_can_fano(const WeightVector& w) {
  require_semistable(w);
  const double V = w.V();
  if (!(V < 0.0)) throw DomainError("h_can_fano requires V < 0, got V = " + std::to_string(V));
  EvalResult bracket = gam(0.0, -V / 2.0);
  for (double wi : w.w) bracket += gam(wi, wi - V / 2.0);
  EvalResult out{0.5 * (1.0 + std::log(kPi / (-V / 2.0))), 2.0 * kEps};
  out += (1.0 / V) * bracket;
  out.err += 4.0 * kEps * std::fabs(out.value);
  return out;
}

EvalResult h_can_signed(const WeightVector& w) {
  const double V = w.V();
  if (V > 0.0) return h_can_positive(w);
  if (V < 0.0) return -h_can_fano(w);
  throw DomainError("V = 0 is the log Calabi-Yau wall; use faltings_logCY");
}

EvalResult h_pet(const WeightVector& w) {
  auto h = h_can_positive(w);
  h.value += 0.5 * std::log(kPi * w.V() / 2.0);
  return h;
}

EvalResult h_pi_normalized(const WeightVector& w) {
  const double V = w.V();
  if (V > 0.0) {
    auto h = h_can_positive(w);
    h.value += 0.5 * std::log(kPi);
    return h;
  }
  if (V < 0.0) {
    auto h = h_can_fano(w);
    h.value -= 0.5 * std::log(kPi);
    return h;
  }
  throw DomainError("V = 0 is the log Calabi-Yau wall; use faltings_logCY");
}

EvalResult four_point_h_can(double w0, double w1, double winf) {
  WeightVector reduced{{1.0 + (w0 - 1.0) / 2.0, w1, 1.0 + (winf - 1.0) / 2.0}};
  auto h = h_can_positive(reduced);
  h.value += 0.5 * std::log(2.0);
  return h;
}

double shift_coefficient(const WeightVector& w) { return w.sum() / 2.0 - (w.w[0] + w.w[1]); }

double shift_by_a(double h, const WeightVector& w, long a) {
  if (a < 1) throw DomainError("shift_by_a requires a >= 1");
  return h - shift_coefficient(w) * std::log(static_cast<double>(a));
}

double fujita_height_pn(int n) {
  if (n < 1) throw DomainError("fujita_height_pn requires n >= 1");
  double harmonic = 0.0;
  for (int k = 1; k <= n; ++k) harmonic += 1.0 / k;
  const double logfact = log_gamma(n + 1.0).value;
  return 0.5 * std::pow(n + 1.0, n + 1.0) *
         ((n + 1.0) * harmonic - n + n * std::log(kPi) - logfact);
}

EvalResult faltings_logCY(const WeightVector& w) {
  if (!in_box(w)) throw DomainError("weights " + describe(w) + " violate 0 <= w_i <= 1");
  if (std::fabs(w.V()) > 1e-9) throw DomainError("faltings_logCY requires V = 0");
  for (double wi : w.w)
    if (wi >= 1.0 - kWeightTol)
      throw DivergenceError("faltings_logCY: pair is not klt (a weight equals 1); the height is +infinity");
  const double w0 = w.w[0], w1 = w.w[1];
  auto g = [w0, w1](const PlanePoint& x) {
    return std::pow(x.dist(0.0), -2.0 * w0) * std::pow(x.dist(1.0), -2.0 * w1);
  };
  const std::vector<PlaneSingularity> pts{{0.0, -2.0 * w0}, {1.0, -2.0 * w1}};
  PlaneQuadOptions fine;
  fine.n_theta = 96;
  PlaneQuadOptions coarse = fine;
  coarse.n_theta = 48;
  auto I = integrate_plane(g, pts, -2.0 * (w0 + w1), fine);
  auto Ic = integrate_plane(g, pts, -2.0 * (w0 + w1), coarse);
  const double err = (I.err + std::fabs(I.value - Ic.value)) / (2.0 * I.value);
  return {-0.5 * std::log(I.value), err + kEps};
}

double sharp_bound() { return -0.5 * (1.0 + std::log(kPi)); }

double semiample_sharp_bound() {
  return -0.5 * std::log(kPi) + 1.5 * (log_gamma(2.0 / 3.0).value - log_gamma(1.0 / 3.0).value);
}

double fano_linear_slope() { return 0.25 * (1.0 + std::log(0.75)); }

double bound_linear_fano(const WeightVector& w) {
  return 0.5 * (1.0 + std::log(kPi)) + fano_linear_slope() * w.sum();
}

double semiample_slope(bool literal_typo) {
  const double euler = -digamma(1.0).value;
  const double p23 = digamma(2.0 / 3.0).value;
  double p13 = digamma(1.0 / 3.0).value;
  // printed variant: Gamma'(1/3)/Gamma(2/3) = psi(1/3) Gamma(1/3)/Gamma(2/3)
  if (literal_typo) p13 *= std::exp(log_gamma(1.0 / 3.0).value - log_gamma(2.0 / 3.0).value);
  return 0.75 * (euler + 0.5 * (p23 + p13));
}

double bound_semiample(const WeightVector& w, bool literal_typo) {
  return semiample_sharp_bound() + semiample_slope(literal_typo) * w.V();
}

double two_point_fano(double V) {
  return 0.5 * (1.0 + std::log(kPi) - std::log(std::fabs(V) / 2.0));
}

}  // namespace arh
