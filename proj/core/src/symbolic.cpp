#include <arh/specfun.hpp>
#include <arh/symbolic.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"

namespace arh {

namespace {

template <class K>
void add_into(std::map<K, Rational>& dst, const std::map<K, Rational>& src, const Rational& scale) {
  for (const auto& [k, v] : src) {
    Rational nv = dst[k] + scale * v;
    if (nv == 0)
      dst.erase(k);
    else
      dst[k] = nv;
  }
}

template <class K>
void drop_zeros(std::map<K, Rational>& m) {
  std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
}

nlohmann::json rational_json(const Rational& r) {
  const Integer n = boost::multiprecision::numerator(r);
  const Integer d = boost::multiprecision::denominator(r);
  auto enc = [](const Integer& v) -> nlohmann::json {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
      return v.convert_to<long long>();
    return v.str();
  };
  return nlohmann::json::array({enc(n), enc(d)});
}

Rational rational_from_json(const nlohmann::json& j) {
  auto dec = [](const nlohmann::json& v) -> Integer {
    if (v.is_number_integer()) return Integer(v.get<long long>());
    if (v.is_string()) return Integer(v.get<std::string>());
    throw DomainError("LogCombo JSON: rational entries must be integers or integer strings");
  };
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (!j.is_array() || j.size() != 2) throw DomainError("LogCombo JSON: rational must be [n, d]");
  Integer d = dec(j[1]);
  if (d == 0) throw DomainError("LogCombo JSON: zero denominator");
  return Rational(dec(j[0]), d);
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  const Integer d = boost::multiprecision::denominator(r);
  if (d == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + d.str();
}

Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer d(text.substr(slash + 1));
    if (d == 0) throw DomainError("rational with zero denominator: " + text);
    return Rational(Integer(text.substr(0, slash)), d);
  } catch (const std::runtime_error&) {
    throw DomainError("not a rational: '" + text + "'");
  }
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

LogCombo LogCombo::rational(const Rational& r) {
  LogCombo c;
  c.q0 = r;
  return c;
}

LogCombo LogCombo::log_prime(long p, const Rational& c) {
  if (p < 2) throw DomainError("log term index must be a prime >= 2");
  LogCombo out;
  if (c != 0) out.logs[p] = c;
  return out;
}

LogCombo LogCombo::log_pi(const Rational& c) {
  LogCombo out;
  out.logpi = c;
  return out;
}

LogCombo LogCombo::zeta_term(const std::string& field_id, const Rational& c) {
  LogCombo out;
  if (c != 0) out.zeta[field_id] = c;
  return out;
}

LogCombo LogCombo::named_term(const std::string& name, const Rational& c) {
  LogCombo out;
  if (c != 0) out.named[name] = c;
  return out;
}

bool LogCombo::is_zero() const {
  return q0 == 0 && logpi == 0 && logs.empty() && zeta.empty() && named.empty();
}

std::map<long, long> factor_integer(long n) {
  if (n < 1) throw DomainError("factor_integer: argument must be positive");
  std::map<long, long> out;
  for (long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  if (n > 1) ++out[n];
  return out;
}

LogCombo log_integer(long n, const Rational& c) {
  LogCombo out;
  if (c == 0) return out;
  for (const auto& [p, e] : factor_integer(n)) out.logs[p] = c * e;
  return out;
}

LogCombo lc_add(const LogCombo& a, const LogCombo& b) {
  LogCombo out = a;
  out.q0 += b.q0;
  out.logpi += b.logpi;
  add_into(out.logs, b.logs, 1);
  add_into(out.zeta, b.zeta, 1);
  add_into(out.named, b.named, 1);
  return out;
}

LogCombo lc_scale(const LogCombo& a, const Rational& r) {
  if (r == 0) return {};
  LogCombo out;
  out.q0 = a.q0 * r;
  out.logpi = a.logpi * r;
  add_into(out.logs, a.logs, r);
  add_into(out.zeta, a.zeta, r);
  add_into(out.named, a.named, r);
  return out;
}

const ConstantRegistry& ConstantRegistry::standard() {
  static const ConstantRegistry reg = [] {
    ConstantRegistry r;
    r.add_constant("logGammaRatio23", [] { return log_gamma(2.0 / 3.0) - log_gamma(1.0 / 3.0); });
    r.add_constant("EulerGamma", [] { return -digamma(1.0); });
    for (const auto& f : builtin_fields()) r.add_field(f);
    return r;
  }();
  return reg;
}

void ConstantRegistry::add_constant(const std::string& name, Evaluator fn) {
  constants_[name] = std::move(fn);
}

void ConstantRegistry::add_field(const FieldSpec& field) {
  validate_field(field);
  fields_[field.id] = field;
}

EvalResult ConstantRegistry::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw DomainError("unregistered named constant '" + name + "'");
  return it->second();
}

const FieldSpec& ConstantRegistry::field(const std::string& id) const {
  auto it = fields_.find(id);
  if (it == fields_.end()) throw DomainError("unregistered field '" + id + "'");
  return it->second;
}

EvalResult lc_eval(const LogCombo& a, const ConstantRegistry& reg) {
  EvalResult out{rational_to_double(a.q0), 0.0};
  auto term = [&out](const Rational& c, EvalResult v) {
    const double cd = rational_to_double(c);
    out += cd * v;
    out.err += kEps * std::fabs(cd * v.value);
  };
  if (a.logpi != 0) term(a.logpi, {std::log(std::numbers::pi), kEps});
  for (const auto& [p, c] : a.logs) term(c, {std::log(static_cast<double>(p)), kEps * std::log(p + 1.0)});
  for (const auto& [id, c] : a.zeta) {
    const auto& field = reg.field(id);
    auto d = dedekind_log_deriv(field);
    term(c, {d.value / field.degree(), d.err / field.degree()});
  }
  for (const auto& [name, c] : a.named) term(c, reg.constant(name));
  out.err += 2.0 * kEps * std::fabs(out.value);
  return out;
}

std::optional<Rational> rationalize(double x, long max_den, double tol) {
  if (max_den < 1) throw DomainError("rationalize: max_den must be >= 1");
  if (!std::isfinite(x)) return std::nullopt;
  // convergents h/k with the semiconvergent step at the denominator bound
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double af = std::floor(r);
    if (std::fabs(af) > 9e15) break;
    const long long a = static_cast<long long>(af);
    const long long k2 = a * k1 + k0;
    if (k2 > max_den) {
      const long long t = (max_den - k0) / k1;
      const long long hs = t * h1 + h0, ks = t * k1 + k0;
      if (t > 0 && std::fabs(x - static_cast<double>(hs) / static_cast<double>(ks)) <
                       std::fabs(x - static_cast<double>(h1) / static_cast<double>(k1))) {
        h1 = hs;
        k1 = ks;
      }
      break;
    }
    const long long h2 = a * h1 + h0;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = r - af;
    if (std::fabs(x - static_cast<double>(h1) / static_cast<double>(k1)) <=
            4.0 * kEps * std::max(1.0, std::fabs(x)) ||
        frac == 0.0)
      break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return std::nullopt;
  const Rational q{Integer{h1}, Integer{k1}};
  if (std::fabs(x - rational_to_double(q)) > tol) return std::nullopt;
  return q;
}

std::string lc_to_json(const LogCombo& a) {
  nlohmann::json j;
  j["q0"] = rational_json(a.q0);
  j["logpi"] = rational_json(a.logpi);
  j["logs"] = nlohmann::json::object();
  for (const auto& [p, c] : a.logs) j["logs"][std::to_string(p)] = rational_json(c);
  j["zeta"] = nlohmann::json::object();
  for (const auto& [id, c] : a.zeta) j["zeta"][id] = rational_json(c);
  j["named"] = nlohmann::json::object();
  for (const auto& [n, c] : a.named) j["named"][n] = rational_json(c);
  return j.dump();
}

LogCombo lc_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("LogCombo JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("LogCombo JSON: expected an object");
  LogCombo a;
  if (j.contains("q0")) a.q0 = rational_from_json(j["q0"]);
  if (j.contains("logpi")) a.logpi = rational_from_json(j["logpi"]);
  if (j.contains("logs"))
    for (const auto& [k, v] : j["logs"].items()) {
      long p = 0;
      try {
        p = std::stol(k);
      } catch (const std::exception&) {
        throw DomainError("LogCombo JSON: log key '" + k + "' is not an integer");
      }
      if (p < 2) throw DomainError("LogCombo JSON: log key must be a prime >= 2");
      a.logs[p] = rational_from_json(v);
    }
  if (j.contains("zeta"))
    for (const auto& [k, v] : j["zeta"].items()) a.zeta[k] = rational_from_json(v);
  if (j.contains("named"))
    for (const auto& [k, v] : j["named"].items()) a.named[k] = rational_from_json(v);
  drop_zeros(a.logs);
  drop_zeros(a.zeta);
  drop_zeros(a.named);
  return a;
}

std::string lc_to_string(const LogCombo& a) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& sym) {
    if (c == 0) return;
    Rational m = c < 0 ? Rational(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (sym.empty())
      os << rational_to_string(m);
    else if (m == 1)
      os << sym;
    else
      os << rational_to_string(m) << " " << sym;
  };
  emit(a.q0, "");
  emit(a.logpi, "log pi");
  for (const auto& [p, c] : a.logs) emit(c, "log " + std::to_string(p));
  for (const auto& [id, c] : a.zeta) emit(c, "D(" + id + ")");
  for (const auto& [n, c] : a.named) emit(c, n);
  if (first) os << "0";
  return os.str();
}

}  // namespace arh
