#include <arh/shimura.hpp>

#include <arh/specfun.hpp>

#include <cmath>
#include <numbers>

#include <json.hpp>

namespace arh {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& shimura_fixture_texts();
}

namespace {

LogCombo logs2_3(const Rational& c2, const Rational& c3) {
  return LogCombo::log_prime(2, c2) + LogCombo::log_prime(3, c3);
}

RamIndices ri(long a, long b, long c) { return RamIndices{{a, b, c}}; }

Rational json_rational(const nlohmann::json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw DomainError(std::string("Shimura case: ") + what + " must be a rational string");
}

long parse_index(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo") return RamIndices::kInfinity;
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 1) throw DomainError("Shimura case: bad ramification index '" + s + "'");
  return v;
}

std::string index_string(long m) { return m == RamIndices::kInfinity ? "inf" : std::to_string(m); }

std::string ram_string(const RamIndices& r) {
  return index_string(r.m[0]) + "," + index_string(r.m[1]) + "," + index_string(r.m[2]);
}

}  // namespace

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {ri(2, 3, RamIndices::kInfinity), "Q", logs2_3(Rational(-1, 2), Rational(-1, 4))},
      {ri(6, 2, 6), "Q", logs2_3(Rational(-1, 6), Rational(1, 8))},
      {ri(4, 4, 4), "Qsqrt2", LogCombo::log_prime(2, Rational(-19, 12))},
      {ri(3, 3, 6), "Qsqrt3", logs2_3(Rational(-5, 6), Rational(-13, 16))},
      {ri(2, 4, 12), "Qsqrt3", logs2_3(Rational(-5, 3), Rational(-7, 16))},
      {ri(6, 6, 6), "Qsqrt3", logs2_3(Rational(-5, 6), Rational(-7, 16))},
      {ri(5, 5, 5), "Qsqrt5", LogCombo::log_prime(5, Rational(25, 48))},
      {ri(3, 4, 6), "Qsqrt6", logs2_3(Rational(-11, 12), Rational(-9, 16))},
      {ri(7, 7, 7), "Qcos7", LogCombo::log_prime(7, Rational(-95, 144))},
      {ri(9, 9, 9), "Qcos9", LogCombo::log_prime(3, Rational(-31, 24))},
  };
  return rows;
}

const std::vector<Table2Row>& table2_rows() {
  static const std::vector<Table2Row> rows = {
      {ri(2, 2, 3), logs2_3(Rational(-1, 6), Rational(2, 3))},
      {ri(2, 2, 4), LogCombo::log_prime(2, Rational(3, 4))},
      {ri(2, 3, 3), logs2_3(Rational(1, 2), Rational(1, 8))},
      {ri(2, 3, 4), logs2_3(Rational(7, 12), Rational(1, 8))},
  };
  return rows;
}

LogCombo table1_pet_closed_form(const Table1Row& row) {
  return row.constant - LogCombo::rational(Rational(1, 2)) - LogCombo::zeta_term(row.field_id);
}

double table1_residual(const Table1Row& row) {
  const double closed = lc_eval(table1_pet_closed_form(row)).value;
  return closed - h_pet(row.indices.weights()).value;
}

double table2_residual(const Table2Row& row) {
  const double closed = lc_eval(row.value).value;
  const double computed = h_can_fano(row.indices.weights()).value - 0.5 * (1.0 + std::log(std::numbers::pi));
  return closed - computed;
}

Rational orbifold_degree(const std::vector<long>& indices) {
  Rational s = -2;
  for (long m : indices) s += ram_weight(m);
  return s;
}

Rational orbifold_degree(const RamIndices& m) {
  return orbifold_degree(std::vector<long>(m.m.begin(), m.m.end()));
}

void validate_case(const ShimuraCase& c) {
  if (c.id.empty()) throw DomainError("Shimura case: empty id");
  validate_field(c.field);
  if (c.k_degree <= 0) throw DomainError("Shimura case " + c.id + ": k_degree must be positive");
  for (const auto& r : c.ramified) {
    if (r.norm < 2 || r.prime < 2) throw DomainError("Shimura case " + c.id + ": residue norm must be >= 2");
    long n = r.norm;
    while (n % r.prime == 0) n /= r.prime;
    if (n != 1) throw DomainError("Shimura case " + c.id + ": norm is not a power of its prime");
  }
  for (const auto& [id, coef] : c.optimal.pet_closed_form.zeta)
    if (id != c.field.id)
      throw DomainError("Shimura case " + c.id + ": closed form carries a zeta term of " + id +
                        " but the field is " + c.field.id);
}

ShimuraCase case_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("Shimura case JSON: ") + e.what());
  }
  ShimuraCase c;
  try {
    c.id = j.at("id").get<std::string>();
    c.description = j.value("description", std::string());
    const auto& f = j.at("field");
    c.field = f.is_string() ? builtin_field(f.get<std::string>()) : field_from_json(f.dump());
    for (const auto& r : j.value("ramified", nlohmann::json::array()))
      c.ramified.push_back({r.at("norm").get<long>(), r.at("prime").get<long>()});
    for (const auto& m : j.value("orbifold_indices", nlohmann::json::array()))
      c.orbifold_indices.push_back(parse_index(m.get<std::string>()));
    const auto& o = j.at("optimal");
    c.optimal.ram_indices = parse_ram_indices(o.at("ram_indices").get<std::string>());
    if (o.contains("four_point")) c.optimal.four_point = parse_ram_indices(o["four_point"].get<std::string>());
    if (o.contains("shift_a")) c.optimal.shift_a = o["shift_a"].get<long>();
    c.optimal.pet_closed_form = lc_from_json(o.at("pet_closed_form").dump());
    if (o.contains("correction")) c.optimal.correction = lc_from_json(o["correction"].dump());
    c.k_degree = json_rational(j.at("k_degree"), "k_degree");
    if (j.contains("expected_h"))
      for (const auto& [p, v] : j["expected_h"].items()) c.expected_h[std::stol(p)] = json_rational(v, "expected_h");
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("Shimura case JSON: " + std::string(e.what()));
  }
  validate_case(c);
  return c;
}

std::string case_to_json(const ShimuraCase& c) {
  nlohmann::json j;
  j["id"] = c.id;
  if (!c.description.empty()) j["description"] = c.description;
  j["field"] = c.field.id;
  j["ramified"] = nlohmann::json::array();
  for (const auto& r : c.ramified) j["ramified"].push_back({{"norm", r.norm}, {"prime", r.prime}});
  j["orbifold_indices"] = nlohmann::json::array();
  for (long m : c.orbifold_indices) j["orbifold_indices"].push_back(index_string(m));
  auto& o = j["optimal"];
  o["ram_indices"] = ram_string(c.optimal.ram_indices);
  if (c.optimal.four_point) o["four_point"] = ram_string(*c.optimal.four_point);
  if (c.optimal.shift_a) o["shift_a"] = *c.optimal.shift_a;
  o["pet_closed_form"] = nlohmann::json::parse(lc_to_json(c.optimal.pet_closed_form));
  o["correction"] = nlohmann::json::parse(lc_to_json(c.optimal.correction));
  j["k_degree"] = rational_to_string(c.k_degree);
  j["expected_h"] = nlohmann::json::object();
  for (const auto& [p, h] : c.expected_h) j["expected_h"][std::to_string(p)] = rational_to_string(h);
  return j.dump(2);
}

const std::vector<ShimuraCase>& builtin_cases() {
  static const std::vector<ShimuraCase> cases = [] {
    std::vector<ShimuraCase> out;
    for (const auto& [stem, text] : detail::shimura_fixture_texts()) out.push_back(case_from_json(std::string(text)));
    return out;
  }();
  return cases;
}

const ShimuraCase& builtin_case(const std::string& id) {
  for (const auto& c : builtin_cases())
    if (c.id == id) return c;
  std::string known;
  for (const auto& c : builtin_cases()) known += (known.empty() ? "" : ", ") + c.id;
  throw DomainError("unknown Shimura case '" + id + "' (known: " + known + ")");
}

LogCombo yuan_height(const ShimuraCase& c) {
  const Rational deg = c.field.degree();
  LogCombo out = LogCombo::rational(Rational(-1, 2)) - LogCombo::zeta_term(c.field.id);
  for (const auto& r : c.ramified) {
    const Rational weight = Rational(3 * r.norm - 1, 4 * (r.norm - 1)) / deg;
    // log N(p) = f log p
    long f = 0;
    for (long n = r.norm; n > 1; n /= r.prime) ++f;
    out = out + LogCombo::log_prime(r.prime, weight * f);
  }
  return out;
}

LogCombo optimal_pet_height(const ShimuraCase& c) { return c.optimal.pet_closed_form + c.optimal.correction; }

LogCombo shifted_pet_height(const ShimuraCase& c) {
  LogCombo out = optimal_pet_height(c);
  if (!c.optimal.shift_a) return out;
  const auto w = c.optimal.ram_indices.exact_weights();
  const Rational bracket = (w[0] + w[1] + w[2]) / 2 - (w[0] + w[1]);
  return out + log_integer(*c.optimal.shift_a, -bracket);
}

HpResult h_p_analysis(const ShimuraCase& c) {
  HpResult r;
  r.difference = yuan_height(c) - optimal_pet_height(c);
  if (!r.difference.zeta.empty() || !r.difference.named.empty() || r.difference.q0 != 0 || r.difference.logpi != 0)
    throw NonCancellationError("Shimura case " + c.id + ": height difference is not a sum of log p terms: " +
                               lc_to_string(r.difference));
  for (const auto& [p, coef] : r.difference.logs) {
    r.h_hat[p] = coef;
    r.h[p] = coef * 2 * c.k_degree;
  }
  return r;
}

std::map<long, Rational> h_p_map(const ShimuraCase& c) { return h_p_analysis(c).h; }

}  // namespace arh
