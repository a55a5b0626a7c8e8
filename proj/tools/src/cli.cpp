#include <arh/cli.hpp>

#include <arh/fermat.hpp>
#include <arh/heights.hpp>
#include <arh/periods.hpp>
#include <arh/shimura.hpp>
#include <arh/specfun.hpp>
#include <arh/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <sstream>

namespace arh::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v.get<double>());
    return buf;
  }
  return v.dump();
}

std::string csv_cell(const Json& v) {
  std::string s = cell(v);
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

// Arrays of flat objects become tables; a single object becomes one row.
void emit(std::ostream& out, const Json& doc, Format fmt) {
  if (fmt == Format::json) {
    out << doc.dump(2) << "\n";
    return;
  }
  const Json rows = doc.is_array() ? doc : Json::array({doc});
  std::vector<std::string> cols;
  for (const auto& r : rows)
    for (const auto& [k, v] : r.items())
      if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
  if (fmt == Format::csv) {
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << (r.contains(cols[i]) ? csv_cell(r[cols[i]]) : "");
      out << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(cols.size());
  std::vector<std::vector<std::string>> text;
  for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      line.push_back(r.contains(cols[i]) ? cell(r[cols[i]]) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    text.push_back(std::move(line));
  }
  auto print_line = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << "\n";
  };
  print_line(cols);
  for (const auto& line : text) print_line(line);
}

Json weights_json(const WeightVector& w) { return Json::array({w.w[0], w.w[1], w.w[2]}); }

Json rational_map(const std::map<long, Rational>& m) {
  Json j = Json::object();
  for (const auto& [p, v] : m) j[std::to_string(p)] = rational_to_string(v);
  return j;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw DomainError("'" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty integer list");
  return out;
}

WeightVector weights_from(const std::string& weights, const std::string& ram) {
  if (!weights.empty() && !ram.empty()) throw DomainError("give either --weights or --ram, not both");
  if (weights.empty() && ram.empty()) throw DomainError("one of --weights or --ram is required");
  return weights.empty() ? parse_ram_indices(ram).weights() : parse_weights(weights);
}

const char* kFooter = R"(CSV columns:
  height:   weights,V,kind,polarity,value,err
  table1:   indices,field,constant,closed_form,computed,residual,pass
  table2:   indices,value_form,closed_form,computed,residual,pass
  shimura:  case,p,h,h_hat
  fermat:   m,genus,h_can,eps,gap,bound_first,bound_second
  periods:  N,estimate,gap[,oracle,oracle_err,df_Z]
  verify:   criterion,title,check,pass,detail,seconds
Environment:
  ARH_WORKERS  default worker count for period sums and Monte Carlo
Exit codes: 0 success, 1 usage or domain error, 2 verification failure.)";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical heights of log pairs on the arithmetic projective line", "arh"};
  app.footer(kFooter);
  app.require_subcommand(1);

  std::string format_name = "json";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  int workers = 0;
  app.add_option("--workers", workers, "Worker-count hint (0: $ARH_WORKERS or all cores)");

  // specfun
  auto* sf = app.add_subcommand("specfun", "Evaluate one special-function kernel");
  std::string fn;
  double s_arg = -1.0, x_arg = 0.5, a_arg = 0.0, b_arg = 1.0;
  std::string field_id = "Q";
  sf->add_option("--fn", fn, "Kernel")
      ->required()
      ->check(CLI::IsMember({"lgamma", "digamma", "hurwitz", "hurwitz_ds", "F", "gamma", "gamma_quad", "log_l",
                             "bernoulli2", "dedekind"}));
  sf->add_option("--s", s_arg, "Hurwitz s")->capture_default_str();
  sf->add_option("--x", x_arg, "Argument x")->capture_default_str();
  sf->add_option("--a", a_arg, "Lower end for gamma")->capture_default_str();
  sf->add_option("--b", b_arg, "Upper end for gamma")->capture_default_str();
  sf->add_option("--field", field_id, "Field id for dedekind")->capture_default_str();

  // height
  auto* hc = app.add_subcommand("height", "Closed-form height of (P^1, D)");
  std::string weights, ram, kind = "can";
  hc->add_option("--weights", weights, "Weights at 0,1,inf, e.g. 0.5,2/3,1");
  hc->add_option("--ram", ram, "Ramification indices, e.g. 2,3,inf");
  hc->add_option("--kind", kind, "can, pet or pi")->check(CLI::IsMember({"can", "pet", "pi"}))->capture_default_str();

  auto* t1 = app.add_subcommand("table1", "Petersson closed forms against computed values");
  auto* t2 = app.add_subcommand("table2", "Fano closed forms against computed values");

  auto* sh = app.add_subcommand("shimura", "Local invariants h(p) of the shipped Shimura curves");
  std::string case_id = "all";
  sh->add_option("--case", case_id, "modular, disc6, Qsqrt3, Qsqrt6 or all")->capture_default_str();

  auto* fe = app.add_subcommand("fermat", "Twisted Fermat heights and Arakelov bounds");
  std::string m_list = "4", a_text = "-1,1,1";
  fe->add_option("--m", m_list, "Degree or comma list of degrees")->capture_default_str();
  fe->add_option("--a", a_text, "Twist coefficients a0,a1,a2")->capture_default_str();

  auto* pe = app.add_subcommand("periods", "Period-limit estimates -(1/2N) log Z_N");
  std::string p_weights, N_list = "100,1000,10000", oracle = "none";
  std::uint64_t seed = OracleBudget{}.seed;
  long samples = OracleBudget{}.samples;
  pe->add_option("--weights", p_weights, "Weights at 0,1,inf")->required();
  pe->add_option("--N-list", N_list, "Comma list of N")->capture_default_str();
  pe->add_option("--seed", seed, "Monte Carlo seed")->capture_default_str();
  pe->add_option("--oracle", oracle, "Direct-integration check at N = 2 or 3")
      ->check(CLI::IsMember({"none", "quadrature", "mc"}))
      ->capture_default_str();
  pe->add_option("--samples", samples, "Monte Carlo samples")->capture_default_str();

  auto* fa = app.add_subcommand("faltings", "Faltings height of a log Calabi-Yau pair (V = 0)");
  std::string f_weights;
  fa->add_option("--weights", f_weights, "Weights at 0,1,inf summing to 2")->required();

  auto* ve = app.add_subcommand("verify", "Run a verification suite");
  std::string suite = "fast";
  ve->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(verify::suite_names()))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kDomainError;
  }

  const Format fmt = format_name == "csv" ? Format::csv : format_name == "text" ? Format::text : Format::json;
  const int nworkers = resolve_workers(workers);

  try {
    if (*sf) {
      EvalResult r;
      if (fn == "lgamma") r = log_gamma(x_arg);
      else if (fn == "digamma") r = digamma(x_arg);
      else if (fn == "hurwitz") r = hurwitz_zeta(s_arg, x_arg);
      else if (fn == "hurwitz_ds") r = hurwitz_zeta_ds(s_arg, x_arg);
      else if (fn == "F") r = F(x_arg);
      else if (fn == "gamma") r = gamma_ab(a_arg, b_arg);
      else if (fn == "gamma_quad") r = gamma_ab_quad(a_arg, b_arg);
      else if (fn == "bernoulli2") r = {bernoulli2(x_arg), 0.0};
      else if (fn == "dedekind") r = dedekind_log_deriv(builtin_field(field_id));
      else {
        const SignedLog l = log_l(x_arg);
        Json j{{"fn", fn}, {"x", x_arg}, {"log_abs", l.log_abs}, {"sign", l.sign}};
        emit(out, j, fmt);
        return kOk;
      }
      emit(out, Json{{"fn", fn}, {"value", r.value}, {"err", r.err}}, fmt);
      return kOk;
    }

    if (*hc) {
      const WeightVector w = weights_from(weights, ram);
      require_semistable(w);
      const double V = w.V();
      EvalResult r;
      if (kind == "can") r = V > 0 ? h_can_positive(w) : h_can_fano(w);
      else if (kind == "pet") r = h_pet(w);
      else r = h_pi_normalized(w);
      const char* pol = V > 0 ? "K" : V < 0 ? "-K" : "log-CY";
      emit(out, Json{{"weights", weights_json(w)}, {"V", V}, {"kind", kind}, {"polarity", pol}, {"value", r.value}, {"err", r.err}},
           fmt);
      return kOk;
    }

    if (*t1) {
      Json rows = Json::array();
      for (const auto& row : table1_rows()) {
        const double closed = lc_eval(row.constant).value;
        const double residual = table1_residual(row);
        rows.push_back({{"indices", row.indices.to_string()},
                        {"field", row.field_id},
                        {"constant", lc_to_string(row.constant)},
                        {"closed_form", closed},
                        {"computed", closed - residual},
                        {"residual", residual},
                        {"pass", std::fabs(residual) < 1e-9}});
      }
      emit(out, rows, fmt);
      return kOk;
    }

    if (*t2) {
      Json rows = Json::array();
      for (const auto& row : table2_rows()) {
        const double closed = lc_eval(row.value).value;
        const double residual = table2_residual(row);
        rows.push_back({{"indices", row.indices.to_string()},
                        {"value_form", lc_to_string(row.value)},
                        {"closed_form", closed},
                        {"computed", closed - residual},
                        {"residual", residual},
                        {"pass", std::fabs(residual) < 1e-9}});
      }
      emit(out, rows, fmt);
      return kOk;
    }

    if (*sh) {
      std::vector<const ShimuraCase*> cases;
      if (case_id == "all")
        for (const auto& c : builtin_cases()) cases.push_back(&c);
      else
        cases.push_back(&builtin_case(case_id));
      if (fmt == Format::json) {
        Json docs = Json::array();
        for (const auto* c : cases) {
          const HpResult r = h_p_analysis(*c);
          docs.push_back({{"case", c->id},
                          {"field", c->field.id},
                          {"k_degree", rational_to_string(c->k_degree)},
                          {"h", rational_map(r.h)},
                          {"h_hat", rational_map(r.h_hat)},
                          {"difference", Json::parse(lc_to_json(r.difference))},
                          {"difference_text", lc_to_string(r.difference)},
                          {"matches_expected", r.h == c->expected_h}});
        }
        emit(out, cases.size() == 1 ? docs[0] : docs, fmt);
        return kOk;
      }
      Json rows = Json::array();
      for (const auto* c : cases) {
        const HpResult r = h_p_analysis(*c);
        for (const auto& [p, h] : r.h)
          rows.push_back({{"case", c->id}, {"p", p}, {"h", rational_to_string(h)}, {"h_hat", rational_to_string(r.h_hat.at(p))}});
      }
      emit(out, rows, fmt);
      if (fmt == Format::text)
        for (const auto* c : cases) out << c->id << ": yuan - optimal = " << lc_to_string(h_p_analysis(*c).difference) << "\n";
      return kOk;
    }

    if (*fe) {
      const auto a = parse_long_list(a_text);
      if (a.size() != 3) throw DomainError("--a needs three coefficients");
      Json rows = Json::array();
      for (long m : parse_long_list(m_list)) {
        const FermatSpec spec{m, {a[0], a[1], a[2]}};
        const EvalResult h = fermat_h_can(spec);
        const ArakelovBound b = arakelov_upper_bound(m);
        rows.push_back({{"m", m},
                        {"genus", genus(m)},
                        {"h_can", h.value},
                        {"eps", b.eps},
                        {"gap", arakelov_gap(m)},
                        {"bound_first", b.first},
                        {"bound_second", b.second}});
      }
      emit(out, rows, fmt);
      if (fmt == Format::text) out << "constant (with eps_4): " << lc_to_string(fermat_constant_exact()) << " = " << cell(Json(fermat_constant())) << "\n";
      return kOk;
    }

    if (*pe) {
      const WeightVector w = parse_weights(p_weights);
      require_semistable(w);
      const Polarity pol = polarity_of(w);
      const double target = pol == Polarity::canonical ? h_can_positive(w).value : h_can_fano(w).value;
      Json rows = Json::array();
      for (long N : parse_long_list(N_list)) {
        const PeriodConfig cfg{N, w, pol};
        const EvalResult est = height_from_periods(cfg, nworkers);
        Json row{{"N", N}, {"estimate", est.value}, {"gap", est.value - target}};
        if (oracle != "none" && (N == 2 || N == 3)) {
          OracleBudget budget;
          budget.seed = seed;
          budget.samples = samples;
          budget.workers = nworkers;
          const auto scheme = oracle == "mc" ? OracleScheme::monte_carlo : OracleScheme::quadrature;
          const EvalResult z = mc_oracle_Z(static_cast<int>(N), w, scheme, budget);
          row["oracle"] = z.value;
          row["oracle_err"] = z.err;
          row["df_Z"] = std::exp(df_log_Z(cfg, nworkers).value);
        }
        rows.push_back(row);
      }
      emit(out, rows, fmt);
      return kOk;
    }

    if (*fa) {
      const WeightVector w = parse_weights(f_weights);
      const EvalResult r = faltings_logCY(w);
      emit(out, Json{{"weights", weights_json(w)}, {"value", r.value}, {"err", r.err}}, fmt);
      return kOk;
    }

    if (*ve) {
      bool all_pass = true;
      Json rows = Json::array();
      for (int id : verify::suite_criteria(suite)) {
        const auto rep = verify::run_criterion(id);
        all_pass = all_pass && rep.pass();
        for (const auto& c : rep.checks)
          rows.push_back({{"criterion", id},
                          {"title", rep.title},
                          {"check", c.name},
                          {"pass", c.pass},
                          {"detail", c.detail},
                          {"seconds", rep.seconds}});
      }
      emit(out, rows, fmt);
      return all_pass ? kOk : kVerifyFailed;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
  return kOk;
}

}  // namespace arh::cli
