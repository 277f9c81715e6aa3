#include "freud/cli.hpp"

#include "freud/errors.hpp"
#include "freud/ladder.hpp"
#include "freud/moments.hpp"
#include "freud/polynomials.hpp"
#include "freud/zeros.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace freud::cli {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Real> union_grid() {
  std::vector<Real> g = ladder_grid();
  const std::vector<Real> o = ode_grid();
  g.insert(g.end(), o.begin(), o.end());
  std::sort(g.begin(), g.end());
  return g;
}

VerificationReport combine(const std::string& name, const std::vector<VerificationReport>& parts) {
  VerificationReport out = parts.front();
  out.items.clear();
  out.notes.clear();
  out.runtime_ms = 0;
  out.tolerance = 0;
  out.check = name;
  for (const auto& part : parts) out.merge(part, part.check + " ");
  return out;
}

// Each check runs the identities of its topic over the default index range,
// clipped to what a table of size N supports.
using CheckFn = std::function<VerificationReport(const WeightParams&, const RecurrenceTable&)>;

const std::map<std::string, CheckFn>& check_table() {
  static const std::map<std::string, CheckFn> table = {
      {"moments",
       [](const WeightParams& p, const RecurrenceTable& tab) {
         std::vector<VerificationReport> parts{check_moment_agreement(p, 8)};
         for (int k = 0; k <= 6; ++k) parts.push_back(check_shift_identity(p, k));
         for (int n = 1; n <= 2; ++n) parts.push_back(check_derivative_identity(p, n));
         parts.push_back(check_norms(tab, tab.max_n()));
         parts.push_back(check_orthogonality(tab, tab.max_n()));
         return combine("moments", parts);
       }},
      {"string",
       [](const WeightParams&, const RecurrenceTable& tab) {
         std::vector<VerificationReport> parts;
         if (tab.max_n() >= 3) parts.push_back(check_string_equation_range(tab, 1, tab.max_n() - 2));
         parts.push_back(check_telescoping(tab, tab.max_n()));
         return combine("string", parts);
       }},
      {"toda",
       [](const WeightParams& p, const RecurrenceTable& tab) {
         return combine("toda", {check_toda_range(p, std::min(15, tab.max_n()))});
       }},
      {"dde2",
       [](const WeightParams& p, const RecurrenceTable& tab) {
         VerificationReport r = combine("dde2", {check_second_order_dde_range(p, std::min(8, tab.max_n()))});
         r.gating = false;
         return r;
       }},
      {"ladder",
       [](const WeightParams&, const RecurrenceTable& tab) {
         std::vector<VerificationReport> parts;
         for (int n = 1; n <= std::min(10, tab.max_n() - 2); ++n) {
           parts.push_back(check_lowering(tab, n, ladder_grid()));
           parts.push_back(check_AnBn_lemma(tab, n, ladder_grid()));
         }
         return combine("ladder", parts);
       }},
      {"m1",
       [](const WeightParams&, const RecurrenceTable& tab) {
         std::vector<VerificationReport> parts;
         for (int n = 0; n <= std::min(15, tab.max_n() - 3); ++n) parts.push_back(check_M1(tab, n));
         return combine("m1", parts);
       }},
      {"m2prime",
       [](const WeightParams&, const RecurrenceTable& tab) {
         std::vector<VerificationReport> parts;
         for (int n = 1; n <= std::min(10, tab.max_n() - 2); ++n)
           parts.push_back(check_M2prime(tab, n, ladder_grid()));
         return combine("m2prime", parts);
       }},
      {"ode",
       [](const WeightParams&, const RecurrenceTable& tab) {
         std::vector<VerificationReport> parts;
         for (int n = 1; n <= std::min(10, tab.max_n() - 2); ++n) parts.push_back(check_ode(tab, n, union_grid()));
         return combine("ode", parts);
       }},
      {"quasi",
       [](const WeightParams&, const RecurrenceTable& tab) {
         std::vector<VerificationReport> parts;
         for (int n = 6; n <= std::min(12, tab.max_n() - 4); ++n) parts.push_back(check_quasi(tab, n));
         return combine("quasi", parts);
       }},
      {"hankel",
       [](const WeightParams& p, const RecurrenceTable& tab) {
         return combine("hankel", {check_cross_method(p, std::min(20, tab.max_n())),
                                   check_hankel_product(p, std::min(10, tab.max_n()))});
       }},
      {"zeros",
       [](const WeightParams&, const RecurrenceTable& tab) {
         std::vector<VerificationReport> parts;
         for (int n = 1; n <= tab.max_n(); ++n) parts.push_back(check_zero_properties(tab, n));
         for (int n = 2; n <= tab.max_n(); ++n) parts.push_back(check_interlacing(tab, n));
         return combine("zeros", parts);
       }},
      {"electro",
       [](const WeightParams&, const RecurrenceTable& tab) {
         std::vector<VerificationReport> parts;
         for (int n = 2; n <= std::min(12, tab.max_n() - 2); ++n) parts.push_back(electrostatic_residual(tab, n));
         return combine("electro", parts);
       }},
  };
  return table;
}

Json report_json(const VerificationReport& r, int digits, bool timings) {
  Json j;
  j["check"] = r.check;
  j["params"] = {{"c", r.c}, {"t", r.t}, {"sigma", r.sigma}, {"digits", r.digits}};
  j["gating"] = r.gating;
  j["pass"] = r.pass;
  j["max_residual"] = format_real(r.max_residual, digits);
  j["tolerance"] = format_real(r.tolerance, digits);
  if (timings) j["runtime_ms"] = r.runtime_ms;
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json ji;
    ji["label"] = item.label;
    ji["residual"] = format_real(item.residual, digits);
    if (!item.extras.empty()) {
      Json ex;
      for (const auto& [name, value] : item.extras) ex[name] = format_real(value, digits);
      ji["extras"] = ex;
    }
    items.push_back(ji);
  }
  j["items"] = items;
  j["notes"] = r.notes;
  return j;
}

void write_output(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw Error("cannot open output file '" + cfg.out + "'");
  file << text;
  if (!file) throw Error("failed writing output file '" + cfg.out + "'");
}

struct Flags {
  std::string c, t, sigma, method, checks, out, config, moment_method;
  int digits = 0, n_max = 0, n = 0;
  double tol_identity_exp = 0, tol_quadrature_exp = 0;
  bool electrostatic = false, timings = false;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--c", f.c, "sextic coefficient c > 0");
  sub->add_option("--t", f.t, "deformation parameter t");
  sub->add_option("--sigma", f.sigma, "exponent parameter sigma > -1/2");
  sub->add_option("--digits", f.digits, "target decimal digits");
  sub->add_option("--n-max", f.n_max, "largest recurrence index N");
  sub->add_option("--method", f.method, "gamma source: stieltjes, hankel or string");
  sub->add_option("--out", f.out, "output file (default stdout)");
  sub->add_option("--config", f.config, "JSON config file; flags override its keys");
  sub->add_option("--tol-identity-exp", f.tol_identity_exp, "log10 of the identity tolerance");
  sub->add_option("--tol-quadrature-exp", f.tol_quadrature_exp, "log10 of the quadrature tolerance");
}

bool given(const CLI::App* sub, const std::string& name) {
  const CLI::Option* opt = sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

RunConfig resolve(const CLI::App* sub, const Flags& f) {
  RunConfig cfg;
  if (given(sub, "--config")) load_config_file(f.config, cfg);
  if (given(sub, "--c")) cfg.c = f.c;
  if (given(sub, "--t")) cfg.t = f.t;
  if (given(sub, "--sigma")) cfg.sigma = f.sigma;
  if (given(sub, "--digits")) cfg.digits = f.digits;
  if (given(sub, "--n-max")) cfg.n_max = f.n_max;
  if (given(sub, "--method")) cfg.method = parse_gamma_method(f.method);
  if (given(sub, "--checks")) cfg.checks = split_list(f.checks);
  if (given(sub, "--out")) cfg.out = f.out;
  if (given(sub, "--electrostatic")) cfg.electrostatic = f.electrostatic;
  if (given(sub, "--n")) cfg.n = f.n;
  if (given(sub, "--moment-method")) {
    if (f.moment_method == "series") cfg.moment_method = MomentMethod::series;
    else if (f.moment_method == "quadrature") cfg.moment_method = MomentMethod::quadrature;
    else throw PreconditionError("unknown moment method '" + f.moment_method + "'");
  }
  if (given(sub, "--tol-identity-exp")) cfg.tol_identity_exp = f.tol_identity_exp;
  if (given(sub, "--tol-quadrature-exp")) cfg.tol_quadrature_exp = f.tol_quadrature_exp;
  if (given(sub, "--timings")) cfg.timings = f.timings;
  cfg.validate();
  return cfg;
}

}  // namespace

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"moments", "string", "toda", "dde2", "ladder", "m1",
                                                 "m2prime", "ode", "quasi", "hankel", "zeros", "electro"};
  return names;
}

bool is_gating(const std::string& check) { return check != "dde2"; }

PrecisionContext RunConfig::context() const {
  PrecisionContext ctx(digits);
  if (tol_identity_exp) ctx.tol_identity_exp = *tol_identity_exp;
  if (tol_quadrature_exp) ctx.tol_quadrature_exp = *tol_quadrature_exp;
  return ctx;
}

WeightParams RunConfig::params() const { return WeightParams::make(c, t, sigma, context()); }

void RunConfig::validate() const {
  if (digits > 2000) throw PreconditionError("--digits must be at most 2000");
  if (n_max < 1) throw PreconditionError("--n-max must be at least 1");
  if (n && (*n < 1 || *n > n_max)) throw PreconditionError("--n must be in 1..n_max");
  for (const auto& name : checks) {
    const auto& all = known_checks();
    if (std::find(all.begin(), all.end(), name) == all.end())
      throw PreconditionError("unknown check '" + name + "'");
  }
  context().validate();
  params().validate();
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream file(path);
  if (!file) throw PreconditionError("cannot read config file '" + path + "'");
  Json j;
  try {
    j = Json::parse(file);
  } catch (const Json::exception& e) {
    throw PreconditionError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw PreconditionError("config file must hold a JSON object");
  auto as_text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "c") cfg.c = as_text(v);
      else if (key == "t") cfg.t = as_text(v);
      else if (key == "sigma") cfg.sigma = as_text(v);
      else if (key == "digits") cfg.digits = v.get<int>();
      else if (key == "n_max") cfg.n_max = v.get<int>();
      else if (key == "method") cfg.method = parse_gamma_method(v.get<std::string>());
      else if (key == "checks") cfg.checks = v.is_string() ? split_list(v.get<std::string>()) : v.get<std::vector<std::string>>();
      else if (key == "out") cfg.out = v.get<std::string>();
      else if (key == "electrostatic") cfg.electrostatic = v.get<bool>();
      else if (key == "n") cfg.n = v.get<int>();
      else if (key == "tol_identity_exp") cfg.tol_identity_exp = v.get<double>();
      else if (key == "tol_quadrature_exp") cfg.tol_quadrature_exp = v.get<double>();
      else throw PreconditionError("config file: unknown key '" + key + "'");
    }
  } catch (const Json::exception& e) {
    throw PreconditionError("config file '" + path + "': " + e.what());
  }
}

std::vector<VerificationReport> run_checks(const RunConfig& cfg) {
  const WeightParams p = cfg.params();
  const RecurrenceTable table = compute_gammas(p, cfg.n_max, cfg.method);
  std::vector<VerificationReport> reports;
  for (const auto& name : known_checks()) {
    if (!cfg.checks.empty() && std::find(cfg.checks.begin(), cfg.checks.end(), name) == cfg.checks.end()) continue;
    reports.push_back(check_table().at(name)(p, table));
    reports.back().gating = is_gating(name);
  }
  return reports;
}

bool all_gating_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return !r.gating || r.pass; });
}

std::string gamma_csv(const RunConfig& cfg) {
  const RecurrenceTable table = compute_gammas(cfg.params(), cfg.n_max, cfg.method);
  std::ostringstream os;
  os << "n,gamma,Gamma_hat\n";
  for (int n = 0; n <= table.max_n(); ++n)
    os << n << ',' << format_real(table.gamma(n), cfg.digits) << ',' << format_real(table.norm(n), cfg.digits) << '\n';
  return os.str();
}

std::string zeros_csv(const RunConfig& cfg) {
  const int n = cfg.n.value_or(cfg.n_max);
  // The electrostatic field U_n needs gamma up to n + 2.
  const int size = cfg.electrostatic ? std::max(cfg.n_max, n + 2) : cfg.n_max;
  const RecurrenceTable table = compute_gammas(cfg.params(), size, cfg.method);
  const ZeroSet zs = compute_zeros(table, n);
  std::vector<std::optional<Real>> electro;
  if (cfg.electrostatic) electro = electrostatic_values(table, zs);
  std::ostringstream os;
  os << "j,zero" << (cfg.electrostatic ? ",electrostatic_residual" : "") << '\n';
  for (std::size_t j = 0; j < zs.zeros.size(); ++j) {
    os << j << ',' << format_real(zs.zeros[j], cfg.digits);
    if (cfg.electrostatic) {
      os << ',';
      if (electro[j]) os << format_real(*electro[j], cfg.digits);
    }
    os << '\n';
  }
  return os.str();
}

std::string moments_csv(const RunConfig& cfg) {
  const MomentTable m = moment_table(cfg.params(), cfg.n_max, cfg.moment_method);
  std::ostringstream os;
  os << "k,eta_2k\n";
  for (int k = 0; k <= m.max_k(); ++k) os << k << ',' << format_real(m.eta(2 * k), cfg.digits) << '\n';
  return os.str();
}

std::string reports_json(const RunConfig& cfg, const std::vector<VerificationReport>& reports) {
  Json j;
  const WeightParams p = cfg.params();
  j["params"] = {{"c", format_real(p.c, cfg.digits)},
                 {"t", format_real(p.t, cfg.digits)},
                 {"sigma", format_real(p.sigma, cfg.digits)},
                 {"digits", cfg.digits},
                 {"n_max", cfg.n_max},
                 {"method", to_string(cfg.method)}};
  Json list = Json::array();
  for (const auto& r : reports) list.push_back(report_json(r, cfg.digits, cfg.timings));
  j["reports"] = list;
  j["pass"] = all_gating_pass(reports);
  return j.dump(2) + "\n";
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Recurrence coefficients, polynomials and identity checks for the perturbed sextic Freud weight"};
  app.require_subcommand(1);
  Flags f;
  CLI::App* gamma = app.add_subcommand("gamma", "CSV of gamma_n and Gamma_hat_n for n = 0..N");
  CLI::App* verify = app.add_subcommand("verify", "run identity checks, write a JSON report");
  CLI::App* zeros = app.add_subcommand("zeros", "CSV of the zeros of S_n");
  CLI::App* moments = app.add_subcommand("moments", "CSV of eta_2k for k = 0..N");
  for (CLI::App* sub : {gamma, verify, zeros, moments}) add_common(sub, f);
  verify->add_option("--checks", f.checks, "comma-separated subset of the checks (default all)");
  verify->add_flag("--timings", f.timings, "include runtimes in the report");
  zeros->add_option("--n", f.n, "polynomial degree (default N)");
  zeros->add_flag("--electrostatic", f.electrostatic, "add the electrostatic residual column");
  moments->add_option("--moment-method", f.moment_method, "series or quadrature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  CLI::App* sub = app.get_subcommands().front();
  RunConfig cfg;
  try {
    cfg = resolve(sub, f);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    const WeightParams p = cfg.params();
    if (p.sigma_warning()) err << "warning: sigma <= 0\n";
    if (sub == gamma) {
      write_output(cfg, gamma_csv(cfg), out);
    } else if (sub == zeros) {
      write_output(cfg, zeros_csv(cfg), out);
    } else if (sub == moments) {
      write_output(cfg, moments_csv(cfg), out);
    } else {
      const std::vector<VerificationReport> reports = run_checks(cfg);
      write_output(cfg, reports_json(cfg, reports), out);
      for (const auto& r : reports)
        err << r.check << ": " << (r.pass ? "PASS" : "FAIL") << (r.gating ? "" : " (informational)")
            << " max_residual=" << format_real(r.max_residual, 6) << " tolerance=" << format_real(r.tolerance, 6)
            << '\n';
      return all_gating_pass(reports) ? exit_pass : exit_check_failure;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_runtime;
  }
  return exit_pass;
}

}  // namespace freud::cli
