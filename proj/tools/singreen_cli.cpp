// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "singreen/asymptotics.hpp"
#include "singreen/born.hpp"
#include "singreen/errors.hpp"
#include "singreen/greens3d.hpp"
#include "singreen/potential.hpp"
#include "singreen/screened.hpp"
#include "singreen/specfun.hpp"
#include "singreen/table_io.hpp"
#include "singreen/verify.hpp"
#include "singreen/version.hpp"
#include "singreen/zero_range.hpp"

namespace {

namespace sg = singreen;
using json = nlohmann::ordered_json;
using sg::table_io::format_double;
using complex = std::complex<double>;

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_flagged = 2;
constexpr int exit_internal = 3;

struct RunConfig {
  std::map<std::string, std::string> kv;
  std::string out_path;
  std::string format = "csv";
  bool allow_flagged = false;

  bool has(const std::string& key) const { return kv.count(key) > 0; }
  std::string get(const std::string& key, const std::string& dflt) const {
    const auto it = kv.find(key);
    return it == kv.end() ? dflt : it->second;
  }
  double num(const std::string& key, double dflt) const {
    const auto it = kv.find(key);
    return it == kv.end() ? dflt : std::stod(it->second);
  }
  int integer(const std::string& key, int dflt) const {
    const auto it = kv.find(key);
    return it == kv.end() ? dflt : std::stoi(it->second);
  }
};

void load_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    if (!key.empty()) cfg.kv[key] = trim(line.substr(eq + 1));
  }
}

sg::potentials::PotentialSpec spec_from(const RunConfig& cfg) {
  std::ostringstream ss;
  for (const auto& [k, v] : cfg.kv) ss << k << "=" << v << "\n";
  std::istringstream in(ss.str());
  return sg::potentials::load_spec(in);
}

sg::radial::SolveOptions solve_options(const RunConfig& cfg) {
  sg::radial::SolveOptions opt;
  opt.r_start_factor = cfg.num("r_start_factor", opt.r_start_factor);
  opt.tail_epsilon = cfg.num("tail_epsilon", opt.tail_epsilon);
  return opt;
}

sg::table_io::Meta base_meta(const RunConfig& cfg, const std::string& subcommand) {
  sg::table_io::Meta meta;
  meta.emplace_back("singreen", sg::version_string);
  meta.emplace_back("subcommand", subcommand);
  for (const auto& [k, v] : cfg.kv) meta.emplace_back(k, v);  // map iterates sorted
  return meta;
}

json meta_json(const RunConfig& cfg, const std::string& subcommand) {
  json meta;
  meta["singreen"] = sg::version_string;
  meta["subcommand"] = subcommand;
  for (const auto& [k, v] : cfg.kv) meta[k] = v;
  return meta;
}

void write_artifact(const RunConfig& cfg, const std::string& content) {
  if (cfg.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write: " + cfg.out_path);
  out << content;
}

// Table emission honoring --format: CSV with a '#' metadata header, or the
// same table as a JSON object with meta/columns/rows.
void write_table(const RunConfig& cfg, const std::string& subcommand,
                 const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows) {
  if (cfg.format == "json") {
    json out;
    out["meta"] = meta_json(cfg, subcommand);
    out["columns"] = columns;
    json jrows = json::array();
    for (const auto& row : rows) {
      json jrow = json::array();
      for (double v : row) jrow.push_back(format_double(v));
      jrows.push_back(jrow);
    }
    out["rows"] = jrows;
    write_artifact(cfg, out.dump(2) + "\n");
    return;
  }
  if (cfg.format != "csv") throw std::invalid_argument("format must be csv or json");
  sg::table_io::CsvWriter csv(base_meta(cfg, subcommand), columns);
  for (const auto& row : rows) csv.row(row);
  write_artifact(cfg, csv.str());
}

int thread_budget() {
  const char* env = std::getenv("SG_THREADS");
  if (env == nullptr) return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

// Disjoint chunks, each worker owns its own evaluation context; results land
// in a preallocated vector so emission stays in input order.
template <typename Result, typename Worker>
std::vector<Result> run_chunked(std::size_t n, const Worker& worker) {
  std::vector<Result> results(n);
  const int threads = static_cast<int>(std::min<std::size_t>(thread_budget(), n == 0 ? 1 : n));
  if (threads <= 1) {
    worker(0, n, results);
    return results;
  }
  std::vector<std::future<void>> futs;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    futs.push_back(std::async(std::launch::async,
                              [&worker, lo, hi, &results] { worker(lo, hi, results); }));
  }
  for (auto& f : futs) f.get();
  return results;
}

int cmd_chi_sweep(RunConfig cfg) {
  const double eta = cfg.num("eta", 1.0);
  const double k = cfg.num("k", 1.0);
  const int ell = cfg.integer("ell", 0);
  const auto grid = sg::table_io::parse_grid(cfg.get("R", "10:320:6:log"));
  cfg.kv["eta"] = format_double(eta);
  cfg.kv["k"] = format_double(k);
  cfg.kv["ell"] = std::to_string(ell);
  cfg.kv["R"] = sg::table_io::grid_to_string(grid);

  std::vector<std::vector<double>> rows;
  bool flagged = false;
  for (double R : grid.values()) {
    const complex x = sg::screened::chi(ell, eta, k, R);
    const auto asym = sg::screened::chi_asymptotic(ell, eta, k, R);
    flagged = flagged || !asym.valid;
    rows.push_back({R, x.real(), x.imag(), std::abs(x), std::abs(asym.value),
                    std::abs(x - asym.value) / std::abs(asym.value)});
  }
  write_table(cfg, "chi-sweep", {"R", "re_chi", "im_chi", "abs_chi", "abs_asym", "rel_err"}, rows);
  return flagged && !cfg.allow_flagged ? exit_flagged : exit_ok;
}

int cmd_greens_eval(RunConfig cfg) {
  const auto spec = spec_from(cfg);
  const double k = cfg.num("k", 1.0);
  const double rprime = cfg.num("rprime", 1.0);
  const double cos_angle = cfg.num("cos_angle", 0.5);
  const double tol = cfg.num("tol", 1e-10);
  const int ell_max = cfg.integer("ell_max", 64);
  const auto grid = sg::table_io::parse_grid(cfg.get("r", "0.2:2.0:16:log"));
  const auto rs = grid.values();
  const auto opts = solve_options(cfg);
  cfg.kv["k"] = format_double(k);
  cfg.kv["rprime"] = format_double(rprime);
  cfg.kv["cos_angle"] = format_double(cos_angle);
  cfg.kv["tol"] = format_double(tol);
  cfg.kv["ell_max"] = std::to_string(ell_max);
  cfg.kv["r"] = sg::table_io::grid_to_string(grid);
  cfg.kv["tail_epsilon"] = format_double(opts.tail_epsilon);
  cfg.kv["r_start_factor"] = format_double(opts.r_start_factor);

  const double lo = std::min(grid.start, rprime) * 0.5;
  const double hi = std::max(grid.stop, rprime) * 2.0;

  struct Row {
    sg::greens3d::GreenEvaluation ev;
  };
  const auto points = run_chunked<Row>(
      rs.size(), [&](std::size_t b, std::size_t e, std::vector<Row>& out) {
        sg::greens3d::Evaluator ev(spec, k, lo, hi, opts);
        for (std::size_t i = b; i < e; ++i) {
          out[i].ev = ev.sum(rs[i], rprime, cos_angle, tol, ell_max);
        }
      });

  std::vector<std::vector<double>> rows;
  bool flagged = false;
  for (const auto& p : points) {
    flagged = flagged || !p.ev.converged;
    rows.push_back({p.ev.r, p.ev.rprime, p.ev.cos_angle, p.ev.value.real(), p.ev.value.imag(),
                    static_cast<double>(p.ev.ell_used), p.ev.tail_estimate});
  }
  write_table(cfg, "greens-eval",
              {"r", "rprime", "cos_angle", "re_g", "im_g", "ell_used", "tail_estimate"}, rows);
  return flagged && !cfg.allow_flagged ? exit_flagged : exit_ok;
}

int cmd_asymptote_fit(RunConfig cfg, const std::string& in_csv) {
  const double k = cfg.num("k", 1.0);
  cfg.kv["k"] = format_double(k);
  std::vector<std::pair<double, complex>> samples;

  double rho = cfg.num("rho", 1.0);
  if (in_csv.empty()) {
    const auto spec = spec_from(cfg);
    rho = spec.rho();
    const auto grid = sg::table_io::parse_grid(
        cfg.get("fit_window", format_double(1e-4 / k) + ":" + format_double(1e-2 / k) + ":60:log"));
    sg::greens3d::Evaluator ev(spec, k, grid.start, grid.stop, solve_options(cfg));
    for (double r : grid.values()) samples.emplace_back(r, ev.at_origin(r));
  } else {
    std::ifstream in(in_csv);
    if (!in) throw std::invalid_argument("cannot open samples: " + in_csv);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0]))) {
        continue;
      }
      double r, re, im;
      if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &r, &re, &im) == 3) {
        samples.emplace_back(r, complex(re, im));
      }
    }
  }

  const auto cls = cfg.has("class") ? [&] {
    const std::string c = cfg.get("class", "");
    if (c == "sub_coulomb") return sg::potentials::SingularityClass::SubCoulomb;
    if (c == "coulomb") return sg::potentials::SingularityClass::Coulomb;
    if (c == "super_coulomb") return sg::potentials::SingularityClass::SuperCoulomb;
    throw std::invalid_argument("unknown class: " + c);
  }()
                                    : sg::potentials::classify_rho(rho);

  sg::asymptotics::FitOptions opt;
  if (cfg.integer("corrections", 1) != 0) {
    opt.corrections = sg::asymptotics::default_corrections(cls, rho);
  }
  opt.allow_near_coulomb = cfg.integer("allow_near_coulomb", 0) != 0;
  const auto fit = sg::asymptotics::fit_short_range(samples, cls, rho, opt);

  json out;
  out["meta"] = meta_json(cfg, "asymptote-fit");
  out["class"] = sg::potentials::to_string(cls);
  out["pole_coeff"] = format_double(fit.pole_coeff);
  out["extra_coeff"] = format_double(fit.extra_coeff);
  out["const_term_re"] = format_double(fit.const_term.real());
  out["const_term_im"] = format_double(fit.const_term.imag());
  out["extra_over_pole"] = format_double(fit.extra_coeff / fit.pole_coeff);
  out["residual_rms"] = format_double(fit.residual_rms);
  out["condition_number"] = format_double(fit.condition_number);
  out["window"] = {format_double(fit.r_min), format_double(fit.r_max)};
  out["accepted"] = fit.accepted;
  out["ill_conditioned"] = fit.ill_conditioned;
  write_artifact(cfg, out.dump(2) + "\n");
  return (!fit.accepted && !cfg.allow_flagged) ? exit_flagged : exit_ok;
}

int cmd_born_check(RunConfig cfg) {
  const auto spec = spec_from(cfg);
  const double k = cfg.num("k", 0.005);
  sg::born::SplitConfig split;
  split.r0 = cfg.num("r0", 1.0);
  const auto grid = sg::table_io::parse_grid(cfg.get("r", "1e-4:1e-2:25:log"));
  const auto rs = grid.values();
  cfg.kv["k"] = format_double(k);
  cfg.kv["r0"] = format_double(split.r0);
  cfg.kv["r"] = sg::table_io::grid_to_string(grid);

  struct Row {
    double r;
    complex i1;
    double closed;
    bool converged;
  };
  const auto points =
      run_chunked<Row>(rs.size(), [&](std::size_t b, std::size_t e, std::vector<Row>& out) {
        for (std::size_t i = b; i < e; ++i) {
          const auto q = sg::born::i1_quadrature(spec, k, rs[i], split);
          out[i] = {rs[i], q.value,
                    sg::born::i1_singular_closed(spec.v0(), spec.rho(), rs[i], split.r0),
                    q.converged};
        }
      });

  std::vector<std::vector<double>> rows;
  bool flagged = false;
  for (const auto& p : points) {
    flagged = flagged || !p.converged;
    rows.push_back(
        {p.r, p.i1.real(), p.i1.imag(), p.closed, p.i1.real() - p.closed, p.i1.imag()});
  }
  write_table(cfg, "born-check", {"r", "re_i1", "im_i1", "closed_form", "re_diff", "im_diff"},
              rows);
  return flagged && !cfg.allow_flagged ? exit_flagged : exit_ok;
}

int cmd_zero_range(RunConfig cfg) {
  const auto spec = spec_from(cfg);
  const double k = cfg.num("k", 1.0);
  const double lambda = cfg.num("lambda", 1.0);
  const auto cls = sg::potentials::classify(spec);
  const auto opts = solve_options(cfg);

  const auto grid = sg::table_io::parse_grid(cfg.get("fit_window", "1e-4:1e-2:36:log"));
  const auto rs = grid.values();
  cfg.kv["k"] = format_double(k);
  cfg.kv["lambda"] = format_double(lambda);
  cfg.kv["fit_window"] = sg::table_io::grid_to_string(grid);

  sg::greens3d::Evaluator green(spec, k, grid.start, grid.stop, opts);
  std::vector<std::pair<double, complex>> g_samples;
  for (double r : rs) g_samples.emplace_back(r, green.at_origin(r));

  sg::asymptotics::FitOptions opt;
  opt.corrections = sg::asymptotics::default_corrections(cls, spec.rho());
  opt.allow_near_coulomb = true;
  const auto fit = sg::asymptotics::fit_short_range(g_samples, cls, spec.rho(), opt);
  const complex B = fit.const_term;

  sg::zero_range::Phi0Evaluator phi0(spec, k, grid.start, grid.stop, 10, opts);
  const complex phi0_zero = phi0.at_origin();
  const complex beta = sg::zero_range::solve_beta(lambda, phi0_zero, B);

  std::vector<std::pair<double, complex>> phi;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    phi.emplace_back(rs[i], phi0.value(rs[i]) - lambda * g_samples[i].second * beta);
  }
  const auto reg = sg::zero_range::regularize(phi, cls, spec.v0(), spec.rho());
  const double closure = std::abs(reg.beta - beta) / std::abs(beta);

  json out;
  out["meta"] = meta_json(cfg, "zero-range");
  out["class"] = sg::potentials::to_string(cls);
  out["lambda"] = format_double(lambda);
  out["phi0_at_zero_re"] = format_double(phi0_zero.real());
  out["phi0_at_zero_im"] = format_double(phi0_zero.imag());
  out["B_re"] = format_double(B.real());
  out["B_im"] = format_double(B.imag());
  out["beta_re"] = format_double(beta.real());
  out["beta_im"] = format_double(beta.imag());
  out["alpha_re"] = format_double(-lambda * beta.real());
  out["alpha_im"] = format_double(-lambda * beta.imag());
  out["closure_residual"] = format_double(closure);
  out["extrapolation_ok"] = reg.ok;
  write_artifact(cfg, out.dump(2) + "\n");
  return (closure > 1e-3 || !reg.ok) && !cfg.allow_flagged ? exit_flagged : exit_ok;
}

int cmd_verify_all(const RunConfig& cfg, const std::string& self_path) {
  const auto results = sg::verify::run_all(self_path);
  const std::string report = sg::verify::render_report(results);
  write_artifact(cfg, report);
  if (!cfg.out_path.empty()) std::cout << report;
  bool all_pass = true;
  for (const auto& r : results) all_pass = all_pass && r.pass;
  return all_pass ? exit_ok : (cfg.allow_flagged ? exit_ok : exit_flagged);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Green's function toolkit for potentials with power-law origin singularities"};
  app.set_version_flag("--version", sg::version_string);

  RunConfig cfg;
  std::string config_path;
  std::vector<std::string> sets;
  std::string in_csv;

  app.add_option("--config", config_path, "potential / numeric config file (key=value lines)");
  app.add_option("--set", sets, "override a config key, key=value")->take_all();
  app.add_option("--out", cfg.out_path, "output path (stdout when omitted)");
  app.add_option("--format", cfg.format, "csv|json");
  app.add_flag("--allow-flagged", cfg.allow_flagged, "exit 0 even when accuracy flags fire");

  auto* chi = app.add_subcommand("chi-sweep", "sweep chi against its large-R form");
  auto* greens = app.add_subcommand("greens-eval", "partial-wave series evaluation of G+");
  auto* fit = app.add_subcommand("asymptote-fit", "short-range fit of G+(r,0)");
  fit->add_option("--in", in_csv, "CSV of r,re_g,im_g samples (drives the solver when omitted)");
  auto* bornc = app.add_subcommand("born-check", "first-iteration integral vs closed form");
  auto* zr = app.add_subcommand("zero-range", "contact-interaction constants and closure");
  auto* verify = app.add_subcommand("verify-all", "run the full verification battery");
  for (auto* sc : {chi, greens, fit, bornc, zr, verify}) sc->fallthrough();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  }

  try {
    if (!config_path.empty()) load_config_file(cfg, config_path);
    for (const auto& s : sets) {
      const auto eq = s.find('=');
      if (eq == std::string::npos) {
        std::cerr << "--set expects key=value, got: " << s << "\n";
        return exit_usage;
      }
      cfg.kv[s.substr(0, eq)] = s.substr(eq + 1);
    }

    if (chi->parsed()) return cmd_chi_sweep(cfg);
    if (greens->parsed()) return cmd_greens_eval(cfg);
    if (fit->parsed()) return cmd_asymptote_fit(cfg, in_csv);
    if (bornc->parsed()) return cmd_born_check(cfg);
    if (zr->parsed()) return cmd_zero_range(cfg);
    if (verify->parsed()) return cmd_verify_all(cfg, argv[0]);
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const sg::AccuracyError& e) {
    std::cerr << "accuracy: " << e.what() << "\n";
    return cfg.allow_flagged ? exit_ok : exit_flagged;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}
