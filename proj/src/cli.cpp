#include "phaselag/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>

#include "CLI11.hpp"
#include "json.hpp"
#include "phaselag/artifacts.hpp"
#include "phaselag/modal.hpp"
#include "phaselag/radial.hpp"

namespace phaselag {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

Generator build_generator(const RunConfig& cfg) {
  const auto variant =
      cfg.paper_literal_generator ? GeneratorVariant::paper_literal : GeneratorVariant::consistent;
  if (cfg.case_id == 1) {
    if (std::holds_alternative<ConcentricDiscs>(cfg.domain))
      throw ConfigError("case 1 needs a rectangle or interval domain");
    if (cfg.modes == 0) throw ConfigError("sweep.modes must be >= 1");
    return Generator::from_blocks(assemble_blocks(cfg.model, cfg.domain, cfg.modes, variant));
  }
  const auto* discs = std::get_if<ConcentricDiscs>(&cfg.domain);
  if (!discs) throw ConfigError("case 2 needs a concentric_discs domain");
  try {
    return Generator::from_operator(
        assemble_transmission(cfg.model, RadialGrid(discs->R0, discs->R, cfg.h), variant));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

namespace {


json number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

json echo(const RunConfig& cfg) {
  json domain;
  domain["type"] = domain_name(cfg.domain);
  if (const auto* r = std::get_if<Rectangle>(&cfg.domain)) {
    domain["L1"] = r->L1;
    domain["L2"] = r->L2;
  } else if (const auto* i = std::get_if<Interval>(&cfg.domain)) {
    domain["L"] = i->L;
  } else {
    const auto& c = std::get<ConcentricDiscs>(cfg.domain);
    domain["R0"] = c.R0;
    domain["R"] = c.R;
  }
  json model;
  model["n"] = cfg.model.order();
  model["a"] = cfg.model.a;
  model["b"] = cfg.model.b;
  model["rho"] = cfg.model.rho;
  model["c_T"] = cfg.model.c_T;
  model["kappa1"] = cfg.model.kappa1;
  model["kappa2"] = cfg.model.kappa2 ? json(*cfg.model.kappa2) : json(nullptr);
  model["beta"] = cfg.model.beta;
  model["decoupled"] = cfg.model.decoupled();
  model["generator"] = cfg.paper_literal_generator ? "paper_literal" : "consistent";
  json sweep;
  if (cfg.case_id == 1) sweep["modes"] = cfg.modes;
  else sweep["h"] = cfg.h;
  sweep["decade_lo"] = cfg.gamma.lo_decade;
  sweep["decade_hi"] = cfg.gamma.hi_decade;
  sweep["per_decade"] = cfg.gamma.per_decade;
  sweep["shifted"] = cfg.shifted;
  sweep["c0"] = cfg.c0 ? json(*cfg.c0) : json("auto");
  sweep["convergence_check"] = cfg.convergence_check;
  json fit;
  fit["decades"] = cfg.fit_decades;
  fit["window_lo"] = cfg.fit_lo ? json(*cfg.fit_lo) : json(nullptr);
  fit["window_hi"] = cfg.fit_hi ? json(*cfg.fit_hi) : json(nullptr);
  json evolve;
  evolve["initial"] = to_string(cfg.initial);
  evolve["dt"] = cfg.dt;
  evolve["T"] = cfg.T;
  evolve["half_step_check"] = cfg.half_step_check;
  evolve["growth_T"] = cfg.growth_T;
  evolve["growth_points"] = cfg.growth_points;
  evolve["smoothing_points"] = cfg.smoothing_points;
  json numerics;
  numerics["seed"] = cfg.seed;
  numerics["max_iterations"] = cfg.max_iterations;
  numerics["tolerance"] = cfg.tolerance;
  numerics["block_size"] = cfg.block_size;
  json out;
  out["case"] = cfg.case_id;
  out["model"] = model;
  out["domain"] = domain;
  out["sweep"] = sweep;
  out["fit"] = fit;
  out["evolve"] = evolve;
  out["numerics"] = numerics;
  return out;
}

/// Collects artifacts and headline numbers for one command.
class Run {
public:
  Run(std::string command, const RunConfig& cfg) : cmd_(std::move(command)), cfg_(cfg) {}

  void csv(const std::string& name, const CsvTable& t) {
    write_text_atomic(cfg_.out_dir / name, to_csv(t));
    artifacts_.push_back(name);
  }
  void svg(const std::string& name, const std::vector<PlotSeries>& s, const PlotAxes& axes) {
    if (!cfg_.svg) return;
    write_text_atomic(cfg_.out_dir / name, emit_svg(s, axes));
    artifacts_.push_back(name);
  }
  void headline(const std::string& name, double value, const std::string& source) {
    headline_[name] = {{"value", number(value)}, {"source", source}};
    std::cout << "  " << name << " = " << format_double(value) << "  [" << source << "]\n";
  }
  void flag(const std::string& name, bool pass) {
    flags_[name] = pass;
    std::cout << "  " << name << ": " << (pass ? "pass" : "fail") << "\n";
  }
  void extra(const std::string& key, json value) { extra_[key] = std::move(value); }

  void write(int exit_code, const std::string& error = {}) const {
    json r;
    r["schema_version"] = 1;
    r["command"] = cmd_;
    r["status"] = exit_code == 0 ? "ok" : "error";
    r["exit_code"] = exit_code;
    if (!error.empty()) r["error"] = error;
    r["config"] = echo(cfg_);
    r["headline"] = headline_;
    r["flags"] = flags_;
    for (auto it = extra_.begin(); it != extra_.end(); ++it) r[it.key()] = it.value();
    r["artifacts"] = artifacts_;
    write_text_atomic(cfg_.out_dir / "report.json", r.dump(2) + "\n");
  }

private:
  std::string cmd_;
  const RunConfig& cfg_;
  json headline_ = json::object();
  json flags_ = json::object();
  json extra_ = json::object();
  std::vector<std::string> artifacts_;
};

SweepOptions sweep_options(const RunConfig& cfg, double c0) {
  SweepOptions o;
  o.c0 = c0;
  o.shifted = cfg.shifted;
  o.allow_singular = true;
  o.norm = cfg.norm_options();
  return o;
}

CsvTable sweep_table(const ResolventSweep& s) {
  CsvTable t{{"gamma", "resolvent_norm", "gamma_times_norm"}, {}};
  for (std::size_t i = 0; i < s.gamma.size(); ++i) t.rows.push_back({s.gamma[i], s.norms[i], s.gamma_times_norm[i]});
  return t;
}

void sweep_plot(Run& run, const std::string& name, const ResolventSweep& s, const std::string& title) {
  PlotSeries norm{"resolvent norm", {}, {}}, gnorm{"gamma * norm", {}, {}};
  for (std::size_t i = 0; i < s.gamma.size(); ++i) {
    if (!std::isfinite(s.norms[i]) || !(s.norms[i] > 0)) continue;
    norm.x.push_back(s.gamma[i]);
    norm.y.push_back(s.norms[i]);
    gnorm.x.push_back(s.gamma[i]);
    gnorm.y.push_back(s.gamma_times_norm[i]);
  }
  if (norm.x.size() >= 2) run.svg(name, {norm, gnorm}, {title, "gamma", "norm", true, true});
}

GevreyFit fit_window(const RunConfig& cfg, std::span<const double> gamma, std::span<const double> norms) {
  if (gamma.empty()) throw std::invalid_argument("gevrey_fit: no samples");
  const double hi = cfg.fit_hi.value_or(gamma.back());
  const double lo = cfg.fit_lo.value_or(hi * std::pow(10.0, -cfg.fit_decades));
  return gevrey_fit(gamma, norms, lo, hi);
}

Generator refined_generator(const RunConfig& cfg, RunConfig& refined) {
  refined = cfg;
  if (cfg.case_id == 1) refined.modes = 2 * cfg.modes;
  else refined.h = cfg.h / 2.0;
  return build_generator(refined);
}

void record_fit(Run& run, const GevreyFit& fit, const std::string& source) {
  run.headline("varsigma", fit.varsigma, source);
  run.headline("gevrey_C", fit.C, source);
  run.headline("r_squared", fit.r_squared, source);
  run.extra("fit_window", {{"lo", fit.window_lo}, {"hi", fit.window_hi}, {"samples", fit.samples}});
}

void cmd_sweep(Run& run, const RunConfig& cfg, const Generator& gen, double c0) {
  const auto grid = cfg.gamma.values();
  const auto sweep = resolvent_sweep(gen, grid, sweep_options(cfg, c0));
  run.csv("sweep.csv", sweep_table(sweep));
  sweep_plot(run, "sweep.svg", sweep, "resolvent sweep, case " + std::to_string(cfg.case_id));

  const auto axis = verify_imaginary_axis(sweep);
  const auto ind = analyticity_indicator(sweep);
  run.headline("operator_norm", sweep.operator_norm, "sweep.csv");
  run.headline("min_singular_value", axis.min_singular_value, "sweep.csv");
  run.headline("argmin_gamma", axis.argmin_gamma, "sweep.csv");
  run.headline("sup_gamma_norm", ind.sup_gamma_norm, "sweep.csv");
  run.headline("tail_slope", ind.tail_slope, "sweep.csv");
  std::optional<GevreyFit> fit;
  try {
    fit = fit_window(cfg, sweep.gamma, sweep.norms);
    record_fit(run, *fit, "sweep.csv");
  } catch (const std::invalid_argument& e) {
    run.extra("fit_error", e.what());
  }
  run.flag("imaginary_axis", axis.pass);

  double change = 0.0;
  bool refined_ok = true;
  if (cfg.convergence_check) {
    RunConfig rcfg;
    const Generator g2 = refined_generator(cfg, rcfg);
    const double c2 = rcfg.c0.value_or(default_shift(g2));
    const auto s2 = resolvent_sweep(g2, grid, sweep_options(rcfg, c2));
    run.csv("sweep_check.csv", sweep_table(s2));
    const auto axis2 = verify_imaginary_axis(s2);
    refined_ok = axis2.pass;
    if (cfg.case_id == 1) {
      const double sup2 = analyticity_indicator(s2).sup_gamma_norm;
      run.headline("sup_gamma_norm_doubled_modes", sup2, "sweep_check.csv");
      change = std::abs(sup2 - ind.sup_gamma_norm) / ind.sup_gamma_norm;
      run.headline("sup_relative_change", change, "sweep_check.csv");
    } else if (fit) {
      try {
        const auto f2 = fit_window(cfg, s2.gamma, s2.norms);
        run.headline("varsigma_refined", f2.varsigma, "sweep_check.csv");
        run.headline("r_squared_refined", f2.r_squared, "sweep_check.csv");
        change = std::abs(f2.varsigma - fit->varsigma);
        run.headline("varsigma_change", change, "sweep_check.csv");
      } catch (const std::invalid_argument& e) {
        run.extra("fit_error_refined", e.what());
        change = std::numeric_limits<double>::infinity();
      }
    }
    run.flag("imaginary_axis_refined", refined_ok);
  }
  if (cfg.case_id == 1) {
    const bool ok = std::isfinite(ind.sup_gamma_norm) && ind.tail_slope >= -0.1 && ind.tail_slope <= 0.1 &&
                    (!cfg.convergence_check || change < 0.01);
    run.flag("analyticity_surrogate", ok);
  } else {
    const bool ok = fit && fit->varsigma >= 0.20 && fit->r_squared >= 0.95 &&
                    (!cfg.convergence_check || change < 0.05);
    run.flag("gevrey_surrogate", ok);
  }
}

void cmd_gevrey(Run& run, const RunConfig& cfg, const std::optional<fs::path>& sweep_csv,
                const std::function<std::pair<Generator, double>()>& make) {
  std::vector<double> gamma, norms;
  std::string source;
  if (sweep_csv) {
    CsvTable t;
    try {
      t = read_csv(*sweep_csv);
      gamma = t.values("gamma");
      norms = t.values("resolvent_norm");
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    source = sweep_csv->filename().string();
  } else {
    auto [gen, c0] = make();
    const auto sweep = resolvent_sweep(gen, cfg.gamma.values(), sweep_options(cfg, c0));
    run.csv("sweep.csv", sweep_table(sweep));
    gamma = sweep.gamma;
    norms = sweep.norms;
    source = "sweep.csv";
  }
  const auto fit = fit_window(cfg, gamma, norms);
  CsvTable t{{"gamma", "resolvent_norm", "fitted_norm"}, {}};
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (gamma[i] >= fit.window_lo * (1 - 1e-12) && gamma[i] <= fit.window_hi * (1 + 1e-12))
      t.rows.push_back({gamma[i], norms[i], fit.C * std::pow(gamma[i], -fit.varsigma)});
  run.csv("fit.csv", t);
  record_fit(run, fit, "fit.csv");
  PlotSeries data{"resolvent norm", t.values("gamma"), t.values("resolvent_norm")};
  PlotSeries line{"fit C*gamma^-varsigma", t.values("gamma"), t.values("fitted_norm")};
  run.svg("fit.svg", {data, line}, {"power-law fit", "gamma", "norm", true, true});
}

EvolutionTrace evolve_case(const RunConfig& cfg, const Generator& gen, double dt) {
  if (cfg.case_id == 1) {
    const auto u0 = modal_initial_state(gen, cfg.initial, cfg.seed);
    return evolve_modal(gen, u0, dt, cfg.T);
  }
  const auto& d = std::get<ConcentricDiscs>(cfg.domain);
  const RadialGrid grid(d.R0, d.R, cfg.h);
  const auto& op = gen.pieces().front();
  const auto u0 = radial_initial_state(op, grid, cfg.initial, cfg.seed);
  return evolve_radial(op, u0, dt, cfg.T);
}

CsvTable evolve_table(const EvolutionTrace& tr, const QuasiContractionReport& q) {
  CsvTable t{{"t", "energy", "dissipation_1", "dissipation_2", "norm_ratio"}, {}};
  for (std::size_t i = 0; i < tr.times.size(); ++i)
    t.rows.push_back({tr.times[i], tr.energy[i], tr.dissipation_1[i], tr.dissipation_2[i], q.ratios[i]});
  return t;
}

void cmd_evolve(Run& run, const RunConfig& cfg, const Generator& gen, double c0) {
  const auto tr = evolve_case(cfg, gen, cfg.dt);
  const auto q = quasi_contraction_check(tr, c0);
  const auto e = energy_identity_residual(tr, cfg.model, c0);
  run.csv("evolve.csv", evolve_table(tr, q));
  run.svg("evolve.svg",
          {{"energy", tr.times, tr.energy}, {"dissipation_1", tr.times, tr.dissipation_1},
           {"dissipation_2", tr.times, tr.dissipation_2}},
          {"energy balance", "t", "value", false, false});
  run.headline("energy_initial", tr.energy.front(), "evolve.csv");
  run.headline("energy_final", tr.energy.back(), "evolve.csv");
  run.headline("energy_residual", e.max_residual, "evolve.csv");
  run.headline("max_norm_ratio", q.max_ratio, "evolve.csv");
  run.headline("energy_inequality_gap", e.worst_inequality_gap, "evolve.csv");
  run.extra("energy_inequality_holds", e.inequality_holds);

  bool order_ok = true;
  if (cfg.half_step_check) {
    const auto tr2 = evolve_case(cfg, gen, cfg.dt / 2.0);
    const auto q2 = quasi_contraction_check(tr2, c0);
    const auto e2 = energy_identity_residual(tr2, cfg.model, c0);
    run.csv("evolve_half_dt.csv", evolve_table(tr2, q2));
    run.headline("energy_residual_half_dt", e2.max_residual, "evolve_half_dt.csv");
    const double ratio = e2.max_residual > 0 ? e.max_residual / e2.max_residual : 0.0;
    run.headline("residual_ratio", ratio, "evolve_half_dt.csv");
    order_ok = ratio >= 3.5 && ratio <= 4.5;
  }
  run.flag("energy_identity", e.max_residual <= 1e-5 && order_ok);
  run.flag("quasi_contraction", q.pass);
}

void cmd_spectrum(Run& run, const RunConfig& cfg, const Generator& gen, double c0) {
  const Generator b = cfg.shifted ? gen.shifted(-2.0 * c0) : gen;
  const auto spec = spectrum(b);
  CsvTable t{{"re", "im", "block_index"}, {}};
  double omega_spec = -std::numeric_limits<double>::infinity();
  for (const auto& p : spec) {
    t.rows.push_back({p.value.real(), p.value.imag(), static_cast<double>(p.piece)});
    omega_spec = std::max(omega_spec, p.value.real());
  }
  run.csv("spectrum.csv", t);
  run.svg("spectrum.svg", {{"eigenvalues", t.values("re"), t.values("im"), true}},
          {"spectrum", "Re", "Im", false, false});
  run.headline("omega_spec", omega_spec, "spectrum.csv");

  const auto growth = growth_bound(b, linear_times(cfg.growth_T, cfg.growth_points), cfg.norm_options());
  CsvTable g{{"t", "norm"}, {}};
  for (std::size_t i = 0; i < growth.times.size(); ++i) g.rows.push_back({growth.times[i], growth.norms[i]});
  run.csv("growth.csv", g);
  run.svg("growth.svg", {{"semigroup norm", growth.times, growth.norms}},
          {"growth of the semigroup", "t", "norm", false, true});
  run.headline("omega0", growth.omega0, "growth.csv");

  const double anorm = operator_norm(b, cfg.norm_options());
  const auto sm = smoothing_rate(b, log_times(1e-4 / anorm, 1e-1 / anorm, cfg.smoothing_points),
                                 cfg.norm_options());
  CsvTable s{{"t", "norm"}, {}};
  for (std::size_t i = 0; i < sm.times.size(); ++i) s.rows.push_back({sm.times[i], sm.norms[i]});
  run.csv("smoothing.csv", s);
  run.headline("smoothing_slope", sm.slope, "smoothing.csv");

  const bool sdg = omega_spec != 0.0 && std::abs(growth.omega0 - omega_spec) <= 0.05 * std::abs(omega_spec);
  run.flag("sdg", sdg);
  if (cfg.case_id == 1) run.flag("smoothing_slope", sm.slope >= -1.1);
}

void cmd_abscissa(Run& run, const Generator& gen, double c0) {
  CsvTable t{{"block_index", "numerical_abscissa", "spectral_abscissa"}, {}};
  double nu = -std::numeric_limits<double>::infinity(), om = nu;
  const auto spec = spectrum(gen);
  std::vector<double> per(gen.piece_count(), -std::numeric_limits<double>::infinity());
  for (const auto& p : spec) per[p.piece] = std::max(per[p.piece], p.value.real());
  for (std::size_t k = 0; k < gen.piece_count(); ++k) {
    const auto& p = gen.pieces()[k];
    const double v = linalg::numerical_abscissa(p.A, p.G);
    t.rows.push_back({static_cast<double>(k), v, per[k]});
    nu = std::max(nu, v);
    om = std::max(om, per[k]);
  }
  run.csv("abscissa.csv", t);
  run.headline("numerical_abscissa", nu, "abscissa.csv");
  run.headline("spectral_abscissa", om, "abscissa.csv");
  run.headline("shifted_numerical_abscissa", nu - 2.0 * c0, "abscissa.csv");
}

struct Flags {
  std::optional<std::string> config;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  bool paper_literal = false;
  std::optional<int> case_id;
  std::optional<std::string> sweep_csv;
};

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Phase-lag thermoelastic plate toolkit: resolvent sweeps, spectra, energy checks.\n"
               "Every option can also be set through the environment variable shown."};
  app.name("phaselag");
  app.require_subcommand(1, 1);
  app.fallthrough();
  Flags f;
  app.add_option("--config", f.config, "INI config file")->envname("PHASELAG_CONFIG");
  app.add_option("--out", f.out, "output directory (default phaselag_out)")->envname("PHASELAG_OUT");
  app.add_option("--seed", f.seed, "seed for start vectors and random initial data")->envname("PHASELAG_SEED");
  app.add_flag("--paper-literal-generator", f.paper_literal,
               "use the literal index in the last heat row (comparison runs only)")
      ->envname("PHASELAG_PAPER_LITERAL_GENERATOR");
  app.add_option("--case", f.case_id, "1: hinged plate, modal; 2: radial transmission problem")
      ->check(CLI::IsMember({1, 2}))
      ->envname("PHASELAG_CASE");
  app.add_subcommand("spectrum", "eigenvalues, growth bound and smoothing rate");
  app.add_subcommand("resolvent-sweep", "resolvent norms along the imaginary axis");
  auto* gf = app.add_subcommand("gevrey-fit", "power-law fit of resolvent decay");
  gf->add_option("--sweep-csv", f.sweep_csv, "fit an existing sweep.csv instead of sweeping")
      ->envname("PHASELAG_SWEEP_CSV");
  app.add_subcommand("evolve", "time evolution with energy diagnostics");
  app.add_subcommand("abscissa", "numerical and spectral abscissa, default shift");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  RunConfig cfg;
  // configuration phase: every failure here is exit code 2
  try {
    int case_id = 1;
    if (f.case_id) case_id = *f.case_id;
    else if (f.config) case_id = config_case(*f.config).value_or(1);
    cfg = preset(case_id);
    if (f.config) cfg = load_config(*f.config, cfg);
    cfg.case_id = case_id;
    if (f.out) cfg.out_dir = *f.out;
    if (f.seed) cfg.seed = *f.seed;
    if (f.paper_literal) cfg.paper_literal_generator = true;
    validate(cfg.model, cfg.domain);
    fs::create_directories(cfg.out_dir);
  } catch (const ValidationError& e) {
    std::cerr << "phaselag: model.validate: " << e.what() << "\n";
    for (const auto& d : e.diagnostics()) std::cerr << d.message() << "\n";
    try {
      Run(command, cfg).write(2, e.what());
    } catch (const std::exception&) {
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "phaselag: config: " << e.what() << "\n";
    return 2;
  }

  Run run(command, cfg);
  const auto started = std::chrono::steady_clock::now();
  std::string stage = "build";
  try {
    std::cout << "phaselag " << command << " (case " << cfg.case_id << ")\n";
    if (command == "gevrey-fit" && f.sweep_csv) {
      stage = "analysis.gevrey_fit";
      cmd_gevrey(run, cfg, fs::path(*f.sweep_csv), {});
    } else {
      Generator gen;
      try {
        gen = build_generator(cfg);
      } catch (const ConfigError& e) {
        std::cerr << "phaselag: " << e.what() << "\n";
        run.write(2, e.what());
        return 2;
      }
      stage = "analysis.numerical_abscissa";
      const double nu = numerical_abscissa(gen);
      const double c0 = cfg.c0.value_or(std::max(0.0, nu));
      run.csv("shift.csv", CsvTable{{"c0", "numerical_abscissa"}, {{c0, nu}}});
      run.headline("c0", c0, "shift.csv");
      run.extra("decoupled", cfg.model.decoupled());
      if (command == "resolvent-sweep") {
        stage = "analysis.resolvent_sweep";
        cmd_sweep(run, cfg, gen, c0);
      } else if (command == "gevrey-fit") {
        stage = "analysis.gevrey_fit";
        cmd_gevrey(run, cfg, std::nullopt, [&] { return std::make_pair(gen, c0); });
      } else if (command == "evolve") {
        stage = "timeevo.evolve";
        cmd_evolve(run, cfg, gen, c0);
      } else if (command == "spectrum") {
        stage = "analysis.spectrum";
        cmd_spectrum(run, cfg, gen, c0);
      } else {
        stage = "analysis.abscissa";
        cmd_abscissa(run, gen, c0);
      }
    }
    run.write(0);
  } catch (const ConfigError& e) {
    std::cerr << "phaselag: config: " << e.what() << "\n";
    run.write(2, e.what());
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "phaselag: " << stage << " failed: " << e.what() << "\n";
    try {
      run.write(3, stage + ": " + e.what());
    } catch (const std::exception&) {
    }
    return 3;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::cout << "  elapsed_seconds = " << secs << "\n";
  return 0;
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace phaselag
