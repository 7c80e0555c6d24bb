#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "phaselag/cli.hpp"

namespace phaselag {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s = {
      {"run", {"case"}},
      {"model",
       {"a", "b", "n", "tau_q", "tau_theta", "k_cond", "rho", "c_T", "kappa1", "kappa2", "beta",
        "paper_literal_generator"}},
      {"domain", {"type", "L1", "L2", "L", "R0", "R"}},
      {"sweep",
       {"modes", "h", "decade_lo", "decade_hi", "per_decade", "shifted", "c0", "convergence_check"}},
      {"fit", {"decades", "window_lo", "window_hi"}},
      {"evolve",
       {"initial", "dt", "T", "half_step_check", "growth_T", "growth_points", "smoothing_points"}},
      {"output", {"dir", "svg"}},
      {"numerics", {"seed", "max_iterations", "tolerance", "block_size"}},
  };
  return s;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

double to_double(const std::string& where, const std::string& text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError(where + ": expected a number, got '" + text + "'");
  return v;
}

long long to_integer(const std::string& where, const std::string& text) {
  const std::string t = trim(text);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError(where + ": expected an integer, got '" + text + "'");
  return v;
}

std::size_t to_count(const std::string& where, const std::string& text) {
  const auto v = to_integer(where, text);
  if (v < 0) throw ConfigError(where + ": must be >= 0");
  return static_cast<std::size_t>(v);
}

bool to_bool(const std::string& where, const std::string& text) {
  const std::string t = trim(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ConfigError(where + ": expected true or false, got '" + text + "'");
}

std::vector<double> to_list(const std::string& where, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(where, item));
  if (out.empty()) throw ConfigError(where + ": empty list");
  return out;
}

pt::ptree parse_tree(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  for (const auto& [section, body] : tree) {
    const auto it = schema().find(section);
    if (it == schema().end() || !body.data().empty())
      throw ConfigError("config: unknown section or top-level key '" + section + "'");
    for (const auto& [key, value] : body)
      if (!it->second.count(key)) throw ConfigError("config: unknown key '" + section + "." + key + "'");
  }
  return tree;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

RunConfig parse_config(const std::string& text, RunConfig cfg) {
  const pt::ptree tree = parse_tree(text);
  auto get = [&](const std::string& section, const std::string& key) -> std::optional<std::string> {
    if (const auto s = tree.get_child_optional(section))
      if (const auto v = s->get_optional<std::string>(pt::ptree::path_type(key, '\0'))) return *v;
    return std::nullopt;
  };
  auto num = [&](const char* s, const char* k, auto& dst) {
    if (auto v = get(s, k)) dst = to_double(std::string(s) + "." + k, *v);
  };
  auto count = [&](const char* s, const char* k, auto& dst) {
    if (auto v = get(s, k)) dst = static_cast<std::remove_reference_t<decltype(dst)>>(to_count(std::string(s) + "." + k, *v));
  };
  auto flag = [&](const char* s, const char* k, bool& dst) {
    if (auto v = get(s, k)) dst = to_bool(std::string(s) + "." + k, *v);
  };

  if (auto v = get("run", "case")) {
    const auto c = to_integer("run.case", *v);
    if (c != 1 && c != 2) throw ConfigError("run.case: must be 1 or 2");
    cfg.case_id = static_cast<int>(c);
  }

  // [model]
  auto& m = cfg.model;
  const bool has_taylor = get("model", "tau_q") || get("model", "tau_theta") || get("model", "n") ||
                          get("model", "k_cond");
  if (has_taylor) {
    if (get("model", "a") || get("model", "b"))
      throw ConfigError("model: give either a/b or n/tau_q/tau_theta/k_cond, not both");
    double tq = 0.0, tt = 0.0, k = 1.0;
    long long n = 1;
    num("model", "tau_q", tq);
    num("model", "tau_theta", tt);
    num("model", "k_cond", k);
    if (auto v = get("model", "n")) n = to_integer("model.n", *v);
    try {
      const auto t = taylor_coefficients(tq, tt, k, static_cast<int>(n));
      m.a = t.a;
      m.b = t.b;
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("model: ") + e.what());
    }
  }
  if (auto v = get("model", "a")) m.a = to_list("model.a", *v);
  if (auto v = get("model", "b")) m.b = to_list("model.b", *v);
  num("model", "rho", m.rho);
  num("model", "c_T", m.c_T);
  num("model", "kappa1", m.kappa1);
  if (auto v = get("model", "kappa2")) m.kappa2 = to_double("model.kappa2", *v);
  num("model", "beta", m.beta);
  flag("model", "paper_literal_generator", cfg.paper_literal_generator);

  // [domain]
  if (auto type = get("domain", "type")) {
    const std::string t = trim(*type);
    if (t == "rectangle") cfg.domain = Rectangle{};
    else if (t == "interval") cfg.domain = Interval{};
    else if (t == "concentric_discs") cfg.domain = ConcentricDiscs{};
    else throw ConfigError("domain.type: expected rectangle, interval or concentric_discs, got '" + t + "'");
  }
  if (auto* r = std::get_if<Rectangle>(&cfg.domain)) {
    num("domain", "L1", r->L1);
    num("domain", "L2", r->L2);
  } else if (auto* i = std::get_if<Interval>(&cfg.domain)) {
    num("domain", "L", i->L);
  } else {
    auto& c = std::get<ConcentricDiscs>(cfg.domain);
    num("domain", "R0", c.R0);
    num("domain", "R", c.R);
  }
  for (const char* key : {"L1", "L2", "L", "R0", "R"}) {
    const bool fits = (std::holds_alternative<Rectangle>(cfg.domain) && (key == std::string("L1") || key == std::string("L2"))) ||
                      (std::holds_alternative<Interval>(cfg.domain) && key == std::string("L")) ||
                      (std::holds_alternative<ConcentricDiscs>(cfg.domain) && (key == std::string("R0") || key == std::string("R")));
    if (get("domain", key) && !fits)
      throw ConfigError(std::string("domain.") + key + ": not used by domain type " + domain_name(cfg.domain));
  }

  // [sweep]
  count("sweep", "modes", cfg.modes);
  num("sweep", "h", cfg.h);
  num("sweep", "decade_lo", cfg.gamma.lo_decade);
  num("sweep", "decade_hi", cfg.gamma.hi_decade);
  if (auto v = get("sweep", "per_decade")) cfg.gamma.per_decade = static_cast<int>(to_count("sweep.per_decade", *v));
  flag("sweep", "shifted", cfg.shifted);
  if (auto v = get("sweep", "c0")) cfg.c0 = to_double("sweep.c0", *v);
  flag("sweep", "convergence_check", cfg.convergence_check);

  // [fit]
  num("fit", "decades", cfg.fit_decades);
  if (auto v = get("fit", "window_lo")) cfg.fit_lo = to_double("fit.window_lo", *v);
  if (auto v = get("fit", "window_hi")) cfg.fit_hi = to_double("fit.window_hi", *v);

  // [evolve]
  if (auto v = get("evolve", "initial")) {
    try {
      cfg.initial = parse_initial_data(trim(*v));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("evolve.initial: ") + e.what());
    }
  }
  num("evolve", "dt", cfg.dt);
  num("evolve", "T", cfg.T);
  flag("evolve", "half_step_check", cfg.half_step_check);
  num("evolve", "growth_T", cfg.growth_T);
  count("evolve", "growth_points", cfg.growth_points);
  count("evolve", "smoothing_points", cfg.smoothing_points);

  // [output]
  if (auto v = get("output", "dir")) cfg.out_dir = trim(*v);
  flag("output", "svg", cfg.svg);

  // [numerics]
  if (auto v = get("numerics", "seed")) cfg.seed = static_cast<std::uint64_t>(to_integer("numerics.seed", *v));
  if (auto v = get("numerics", "max_iterations")) cfg.max_iterations = static_cast<int>(to_count("numerics.max_iterations", *v));
  num("numerics", "tolerance", cfg.tolerance);
  count("numerics", "block_size", cfg.block_size);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  return parse_config(read_file(path), std::move(base));
}

std::optional<int> config_case(const std::filesystem::path& path) {
  const auto tree = parse_tree(read_file(path));
  if (const auto v = tree.get_optional<std::string>("run.case")) {
    const auto c = to_integer("run.case", *v);
    if (c != 1 && c != 2) throw ConfigError("run.case: must be 1 or 2");
    return static_cast<int>(c);
  }
  return std::nullopt;
}

}  // namespace phaselag
