#include "sgsc/config.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#define TOML_EXCEPTIONS 1
#include <toml.hpp>

namespace sgsc {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

toml::table parse(const std::string& text, const std::string& source) {
  try {
    return toml::parse(text, source);
  } catch (const toml::parse_error& e) {
    std::ostringstream os;
    os << source << ":" << e.source().begin.line << ":" << e.source().begin.column << ": "
       << e.description();
    throw ConfigError(os.str());
  }
}

void check_keys(const toml::table& t, const std::string& prefix, const std::set<std::string>& allowed) {
  for (const auto& [k, v] : t) {
    std::string key(k.str());
    if (!allowed.count(key)) throw ConfigError("unknown key '" + prefix + key + "'");
  }
}

const toml::table* subtable(const toml::table& t, const std::string& name) {
  const auto* node = t.get(name);
  if (!node) return nullptr;
  if (!node->is_table()) throw ConfigError("key '" + name + "' must be a table");
  return node->as_table();
}

template <class T>
std::optional<T> get(const toml::table* t, const std::string& prefix, const std::string& key) {
  if (!t) return std::nullopt;
  const auto* node = t->get(key);
  if (!node) return std::nullopt;
  if constexpr (std::is_same_v<T, double>) {
    if (auto v = node->value<double>()) return *v;
    throw ConfigError("key '" + prefix + key + "' must be a number");
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (auto v = node->value<std::string>()) return *v;
    throw ConfigError("key '" + prefix + key + "' must be a string");
  } else {
    if (node->is_integer()) return T(node->as_integer()->get());
    throw ConfigError("key '" + prefix + key + "' must be an integer");
  }
}

template <class T>
T require(const toml::table* t, const std::string& prefix, const std::string& key) {
  auto v = get<T>(t, prefix, key);
  if (!v) throw ConfigError("missing required key '" + prefix + key + "'");
  return *v;
}

std::pair<int, int> int_range(const toml::table* t, const std::string& prefix, const std::string& key,
                              std::pair<int, int> def) {
  if (!t) return def;
  const auto* node = t->get(key);
  if (!node) return def;
  const auto* arr = node->as_array();
  if (!arr || arr->size() != 2 || !(*arr)[0].is_integer() || !(*arr)[1].is_integer())
    throw ConfigError("key '" + prefix + key + "' must be an array of two integers [min, max]");
  int a = int((*arr)[0].as_integer()->get()), b = int((*arr)[1].as_integer()->get());
  if (a > b) throw ConfigError("key '" + prefix + key + "' has min > max");
  return {a, b};
}

}  // namespace

void Scenario::validate() const {
  if (model != "inclusion" && model != "poly" && model != "logkl")
    throw ConfigError("key 'model' must be one of inclusion, poly, logkl");
  if (N < 1) throw ConfigError("key 'N' must be >= 1");
  if (model == "inclusion" && N > 8) throw ConfigError("key 'N' must be <= 8 for the inclusion model");
  if (model == "poly" && rbar < 1) throw ConfigError("key 'rbar' must be >= 1");
  if (model == "logkl" && !(Lc > 0.0)) throw ConfigError("key 'Lc' must be positive");
  if (mesh_n < 2) throw ConfigError("key 'mesh.n' must be >= 2");
  if (order_min < 0) throw ConfigError("key 'sg.orders' must be non-negative");
  if (level_min < 0) throw ConfigError("key 'sc.levels' must be non-negative");
  if (reference_level < level_max + 2)
    throw ConfigError("key 'sc.reference_level' must be at least max level + 2");
  static const std::set<std::string> known{"SG-TD", "SG-SM", "SC-CC", "SC-GL", "SC-LJ"};
  for (const auto& m : methods)
    if (!known.count(m)) throw ConfigError("key 'methods' has unknown method '" + m + "'");
  if (model == "logkl" && projection.kind == ProjectionRule::Kind::Exact)
    throw ConfigError("key 'sg.projection' cannot be \"exact\" for the transcendental model");
  if (projection.kind == ProjectionRule::Kind::Fixed && projection.order < 0)
    throw ConfigError("key 'sg.projection' must be >= 0");
  if (!(first_pass_tol > 0.0)) throw ConfigError("key 'solver.first_pass_tol' must be positive");
  if (max_iter < 1) throw ConfigError("key 'solver.max_iter' must be >= 1");
}

Scenario parse_scenario(const std::string& text, const std::string& source) {
  auto tbl = parse(text, source);
  check_keys(tbl, "", {"model", "N", "rbar", "Lc", "methods", "mesh", "sg", "sc", "solver"});
  Scenario s;
  s.model = require<std::string>(&tbl, "", "model");
  const auto N = require<long long>(&tbl, "", "N");
  if (N < 1 || N > 64) throw ConfigError("key 'N' must lie in [1, 64]");
  s.N = std::size_t(N);
  if (auto v = get<int>(&tbl, "", "rbar")) s.rbar = *v;
  if (auto v = get<double>(&tbl, "", "Lc")) s.Lc = *v;
  if (const auto* node = tbl.get("methods")) {
    const auto* arr = node->as_array();
    if (!arr) throw ConfigError("key 'methods' must be an array of strings");
    s.methods.clear();
    for (const auto& m : *arr) {
      auto v = m.value<std::string>();
      if (!v) throw ConfigError("key 'methods' must be an array of strings");
      s.methods.push_back(*v);
    }
  }
  if (const auto* mesh = subtable(tbl, "mesh")) {
    check_keys(*mesh, "mesh.", {"n"});
    if (auto v = get<int>(mesh, "mesh.", "n")) s.mesh_n = *v;
  }
  if (const auto* sg = subtable(tbl, "sg")) {
    check_keys(*sg, "sg.", {"orders", "projection"});
    std::tie(s.order_min, s.order_max) = int_range(sg, "sg.", "orders", {s.order_min, s.order_max});
    if (const auto* node = sg->get("projection")) {
      if (node->is_integer()) {
        s.projection = {ProjectionRule::Kind::Fixed, int(node->as_integer()->get())};
      } else if (auto str = node->value<std::string>()) {
        if (*str == "exact") s.projection = {ProjectionRule::Kind::Exact, 0};
        else if (*str == "r=p") s.projection = {ProjectionRule::Kind::OrderEqualsP, 0};
        else throw ConfigError("key 'sg.projection' must be \"exact\", \"r=p\" or an integer");
      } else {
        throw ConfigError("key 'sg.projection' must be \"exact\", \"r=p\" or an integer");
      }
    }
  }
  const bool projection_given = tbl["sg"]["projection"].node() != nullptr;
  if (s.model == "logkl" && !projection_given) s.projection = {ProjectionRule::Kind::OrderEqualsP, 0};
  if (const auto* sc = subtable(tbl, "sc")) {
    check_keys(*sc, "sc.", {"levels", "reference_level"});
    std::tie(s.level_min, s.level_max) = int_range(sc, "sc.", "levels", {s.level_min, s.level_max});
    if (auto v = get<int>(sc, "sc.", "reference_level")) s.reference_level = *v;
  }
  if (const auto* sol = subtable(tbl, "solver")) {
    check_keys(*sol, "solver.", {"first_pass_tol", "max_iter"});
    if (auto v = get<double>(sol, "solver.", "first_pass_tol")) s.first_pass_tol = *v;
    if (auto v = get<int>(sol, "solver.", "max_iter")) s.max_iter = *v;
  }
  s.validate();
  return s;
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path), path); }

BoundsConfig parse_bounds_config(const std::string& text, const std::string& source) {
  auto tbl = parse(text, source);
  check_keys(tbl, "", {"constants", "eps", "rbar"});
  BoundsConfig cfg;
  auto& c = cfg.constants;
  if (const auto* t = subtable(tbl, "constants")) {
    const std::string p = "constants.";
    check_keys(*t, p, {"C_FEM", "s", "d", "C1", "C2", "C3", "C4", "C5", "C6", "C7", "alpha", "beta",
                       "kappa", "kappa_sc", "C8", "C9", "C10", "C11", "C_sc", "r", "N"});
    auto set = [&](const char* key, double& field) {
      if (auto v = get<double>(t, p, key)) field = *v;
    };
    set("C_FEM", c.C_FEM); set("s", c.s); set("d", c.d);
    set("C1", c.C1); set("C2", c.C2); set("C3", c.C3); set("C4", c.C4);
    set("C5", c.C5); set("C6", c.C6); set("C7", c.C7);
    set("alpha", c.alpha); set("beta", c.beta);
    set("kappa", c.kappa); set("kappa_sc", c.kappa_sc);
    set("C8", c.C8); set("C9", c.C9); set("C10", c.C10); set("C11", c.C11);
    set("C_sc", c.C_sc); set("r", c.r_sc);
    if (auto v = get<int>(t, p, "N")) c.N = *v;
  }
  if (const auto* node = tbl.get("eps")) {
    const auto* arr = node->as_array();
    if (!arr) throw ConfigError("key 'eps' must be an array of numbers");
    for (const auto& e : *arr) {
      auto v = e.value<double>();
      if (!v || !(*v > 0.0)) throw ConfigError("key 'eps' must contain positive numbers");
      cfg.eps.push_back(*v);
    }
  } else {
    for (int k = 1; k <= 12; ++k) cfg.eps.push_back(std::pow(10.0, -k));
  }
  if (auto v = get<int>(&tbl, "", "rbar")) cfg.rbar = *v;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("table 'constants': ") + e.what());
  }
  return cfg;
}

BoundsConfig load_bounds_config(const std::string& path) {
  return parse_bounds_config(read_file(path), path);
}

}  // namespace sgsc
