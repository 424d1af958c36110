#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sgsc/bounds.hpp"

namespace sgsc {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Projection of the coefficient used by the SG methods.
struct ProjectionRule {
  enum class Kind { Exact, OrderEqualsP, Fixed } kind = Kind::Exact;
  int order = 0;  ///< for Fixed
};

struct Scenario {
  std::string model = "inclusion";
  std::size_t N = 4;
  int rbar = 1;
  double Lc = 0.5;
  int mesh_n = 16;
  std::vector<std::string> methods{"SG-TD", "SG-SM", "SC-CC", "SC-GL", "SC-LJ"};
  int order_min = 0, order_max = 4;
  int level_min = 0, level_max = 4;
  int reference_level = 6;
  ProjectionRule projection;
  double first_pass_tol = 1e-12;
  int max_iter = 5000;

  /// Throws ConfigError naming the offending key.
  void validate() const;
};

Scenario parse_scenario(const std::string& toml_text, const std::string& source = "<string>");
Scenario load_scenario(const std::string& path);

struct BoundsConfig {
  RateConstants constants;
  std::vector<double> eps;
  int rbar = 1;
};

BoundsConfig parse_bounds_config(const std::string& toml_text, const std::string& source = "<string>");
BoundsConfig load_bounds_config(const std::string& path);

}  // namespace sgsc
