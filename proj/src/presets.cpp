#include "phaselag/cli.hpp"

namespace phaselag {

linalg::NormOptions RunConfig::norm_options() const {
  linalg::NormOptions o;
  o.max_iterations = max_iterations;
  o.tolerance = tolerance;
  o.seed = seed;
  o.block_size = block_size;
  return o;
}

RunConfig preset(int case_id) {
  RunConfig cfg;
  cfg.case_id = case_id;
  cfg.model.a = {1.0, 0.5};
  cfg.model.b = {1.0, 0.25};
  cfg.model.kappa1 = 1.0;
  if (case_id == 1) {
    cfg.model.beta = 1.0;
    cfg.domain = Rectangle{1.0, 1.0};
    cfg.modes = 200;
  } else if (case_id == 2) {
    cfg.model.beta = 0.5;
    cfg.model.kappa2 = 2.0;
    cfg.domain = ConcentricDiscs{0.5, 1.0};
    cfg.h = 1.0 / 64.0;
  } else {
    throw ConfigError("case must be 1 or 2, got " + std::to_string(case_id));
  }
  return cfg;
}

}  // namespace phaselag
