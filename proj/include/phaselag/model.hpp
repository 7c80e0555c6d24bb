#ifndef PHASELAG_MODEL_HPP
#define PHASELAG_MODEL_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace phaselag {

/**
 * Coefficients of the phase-lag thermoelastic plate.
 *
 * The order n is implied by the coefficient vectors: a and b both hold
 * n + 1 entries. kappa2 is only meaningful for the transmission problem,
 * where it is the stiffness of the purely elastic inner disc.
 */
struct PhaseLagModel {
  std::vector<double> a;
  std::vector<double> b;
  double rho = 1.0;
  double c_T = 1.0;
  double kappa1 = 1.0;
  std::optional<double> kappa2;
  double beta = 0.0;

  int order() const { return static_cast<int>(a.size()) - 1; }
  /// beta = 0 is accepted for closed-form tests, but reports flag it.
  bool decoupled() const { return beta == 0.0; }
};

struct Rectangle {
  double L1 = 1.0;
  double L2 = 1.0;
};
struct Interval {
  double L = 1.0;
};
/// Elastic disc r < R0 surrounded by the thermoelastic annulus R0 < r < R.
struct ConcentricDiscs {
  double R0 = 0.5;
  double R = 1.0;
};
using DomainSpec = std::variant<Rectangle, Interval, ConcentricDiscs>;

std::string domain_name(const DomainSpec& d);

/// One violated invariant.
struct Diagnostic {
  std::string field;
  std::string constraint;  ///< e.g. "a_n > 0"
  double actual = 0.0;

  std::string message() const;  ///< "a_n > 0 violated (actual: 0)"
};

class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diags_; }

private:
  std::vector<Diagnostic> diags_;
};

struct TaylorCoefficients {
  std::vector<double> a;
  std::vector<double> b;
};

/// a_j = tau_q^j / j!, b_j = k * tau_theta^j / j! for j = 0..n.
/// Throws std::invalid_argument ("degenerate a_n") when n >= 1 and tau_q = 0.
TaylorCoefficients taylor_coefficients(double tau_q, double tau_theta,
                                       double k_cond, int n);

/// Every violated invariant, in a fixed order. Empty means valid.
std::vector<Diagnostic> check(const PhaseLagModel& model, const DomainSpec& domain);

/// Returns the model unchanged or throws ValidationError listing all problems.
PhaseLagModel validate(const PhaseLagModel& model, const DomainSpec& domain);

}  // namespace phaselag

#endif  // PHASELAG_MODEL_HPP
