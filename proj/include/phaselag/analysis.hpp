#ifndef PHASELAG_ANALYSIS_HPP
#define PHASELAG_ANALYSIS_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "phaselag/linalg.hpp"
#include "phaselag/modal.hpp"
#include "phaselag/operator.hpp"

namespace phaselag {

/**
 * A generator given as a G-orthogonal direct sum of pieces.
 *
 * Case 1 has one piece per Dirichlet mode, Case 2 a single piece. Every
 * analysis below works piece by piece and reduces with a max, which is exact
 * because the pieces are orthogonal in the energy inner product.
 */
class Generator {
public:
  Generator() = default;
  static Generator from_blocks(const std::vector<ModalBlock>& blocks);
  static Generator from_operator(DiscreteOperator op);

  const std::vector<DiscreteOperator>& pieces() const { return pieces_; }
  std::size_t piece_count() const { return pieces_.size(); }
  std::size_t dim() const { return offsets_.empty() ? 0 : offsets_.back(); }
  /// First state index of piece k; offset(piece_count()) == dim().
  std::size_t offset(std::size_t k) const { return offsets_.at(k); }

  /// A + s·I on every piece; Gram matrices and forms are shared.
  Generator shifted(double s) const;

private:
  std::vector<DiscreteOperator> pieces_;
  std::vector<std::size_t> offsets_{0};
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y ≈ intercept + slope·x. Needs two distinct x.
LineFit least_squares_line(std::span<const double> x, std::span<const double> y);

/// Log-spaced frequencies 10^(lo + k/per_decade), k = 0..(hi − lo)·per_decade.
struct GammaGrid {
  double lo_decade = 0.0;
  double hi_decade = 6.0;
  int per_decade = 20;

  std::vector<double> values() const;
};

struct SweepOptions {
  /// The sweep uses 𝔅 = A − 2c₀I when shifted is set.
  double c0 = 0.0;
  bool shifted = true;
  /// Record +∞ at points of the spectrum instead of throwing SweepError.
  bool allow_singular = false;
  linalg::NormOptions norm;
};

struct ResolventSweep {
  std::vector<double> gamma;
  std::vector<double> norms;  ///< ‖(iγ − 𝔅)⁻¹‖_G
  std::vector<double> gamma_times_norm;
  std::vector<std::size_t> argmax_piece;  ///< piece attaining each norm
  bool shifted = true;
  double c0 = 0.0;
  double operator_norm = 0.0;  ///< ‖𝔅‖_G, scale for the axis test
};

/// iγ hit the spectrum of one of the pieces.
class SweepError : public std::runtime_error {
public:
  SweepError(double gamma, linalg::cplx nearest);
  double gamma() const noexcept { return gamma_; }
  linalg::cplx nearest_eigenvalue() const noexcept { return nearest_; }

private:
  double gamma_;
  linalg::cplx nearest_;
};

/// Per-γ norms, max over pieces, evaluated in parallel; samples in grid order.
ResolventSweep resolvent_sweep(const Generator& gen, std::span<const double> gamma,
                               const SweepOptions& opts = {});

struct AxisReport {
  double min_singular_value = 0.0;  ///< min over γ of 1/norm
  double argmin_gamma = 0.0;
  double threshold = 0.0;           ///< 1e-12·‖𝔅‖_G
  bool pass = false;
};
AxisReport verify_imaginary_axis(const ResolventSweep& sweep);

struct AnalyticityIndicator {
  double sup_gamma_norm = 0.0;
  double argsup_gamma = 0.0;
  double tail_slope = 0.0;  ///< slope of log(γ·norm) vs log γ on the top decade
};
AnalyticityIndicator analyticity_indicator(std::span<const double> gamma,
                                           std::span<const double> norms);
AnalyticityIndicator analyticity_indicator(const ResolventSweep& sweep);

struct GevreyFit {
  double varsigma = 0.0;  ///< norm ≈ C·γ^(−ς)
  double C = 0.0;
  double r_squared = 0.0;
  double window_lo = 0.0;  ///< γ range used
  double window_hi = 0.0;
  std::size_t samples = 0;
};

/// Fit over samples with window_lo ≤ γ ≤ window_hi. Throws std::invalid_argument
/// for fewer than 10 samples or a constant window.
GevreyFit gevrey_fit(std::span<const double> gamma, std::span<const double> norms,
                     double window_lo, double window_hi);
/// Fit over the top `decades` decades of the sweep.
GevreyFit gevrey_fit(const ResolventSweep& sweep, double decades = 3.0);

struct SpectralPoint {
  linalg::cplx value;
  std::size_t piece = 0;
};
/// Eigenvalues of every piece, piece by piece.
std::vector<SpectralPoint> spectrum(const Generator& gen);
double spectral_abscissa(const Generator& gen);

/// max over pieces of the numerical abscissa in the G inner product.
double numerical_abscissa(const Generator& gen);
/// c₀ = max(0, numerical abscissa): the smallest shift making 𝔅 dissipative.
double default_shift(const Generator& gen);
/// max over pieces of ‖A_k‖_G.
double operator_norm(const Generator& gen, const linalg::NormOptions& opts = {});

struct GrowthFit {
  std::vector<double> times;
  std::vector<double> norms;  ///< ‖e^{tA}‖_G
  double omega0 = 0.0;        ///< slope of log norm vs t over t ≥ T/2
};

/// Throws linalg::OverflowError (with a hint to shift) on overflow.
GrowthFit growth_bound(const Generator& gen, std::span<const double> times,
                       const linalg::NormOptions& opts = {});

struct SmoothingFit {
  std::vector<double> times;
  std::vector<double> norms;  ///< ‖A e^{tA}‖_G
  double slope = 0.0;         ///< of log norm vs log t
};
SmoothingFit smoothing_rate(const Generator& gen, std::span<const double> times,
                            const linalg::NormOptions& opts = {});

/// n log-spaced times in [lo, hi].
std::vector<double> log_times(double lo, double hi, std::size_t n);
/// n + 1 equally spaced times in [0, T].
std::vector<double> linear_times(double T, std::size_t n);

}  // namespace phaselag

#endif  // PHASELAG_ANALYSIS_HPP
