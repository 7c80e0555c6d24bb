#ifndef PHASELAG_RADIAL_HPP
#define PHASELAG_RADIAL_HPP

#include <cstddef>
#include <vector>

#include "phaselag/linalg.hpp"
#include "phaselag/modal.hpp"
#include "phaselag/model.hpp"
#include "phaselag/operator.hpp"

namespace phaselag {

enum class Region { full, disc, annulus };

/**
 * Cell-centred radial grid on (0, R): r_i = (i + ½)h, i = 0..N−1.
 * The interface R0 must fall on a cell face, so nodes i < R0/h belong to the
 * elastic disc and the rest to the thermoelastic annulus. No node sits at r = 0.
 */
class RadialGrid {
public:
  /// Throws std::invalid_argument unless h divides R0 and R − R0 to 1e-12.
  RadialGrid(double R0, double R, double h);

  double R0() const { return R0_; }
  double R() const { return R_; }
  double h() const { return h_; }
  std::size_t size() const { return n_; }
  std::size_t disc_size() const { return nd_; }
  std::size_t annulus_size() const { return n_ - nd_; }

  double r(std::size_t i) const { return (static_cast<double>(i) + 0.5) * h_; }
  /// 2π r_i h: midpoint rule for ∫ f dA on the cell.
  double weight(std::size_t i) const;
  Region region(std::size_t i) const { return i < nd_ ? Region::disc : Region::annulus; }

  std::vector<double> nodes(Region region = Region::full) const;
  std::vector<double> weights(Region region = Region::full) const;

  RadialGrid refine() const;

private:
  double R0_, R_, h_;
  std::size_t n_, nd_;
};

/// Which faces of the chosen region carry a homogeneous Dirichlet condition.
/// Faces without one are zero-flux; the face at r = 0 always is.
struct RadialBoundary {
  bool inner_dirichlet = false;
  bool outer_dirichlet = true;
};

/**
 * Conservative Δf = (1/r)(r f')' restricted to a region:
 *   (Δ_h f)_i = [r_{i+½}(f_{i+1} − f_i) − r_{i−½}(f_i − f_{i−1})] / (r_i h²).
 * Dirichlet faces use the ghost value f_ghost = −f_i (zero at the face).
 */
linalg::ComplexMatrix radial_laplacian(const RadialGrid& grid, Region region,
                                       RadialBoundary bc = {});

/**
 * Generator of the radially symmetric transmission problem.
 *
 * The plate displacement is one grid function over (0, R): v on the disc,
 * u on the annulus, and likewise the velocities z and w. The fourth-order
 * operator is applied as Δ_h(K Δ_h ·) with K = κ₂ on the disc and κ₁ on the
 * annulus, so the four interface conditions (u = v, u_r = v_r, continuity of
 * moment and of shear) hold through the shared stencil at the face r = R0.
 * Θ_0..Θ_n live on the annulus with Θ_j = 0 at r = R0 and r = R.
 *
 * Layout slices: v, u, z, w, theta0..thetan.
 * Throws std::invalid_argument if either side has fewer than 4 nodes or the
 * model has no kappa2.
 */
DiscreteOperator assemble_transmission(const PhaseLagModel& model, const RadialGrid& grid,
                                       GeneratorVariant variant = GeneratorVariant::consistent);

}  // namespace phaselag

#endif  // PHASELAG_RADIAL_HPP
