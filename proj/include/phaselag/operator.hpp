#ifndef PHASELAG_OPERATOR_HPP
#define PHASELAG_OPERATOR_HPP

#include <string>
#include <vector>

#include "phaselag/linalg.hpp"

namespace phaselag {

/// A named contiguous range of the state vector.
struct Slice {
  std::string name;
  std::size_t offset = 0;
  std::size_t size = 0;
};

/**
 * Assembled generator with the Gram matrix of the discrete energy norm.
 *
 * The four Hermitian forms split the energy balance: with U' = A U,
 *   dE/dt = Re Uᴴ(heat_form + exchange_form)U,
 * where E = ½‖U‖²_G. heat_form is the conductive term −Σ b_j ∇Θ_j·∇ϑ and
 * exchange_form the lag-chain term Σ ∇Θ_{j+1}·∇Θ_j. The gradient forms give
 * ‖∇Θ_n‖² and Σ_{j<n} ‖∇Θ_j‖² for the energy inequality.
 */
struct DiscreteOperator {
  linalg::ComplexMatrix A;
  linalg::GramMatrix G;
  linalg::ComplexMatrix heat_form;
  linalg::ComplexMatrix exchange_form;
  linalg::ComplexMatrix top_gradient_form;
  linalg::ComplexMatrix lower_gradient_form;
  std::vector<Slice> layout;

  std::size_t dim() const { return A.rows(); }
  /// Throws std::out_of_range for an unknown name.
  const Slice& slice(const std::string& name) const;
};

}  // namespace phaselag

#endif  // PHASELAG_OPERATOR_HPP
