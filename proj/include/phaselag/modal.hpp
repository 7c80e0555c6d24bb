#ifndef PHASELAG_MODAL_HPP
#define PHASELAG_MODAL_HPP

#include <cstddef>
#include <vector>

#include "phaselag/linalg.hpp"
#include "phaselag/model.hpp"
#include "phaselag/operator.hpp"

namespace phaselag {

/// Eigenpair label of the Dirichlet Laplacian, −Δφ = dφ. m2 = 0 on an interval.
struct DirichletMode {
  int m1 = 1;
  int m2 = 0;
  double d = 0.0;
};

/// Which last row to use for the Θ_n equation.
///
/// consistent:    Θ_n' = (1/a_n)[−βd v − dΣ b_jΘ_j − Σ_{j<n} a_jΘ_{j+1}]
/// paper_literal: same, with Σ_{j<n} a_jΘ_j in the last sum. Kept only for
///                comparison runs; it is not equivalent to the scalar
///                phase-lag equation and breaks the energy identity.
enum class GeneratorVariant { consistent, paper_literal };

/**
 * One mode of the hinged plate. State is (u, v, Θ_0, …, Θ_n).
 * The four forms are the per-mode counterparts of those on DiscreteOperator.
 */
struct ModalBlock {
  DirichletMode mode;
  linalg::ComplexMatrix M;
  linalg::GramMatrix G;
  linalg::ComplexMatrix heat_form;
  linalg::ComplexMatrix exchange_form;
  linalg::ComplexMatrix top_gradient_form;
  linalg::ComplexMatrix lower_gradient_form;

  std::size_t size() const { return M.rows(); }
};

/// The K smallest modes, ascending in d, ties ordered by (m1, m2).
/// Throws std::invalid_argument for concentric discs or K = 0.
std::vector<DirichletMode> dirichlet_eigenvalues(const DomainSpec& domain, std::size_t K);

ModalBlock assemble_block(const PhaseLagModel& model, const DirichletMode& mode,
                          GeneratorVariant variant = GeneratorVariant::consistent);

/// Blocks for the first K modes, assembled in parallel, in mode order.
std::vector<ModalBlock> assemble_blocks(const PhaseLagModel& model, const DomainSpec& domain,
                                        std::size_t K,
                                        GeneratorVariant variant = GeneratorVariant::consistent);

/// Direct sum of the first K blocks. Layout slices are "mode<k>".
DiscreteOperator assemble_full(const PhaseLagModel& model, const DomainSpec& domain,
                               std::size_t K,
                               GeneratorVariant variant = GeneratorVariant::consistent);

DiscreteOperator to_operator(const ModalBlock& block);

}  // namespace phaselag

#endif  // PHASELAG_MODAL_HPP
