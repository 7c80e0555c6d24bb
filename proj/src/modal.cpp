#include "phaselag/modal.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "phaselag/parallel.hpp"

namespace phaselag {

using linalg::ComplexMatrix;
using linalg::GramMatrix;

std::vector<DirichletMode> dirichlet_eigenvalues(const DomainSpec& domain, std::size_t K) {
  if (K == 0) throw std::invalid_argument("dirichlet_eigenvalues: K must be >= 1");
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  std::vector<DirichletMode> modes;
  if (const auto* iv = std::get_if<Interval>(&domain)) {
    for (std::size_t m = 1; m <= K; ++m) {
      const double md = static_cast<double>(m);
      modes.push_back({static_cast<int>(m), 0, pi2 * md * md / (iv->L * iv->L)});
    }
    return modes;
  }
  const auto* rect = std::get_if<Rectangle>(&domain);
  if (!rect) throw std::invalid_argument("dirichlet_eigenvalues: needs a rectangle or an interval");
  // the K smallest all have m1 <= K and m2 <= K
  const double i1 = 1.0 / (rect->L1 * rect->L1), i2 = 1.0 / (rect->L2 * rect->L2);
  modes.reserve(K * K);
  for (std::size_t m1 = 1; m1 <= K; ++m1)
    for (std::size_t m2 = 1; m2 <= K; ++m2) {
      const double a = static_cast<double>(m1), b = static_cast<double>(m2);
      modes.push_back({static_cast<int>(m1), static_cast<int>(m2), pi2 * (a * a * i1 + b * b * i2)});
    }
  std::partial_sort(modes.begin(), modes.begin() + static_cast<std::ptrdiff_t>(K), modes.end(),
                    [](const DirichletMode& x, const DirichletMode& y) {
                      return std::tie(x.d, x.m1, x.m2) < std::tie(y.d, y.m1, y.m2);
                    });
  modes.resize(K);
  return modes;
}

ModalBlock assemble_block(const PhaseLagModel& model, const DirichletMode& mode,
                          GeneratorVariant variant) {
  const auto n = static_cast<std::size_t>(model.order());
  const auto& a = model.a;
  const auto& b = model.b;
  const double d = mode.d, k1 = model.kappa1, beta = model.beta;
  const std::size_t dim = n + 3, last = 2 + n;
  auto th = [](std::size_t j) { return 2 + j; };

  ComplexMatrix M(dim, dim);
  M(0, 1) = 1.0;
  M(1, 0) = -k1 * d * d;
  for (std::size_t j = 0; j <= n; ++j) M(1, th(j)) = beta * d * a[j];
  for (std::size_t j = 0; j < n; ++j) M(th(j), th(j + 1)) = 1.0;
  const double an = a[n];
  M(last, 1) += -beta * d / an;
  for (std::size_t j = 0; j <= n; ++j) M(last, th(j)) += -d * b[j] / an;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t col = variant == GeneratorVariant::consistent ? th(j + 1) : th(j);
    M(last, col) += -a[j] / an;
  }

  ComplexMatrix G(dim, dim);
  G(0, 0) = k1 * d * d;
  G(1, 1) = 1.0;
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t k = 0; k <= n; ++k)
      G(th(j), th(k)) = a[j] * a[k] + ((j == k && j < n) ? d : 0.0);

  ComplexMatrix heat(dim, dim), exchange(dim, dim), top(dim, dim), lower(dim, dim);
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t k = 0; k <= n; ++k)
      heat(th(k), th(j)) = -0.5 * d * (a[k] * b[j] + b[k] * a[j]);
  for (std::size_t j = 0; j < n; ++j) {
    exchange(th(j), th(j + 1)) = 0.5 * d;
    exchange(th(j + 1), th(j)) = 0.5 * d;
    lower(th(j), th(j)) = d;
  }
  top(last, last) = d;

  return ModalBlock{mode, std::move(M), GramMatrix(std::move(G)), std::move(heat),
                    std::move(exchange), std::move(top), std::move(lower)};
}

std::vector<ModalBlock> assemble_blocks(const PhaseLagModel& model, const DomainSpec& domain,
                                        std::size_t K, GeneratorVariant variant) {
  const auto modes = dirichlet_eigenvalues(domain, K);
  return parallel_map(modes.size(),
                      [&](std::size_t k) { return assemble_block(model, modes[k], variant); });
}

DiscreteOperator to_operator(const ModalBlock& block) {
  return DiscreteOperator{block.M,
                          block.G,
                          block.heat_form,
                          block.exchange_form,
                          block.top_gradient_form,
                          block.lower_gradient_form,
                          {{"mode0", 0, block.size()}}};
}

DiscreteOperator assemble_full(const PhaseLagModel& model, const DomainSpec& domain,
                               std::size_t K, GeneratorVariant variant) {
  if (K > 200) throw std::invalid_argument("assemble_full: K must be <= 200");
  const auto blocks = assemble_blocks(model, domain, K, variant);
  std::vector<ComplexMatrix> m, g, q1, q2, q3, q4;
  DiscreteOperator op;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const auto& blk = blocks[k];
    m.push_back(blk.M);
    g.push_back(blk.G.matrix());
    q1.push_back(blk.heat_form);
    q2.push_back(blk.exchange_form);
    q3.push_back(blk.top_gradient_form);
    q4.push_back(blk.lower_gradient_form);
    op.layout.push_back({"mode" + std::to_string(k), offset, blk.size()});
    offset += blk.size();
  }
  op.A = linalg::direct_sum(m);
  op.G = GramMatrix(linalg::direct_sum(g));
  op.heat_form = linalg::direct_sum(q1);
  op.exchange_form = linalg::direct_sum(q2);
  op.top_gradient_form = linalg::direct_sum(q3);
  op.lower_gradient_form = linalg::direct_sum(q4);
  return op;
}

}  // namespace phaselag
