#include "phaselag/radial.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace phaselag {

using linalg::ComplexMatrix;
using linalg::GramMatrix;

namespace {

std::size_t cells(double length, double h, const char* what) {
  const double q = length / h;
  const double k = std::round(q);
  if (k < 1.0 || std::abs(q - k) > 1e-12 * std::max(1.0, q))
    throw std::invalid_argument(std::string("radial grid: h must divide ") + what);
  return static_cast<std::size_t>(k);
}

ComplexMatrix diag(const std::vector<double>& d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  auto s = m + m.adjoint();
  s *= 0.5;
  return s;
}

}  // namespace

RadialGrid::RadialGrid(double R0, double R, double h) : R0_(R0), R_(R), h_(h) {
  if (!(h > 0.0) || !(R0 > 0.0) || !(R0 < R))
    throw std::invalid_argument("radial grid: need h > 0 and 0 < R0 < R");
  nd_ = cells(R0, h, "R0");
  n_ = nd_ + cells(R - R0, h, "R - R0");
}

double RadialGrid::weight(std::size_t i) const {
  return 2.0 * std::numbers::pi * r(i) * h_;
}

std::vector<double> RadialGrid::nodes(Region region) const {
  std::vector<double> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (region == Region::full || this->region(i) == region) out.push_back(r(i));
  return out;
}

std::vector<double> RadialGrid::weights(Region region) const {
  std::vector<double> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (region == Region::full || this->region(i) == region) out.push_back(weight(i));
  return out;
}

RadialGrid RadialGrid::refine() const { return RadialGrid(R0_, R_, h_ / 2.0); }

ComplexMatrix radial_laplacian(const RadialGrid& grid, Region region, RadialBoundary bc) {
  std::size_t first = 0, count = grid.size();
  if (region == Region::disc) count = grid.disc_size();
  if (region == Region::annulus) {
    first = grid.disc_size();
    count = grid.annulus_size();
  }
  const double h = grid.h();
  ComplexMatrix L(count, count);
  for (std::size_t k = 0; k < count; ++k) {
    const double r = grid.r(first + k);
    const double rm = r - 0.5 * h, rp = r + 0.5 * h;
    const double s = 1.0 / (r * h * h);
    if (k + 1 < count) {
      L(k, k + 1) += rp * s;
      L(k, k) -= rp * s;
    } else if (bc.outer_dirichlet) {
      L(k, k) -= 2.0 * rp * s;
    }
    if (k > 0) {
      L(k, k - 1) += rm * s;
      L(k, k) -= rm * s;
    } else if (bc.inner_dirichlet && first > 0) {
      L(k, k) -= 2.0 * rm * s;
    }
  }
  return L;
}

DiscreteOperator assemble_transmission(const PhaseLagModel& model, const RadialGrid& grid,
                                       GeneratorVariant variant) {
  if (!model.kappa2) throw std::invalid_argument("assemble_transmission: kappa2 is required");
  const std::size_t N = grid.size(), Nd = grid.disc_size(), Na = grid.annulus_size();
  if (Nd < 4 || Na < 4)
    throw std::invalid_argument("assemble_transmission: grid too coarse, need at least 4 nodes "
                                "on each side of the interface (disc " + std::to_string(Nd) +
                                ", annulus " + std::to_string(Na) + ")");
  const auto n = static_cast<std::size_t>(model.order());
  const auto& a = model.a;
  const auto& b = model.b;
  const double beta = model.beta;

  const ComplexMatrix L = radial_laplacian(grid, Region::full);
  const ComplexMatrix Lt = radial_laplacian(grid, Region::annulus, {true, true});
  const ComplexMatrix W = diag(grid.weights());
  const ComplexMatrix Wa = diag(grid.weights(Region::annulus));
  std::vector<double> kd(N, model.kappa1);
  for (std::size_t i = 0; i < Nd; ++i) kd[i] = *model.kappa2;
  const ComplexMatrix K = diag(kd);

  // extension by zero from the annulus onto the full grid, and its transpose
  ComplexMatrix E(N, Na);
  for (std::size_t i = 0; i < Na; ++i) E(Nd + i, i) = 1.0;
  const ComplexMatrix LE = L * E;
  const ComplexMatrix EtL = E.adjoint() * L;
  const ComplexMatrix S = hermitian_part(Wa * Lt);  // −stiffness of the Θ Laplacian

  const std::size_t dim = 2 * N + (n + 1) * Na;
  const std::size_t phi = 0, psi = N;
  auto th = [&](std::size_t j) { return 2 * N + j * Na; };

  ComplexMatrix A(dim, dim);
  A.set_block(phi, psi, ComplexMatrix::identity(N));
  A.set_block(psi, phi, -1.0 * (L * K * L));
  for (std::size_t j = 0; j <= n; ++j) A.set_block(psi, th(j), (-beta * a[j]) * LE);
  for (std::size_t j = 0; j < n; ++j) A.set_block(th(j), th(j + 1), ComplexMatrix::identity(Na));
  const double an = a[n];
  auto add_block = [&](std::size_t r0, std::size_t c0, const ComplexMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t k = 0; k < m.cols(); ++k) A(r0 + i, c0 + k) += m(i, k);
  };
  add_block(th(n), psi, (beta / an) * EtL);
  for (std::size_t j = 0; j <= n; ++j) add_block(th(n), th(j), (b[j] / an) * Lt);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t col = variant == GeneratorVariant::consistent ? th(j + 1) : th(j);
    add_block(th(n), col, (-a[j] / an) * ComplexMatrix::identity(Na));
  }

  ComplexMatrix G(dim, dim);
  G.set_block(phi, phi, hermitian_part(L.adjoint() * (K * W) * L));
  G.set_block(psi, psi, W);
  ComplexMatrix heat(dim, dim), exchange(dim, dim), top(dim, dim), lower(dim, dim);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t k = 0; k <= n; ++k) {
      auto blk = (a[j] * a[k]) * Wa;
      if (j == k && j < n) blk -= S;
      G.set_block(th(j), th(k), blk);
      heat.set_block(th(k), th(j), (0.5 * (a[k] * b[j] + b[k] * a[j])) * S);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    exchange.set_block(th(j), th(j + 1), -0.5 * S);
    exchange.set_block(th(j + 1), th(j), -0.5 * S);
    lower.set_block(th(j), th(j), -1.0 * S);
  }
  top.set_block(th(n), th(n), -1.0 * S);

  DiscreteOperator op{std::move(A), GramMatrix(std::move(G)), std::move(heat),
                      std::move(exchange), std::move(top), std::move(lower), {}};
  op.layout = {{"v", 0, Nd}, {"u", Nd, Na}, {"z", N, Nd}, {"w", N + Nd, Na}};
  for (std::size_t j = 0; j <= n; ++j) op.layout.push_back({"theta" + std::to_string(j), th(j), Na});
  return op;
}

}  // namespace phaselag
