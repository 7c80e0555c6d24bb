#include "phaselag/timeevo.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "phaselag/parallel.hpp"

namespace phaselag {

using linalg::cplx;
using linalg::ComplexMatrix;

InitialData parse_initial_data(const std::string& name) {
  if (name == "plate_mode" || name == "plate") return InitialData::plate_mode;
  if (name == "thermal") return InitialData::thermal;
  if (name == "random") return InitialData::random;
  throw std::invalid_argument("unknown initial data preset '" + name +
                              "' (expected plate_mode, thermal or random)");
}

std::string to_string(InitialData d) {
  switch (d) {
    case InitialData::plate_mode: return "plate_mode";
    case InitialData::thermal: return "thermal";
    default: return "random";
  }
}

namespace {

double gram_energy(const linalg::GramMatrix& g, std::span<const cplx> x) {
  return g.inner(x);
}

double form_value(const ComplexMatrix& q, std::span<const cplx> x) {
  if (q.empty()) return 0.0;
  return linalg::dot(x, q * x).real();
}

void normalize(std::vector<cplx>& u, double norm_sq) {
  if (!(norm_sq > 0.0)) throw std::invalid_argument("initial state has zero energy");
  const double s = 1.0 / std::sqrt(norm_sq);
  for (auto& x : u) x *= s;
}

std::span<const cplx> piece_span(std::span<const cplx> u, const Generator& gen, std::size_t k) {
  return u.subspan(gen.offset(k), gen.offset(k + 1) - gen.offset(k));
}

double total_energy(const Generator& gen, std::span<const cplx> u) {
  double e = 0.0;
  for (std::size_t k = 0; k < gen.piece_count(); ++k)
    e += gram_energy(gen.pieces()[k].G, piece_span(u, gen, k));
  return e;
}

std::size_t step_count(double dt, double T) {
  if (!(dt > 0.0) || !(T > 0.0)) throw std::invalid_argument("evolve: need dt > 0 and T > 0");
  const double q = T / dt;
  const double k = std::round(q);
  if (std::abs(q - k) > 1e-9 * q) throw std::invalid_argument("evolve: T must be a multiple of dt");
  return static_cast<std::size_t>(k);
}

}  // namespace

std::vector<cplx> modal_initial_state(const Generator& blocks, InitialData kind,
                                      std::uint64_t seed) {
  std::vector<cplx> u(blocks.dim());
  if (blocks.piece_count() == 0) throw std::invalid_argument("modal_initial_state: no blocks");
  switch (kind) {
    case InitialData::plate_mode: u[0] = 1.0; break;
    case InitialData::thermal: u[2] = 1.0; break;
    case InitialData::random: {
      std::mt19937_64 rng(seed);
      std::normal_distribution<double> nd;
      const double per = 1.0 / static_cast<double>(blocks.piece_count());
      for (std::size_t k = 0; k < blocks.piece_count(); ++k) {
        std::vector<cplx> x(blocks.offset(k + 1) - blocks.offset(k));
        for (auto& v : x) v = nd(rng);
        normalize(x, gram_energy(blocks.pieces()[k].G, x) / per);
        std::copy(x.begin(), x.end(), u.begin() + static_cast<std::ptrdiff_t>(blocks.offset(k)));
      }
      break;
    }
  }
  normalize(u, total_energy(blocks, u));
  return u;
}

std::vector<cplx> radial_initial_state(const DiscreteOperator& op, const RadialGrid& grid,
                                       InitialData kind, std::uint64_t seed) {
  std::vector<cplx> u(op.dim());
  const double pi = std::numbers::pi;
  switch (kind) {
    case InitialData::plate_mode: {
      // lowest discrete plate mode by inverse iteration on Δ_h(KΔ_h ·), so the
      // data satisfy the hinged and interface conditions of the discrete operator
      const std::size_t n = grid.size();
      ComplexMatrix stiff = op.A.block(n, 0, n, n);
      stiff *= -1.0;
      const linalg::LuFactorization lu(stiff);
      std::vector<cplx> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = std::cos(pi * grid.r(i) / (2.0 * grid.R()));
      for (int it = 0; it < 60; ++it) {
        lu.solve_in_place(x);
        const double s = linalg::norm2(x);
        for (auto& v : x) v /= s;
      }
      std::copy(x.begin(), x.end(), u.begin());
      break;
    }
    case InitialData::thermal: {
      const auto& th = op.slice("theta0");
      for (std::size_t i = 0; i < th.size; ++i) {
        const double r = grid.r(grid.disc_size() + i);
        u[th.offset + i] = std::sin(pi * (r - grid.R0()) / (grid.R() - grid.R0()));
      }
      break;
    }
    case InitialData::random: {
      std::mt19937_64 rng(seed);
      std::normal_distribution<double> nd;
      for (auto& v : u) v = nd(rng);
      break;
    }
  }
  normalize(u, op.G.inner(u));
  return u;
}

void compute_energy_terms(EvolutionTrace& trace, const Generator& gen) {
  const std::size_t m = trace.states.size();
  trace.energy.assign(m, 0.0);
  trace.dissipation_1.assign(m, 0.0);
  trace.dissipation_2.assign(m, 0.0);
  trace.top_gradient.assign(m, 0.0);
  trace.lower_gradient.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    const std::span<const cplx> u = trace.states[i];
    if (u.size() != gen.dim()) throw std::invalid_argument("energy terms: state size mismatch");
    for (std::size_t k = 0; k < gen.piece_count(); ++k) {
      const auto& p = gen.pieces()[k];
      const auto x = piece_span(u, gen, k);
      trace.energy[i] += 0.5 * gram_energy(p.G, x);
      trace.dissipation_1[i] += form_value(p.heat_form, x);
      trace.dissipation_2[i] += form_value(p.exchange_form, x);
      trace.top_gradient[i] += form_value(p.top_gradient_form, x);
      trace.lower_gradient[i] += form_value(p.lower_gradient_form, x);
    }
  }
}

EvolutionTrace evolve_modal(const Generator& blocks, std::span<const cplx> u0, double dt, double T,
                            const linalg::ExpmOptions& expm) {
  if (u0.size() != blocks.dim()) throw std::invalid_argument("evolve_modal: state size mismatch");
  const std::size_t steps = step_count(dt, T);
  const auto& pieces = blocks.pieces();
  // trajectories per block, then stitched into full states
  auto per_block = parallel_map(pieces.size(), [&](std::size_t k) {
    const ComplexMatrix P = linalg::matrix_exponential(pieces[k].A, dt, expm);
    std::vector<std::vector<cplx>> traj;
    traj.reserve(steps + 1);
    const auto x0 = piece_span(u0, blocks, k);
    traj.emplace_back(x0.begin(), x0.end());
    for (std::size_t s = 0; s < steps; ++s) traj.push_back(P * std::span<const cplx>(traj.back()));
    return traj;
  });
  EvolutionTrace tr;
  tr.times = linear_times(T, steps);
  tr.states.assign(steps + 1, std::vector<cplx>(blocks.dim()));
  for (std::size_t k = 0; k < pieces.size(); ++k)
    for (std::size_t s = 0; s <= steps; ++s)
      std::copy(per_block[k][s].begin(), per_block[k][s].end(),
                tr.states[s].begin() + static_cast<std::ptrdiff_t>(blocks.offset(k)));
  compute_energy_terms(tr, blocks);
  return tr;
}

EvolutionTrace evolve_radial(const DiscreteOperator& op, std::span<const cplx> u0, double dt,
                             double T) {
  if (u0.size() != op.dim()) throw std::invalid_argument("evolve_radial: state size mismatch");
  const std::size_t steps = step_count(dt, T);
  auto half = op.A;
  half *= 0.5 * dt;
  const ComplexMatrix forward = half.shifted(1.0);
  auto minus = half;
  minus *= -1.0;
  const linalg::LuFactorization lu(minus.shifted(1.0));
  if (lu.singular())
    throw linalg::LinalgError("evolve_radial: I - (dt/2)A is singular; use a smaller dt");
  EvolutionTrace tr;
  tr.times = linear_times(T, steps);
  tr.states.reserve(steps + 1);
  tr.states.emplace_back(u0.begin(), u0.end());
  for (std::size_t s = 0; s < steps; ++s) {
    auto next = forward * std::span<const cplx>(tr.states.back());
    lu.solve_in_place(next);
    tr.states.push_back(std::move(next));
  }
  compute_energy_terms(tr, Generator::from_operator(op));
  return tr;
}

EnergyIdentityReport energy_identity_residual(const EvolutionTrace& trace,
                                              const PhaseLagModel& model, double c0) {
  EnergyIdentityReport rep;
  const std::size_t m = trace.times.size();
  if (m == 0) return rep;
  const double scale = trace.energy[0] > 0.0 ? trace.energy[0] : 1.0;
  for (std::size_t k = 1; k + 1 < m; ++k) {
    const double dE = (trace.energy[k + 1] - trace.energy[k - 1]) / (trace.times[k + 1] - trace.times[k - 1]);
    const double r = std::abs(dE - trace.dissipation_1[k] - trace.dissipation_2[k]) / scale;
    if (r > rep.max_residual) {
      rep.max_residual = r;
      rep.argmax_time = trace.times[k];
    }
  }
  const double coef = 0.5 * model.a.back() * model.b.back();
  rep.worst_inequality_gap = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m; ++k) {
    const double lhs = trace.dissipation_1[k] + trace.dissipation_2[k];
    const double rhs = -coef * trace.top_gradient[k] + c0 * trace.lower_gradient[k];
    rep.worst_inequality_gap = std::max(rep.worst_inequality_gap, (lhs - rhs) / scale);
  }
  rep.inequality_holds = rep.worst_inequality_gap <= 1e-10;
  return rep;
}

QuasiContractionReport quasi_contraction_check(const EvolutionTrace& trace, double c0) {
  QuasiContractionReport rep;
  if (trace.energy.empty()) return rep;
  const double n0 = std::sqrt(2.0 * trace.energy[0]);
  for (std::size_t k = 0; k < trace.energy.size(); ++k) {
    const double nk = std::sqrt(2.0 * std::max(0.0, trace.energy[k]));
    const double r = n0 > 0.0 ? nk / (std::exp(2.0 * c0 * trace.times[k]) * n0) : 0.0;
    rep.ratios.push_back(r);
    rep.max_ratio = std::max(rep.max_ratio, r);
  }
  rep.pass = rep.max_ratio <= 1.0 + 1e-8;
  return rep;
}

}  // namespace phaselag
