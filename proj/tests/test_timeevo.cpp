#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "phaselag/timeevo.hpp"

using namespace phaselag;
using linalg::cplx;
using linalg::ComplexMatrix;

namespace {

PhaseLagModel model(std::vector<double> a, std::vector<double> b, double beta) {
  PhaseLagModel m;
  m.a = std::move(a);
  m.b = std::move(b);
  m.beta = beta;
  m.kappa2 = 2.0;
  return m;
}

Generator modal(const PhaseLagModel& m, const DomainSpec& d, std::size_t K) {
  return Generator::from_blocks(assemble_blocks(m, d, K));
}

Generator plain(double a) {
  DiscreteOperator op;
  op.A = ComplexMatrix{{a}};
  op.G = linalg::GramMatrix::identity(1);
  op.layout = {{"x", 0, 1}};
  return Generator::from_operator(op);
}

double max_diff(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d = std::max(d, std::abs(x[i] - y[i]));
  return d;
}

std::vector<cplx> exact(const ComplexMatrix& a, const std::vector<cplx>& u0, double t) {
  return linalg::matrix_exponential(a, t) * std::span<const cplx>(u0);
}

}  // namespace

TEST_CASE("initial data presets") {
  CHECK(parse_initial_data("plate_mode") == InitialData::plate_mode);
  CHECK(parse_initial_data("thermal") == InitialData::thermal);
  CHECK(to_string(InitialData::random) == "random");
  CHECK_THROWS_AS(parse_initial_data("bogus"), std::invalid_argument);
  const auto gen = modal(model({1.0, 0.5}, {1.0, 0.25}, 1.0), Rectangle{}, 5);
  for (auto kind : {InitialData::plate_mode, InitialData::thermal, InitialData::random}) {
    const auto u = modal_initial_state(gen, kind, 7);
    double e = 0.0;
    for (std::size_t k = 0; k < gen.piece_count(); ++k)
      e += gen.pieces()[k].G.inner(std::span<const cplx>(u).subspan(gen.offset(k), 4));
    CHECK(e == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(modal_initial_state(gen, InitialData::random, 7) == modal_initial_state(gen, InitialData::random, 7));
}

TEST_CASE("decoupled plate mode conserves energy") {
  const auto gen = modal(model({1.0, 0.5}, {1.0, 0.25}, 0.0), Rectangle{}, 3);
  const auto tr = evolve_modal(gen, modal_initial_state(gen, InitialData::plate_mode, 1), 1e-2, 1.0);
  for (double e : tr.energy) CHECK(e == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pure heat decay follows the closed form") {
  const auto m = model({2.0}, {0.5}, 0.0);
  const auto gen = modal(m, Rectangle{}, 1);
  const double d = std::sqrt(-gen.pieces()[0].A(1, 0).real());  // A(1, 0) = −κ₁d², κ₁ = 1
  const auto tr = evolve_modal(gen, modal_initial_state(gen, InitialData::thermal, 1), 1e-3, 0.05);
  for (std::size_t k = 0; k < tr.times.size(); ++k)
    CHECK(tr.energy[k] == doctest::Approx(0.5 * std::exp(-2.0 * (0.5 / 2.0) * d * tr.times[k])).epsilon(1e-10));
}

TEST_CASE("pure heat energy residual is at the finite-difference level") {
  const auto m = model({1.0}, {1.0}, 0.0);
  const auto gen = modal(m, Interval{std::numbers::pi}, 1);
  const auto tr = evolve_modal(gen, modal_initial_state(gen, InitialData::thermal, 1), 1e-4, 0.1);
  const auto rep = energy_identity_residual(tr, m, 0.0);
  CHECK(rep.max_residual <= 1e-6);
  CHECK(rep.inequality_holds);
}

TEST_CASE("coupled modal evolution satisfies the energy identity") {
  const auto m = model({1.0, 0.5}, {1.0, 0.25}, 1.0);
  const auto gen = modal(m, Interval{std::numbers::pi}, 3);
  const auto tr = evolve_modal(gen, modal_initial_state(gen, InitialData::random, 3), 1e-4, 0.2);
  const auto rep = energy_identity_residual(tr, m, default_shift(gen));
  CHECK(rep.max_residual <= 1e-5);
  CHECK(rep.inequality_holds);
}

TEST_CASE("smaller scaling threshold agrees with the default exponential") {
  const auto gen = modal(model({1.0, 0.5}, {1.0, 0.25}, 1.0), Rectangle{}, 10);
  const auto u0 = modal_initial_state(gen, InitialData::random, 11);
  const auto a = evolve_modal(gen, u0, 1e-2, 0.5);
  const auto b = evolve_modal(gen, u0, 1e-2, 0.5, {.theta = 0.5});
  CHECK(max_diff(a.states.back(), b.states.back()) <= 1e-8);
}

TEST_CASE("modal propagation matches the exponential of the assembled operator") {
  const auto m = model({1.0, 0.5}, {1.0, 0.25}, 1.0);
  const auto gen = modal(m, Rectangle{}, 4);
  const auto full = assemble_full(m, Rectangle{}, 4);
  const auto u0 = modal_initial_state(gen, InitialData::random, 2);
  const auto tr = evolve_modal(gen, u0, 0.05, 0.5);
  CHECK(max_diff(tr.states.back(), exact(full.A, u0, 0.5)) <= 1e-10);
}

TEST_CASE("semigroup property") {
  const auto gen = modal(model({1.0, 0.5}, {1.0, 0.25}, 1.0), Rectangle{}, 6);
  const auto u0 = modal_initial_state(gen, InitialData::random, 5);
  const auto whole = evolve_modal(gen, u0, 0.01, 0.3);
  const auto first = evolve_modal(gen, u0, 0.01, 0.1);
  const auto second = evolve_modal(gen, first.states.back(), 0.01, 0.2);
  CHECK(max_diff(whole.states.back(), second.states.back()) <= 1e-12);
}

TEST_CASE("zero data stays zero") {
  const auto m = model({1.0, 0.5}, {1.0, 0.25}, 1.0);
  const auto gen = modal(m, Rectangle{}, 3);
  const std::vector<cplx> zero(gen.dim());
  const auto tr = evolve_modal(gen, zero, 0.1, 1.0);
  for (const auto& s : tr.states)
    for (const auto& x : s) CHECK(x == cplx{});
  CHECK(energy_identity_residual(tr, m, 0.0).max_residual == 0.0);
  CHECK(quasi_contraction_check(tr, 0.0).pass);
  CHECK_THROWS_AS(modal_initial_state(Generator{}, InitialData::plate_mode, 1), std::invalid_argument);
}

TEST_CASE("radial midpoint rule conserves the energy of the decoupled plate") {
  const RadialGrid g(0.5, 1.0, 1.0 / 16);
  const auto op = assemble_transmission(model({1.0, 0.5}, {1.0, 0.25}, 0.0), g);
  const auto tr = evolve_radial(op, radial_initial_state(op, g, InitialData::plate_mode, 1), 1e-2, 1.0);
  for (double e : tr.energy) CHECK(e == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("radial midpoint rule is second order") {
  // stiff thermal modes are only neutrally damped by the midpoint rule, so
  // single step halvings are noisy; fit the slope over several step sizes
  const RadialGrid g(0.5, 1.0, 1.0 / 16);
  const auto op = assemble_transmission(model({1.0, 0.5}, {1.0, 0.25}, 0.5), g);
  const auto u0 = radial_initial_state(op, g, InitialData::plate_mode, 1);
  const double T = 0.4;
  const auto ref = exact(op.A, u0, T);
  std::vector<double> ldt, lerr;
  for (double dt : {4e-3, 2e-3, 1e-3, 5e-4, 2.5e-4}) {
    ldt.push_back(std::log(dt));
    lerr.push_back(std::log(max_diff(evolve_radial(op, u0, dt, T).states.back(), ref)));
  }
  const double order = least_squares_line(ldt, lerr).slope;
  CHECK(order >= 1.9);
  CHECK(order <= 2.1);
}

TEST_CASE("radial initial data are normalised and thermal data live on the annulus") {
  const RadialGrid g(0.5, 1.0, 1.0 / 16);
  const auto op = assemble_transmission(model({1.0, 0.5}, {1.0, 0.25}, 0.5), g);
  for (auto kind : {InitialData::plate_mode, InitialData::thermal, InitialData::random})
    CHECK(op.G.inner(radial_initial_state(op, g, kind, 4)) == doctest::Approx(1.0).epsilon(1e-12));
  const auto th = radial_initial_state(op, g, InitialData::thermal, 4);
  for (std::size_t i = 0; i < op.slice("theta0").offset; ++i) CHECK(th[i] == cplx{});
}

TEST_CASE("quasi-contraction examples") {
  const auto decay = evolve_modal(plain(-1.0), std::vector<cplx>{1.0}, 0.1, 2.0);
  const auto d = quasi_contraction_check(decay, 0.0);
  CHECK(d.pass);
  CHECK(d.max_ratio == doctest::Approx(1.0));
  CHECK(d.ratios.back() == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  const auto grow = evolve_modal(plain(1.0), std::vector<cplx>{1.0}, 0.1, 2.0);
  const auto g = quasi_contraction_check(grow, 0.5);
  CHECK(g.pass);
  CHECK(g.max_ratio == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_FALSE(quasi_contraction_check(grow, 0.25).pass);
}

TEST_CASE("thermal damping reaches high modes faster than low ones") {
  const auto m = model({1.0, 0.5}, {1.0, 0.25}, 1.0);
  const auto gen = modal(m, Rectangle{}, 40);
  const auto tr = evolve_modal(gen, modal_initial_state(gen, InitialData::random, 9), 0.01, 0.5);
  auto block_energy = [&](std::size_t k, const std::vector<cplx>& u) {
    return gen.pieces()[k].G.inner(std::span<const cplx>(u).subspan(gen.offset(k), 4));
  };
  const std::size_t last = gen.piece_count() - 1;
  const double low = block_energy(0, tr.states.back()) / block_energy(0, tr.states.front());
  const double high = block_energy(last, tr.states.back()) / block_energy(last, tr.states.front());
  CHECK(high < low);
  CHECK(tr.energy.back() < tr.energy.front());
}
