#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "phaselag/analysis.hpp"

using namespace phaselag;
using linalg::cplx;
using linalg::ComplexMatrix;

namespace {

Generator plain(const ComplexMatrix& a) {
  DiscreteOperator op;
  op.A = a;
  op.G = linalg::GramMatrix::identity(a.rows());
  op.heat_form = ComplexMatrix(a.rows(), a.rows());
  op.exchange_form = op.heat_form;
  op.top_gradient_form = op.heat_form;
  op.lower_gradient_form = op.heat_form;
  op.layout = {{"x", 0, a.rows()}};
  return Generator::from_operator(op);
}

ComplexMatrix skew() { return ComplexMatrix{{0.0, 1.0}, {-1.0, 0.0}}; }

PhaseLagModel preset_model() {
  PhaseLagModel m;
  m.a = {1.0, 0.5};
  m.b = {1.0, 0.25};
  m.beta = 1.0;
  return m;
}

Generator preset(std::size_t K) { return Generator::from_blocks(assemble_blocks(preset_model(), Rectangle{}, K)); }

std::vector<double> power_law(const std::vector<double>& g, double C, double s) {
  std::vector<double> n;
  for (double x : g) n.push_back(C * std::pow(x, -s));
  return n;
}

}  // namespace

TEST_CASE("least squares line") {
  const std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
  const auto f = least_squares_line(x, y);
  CHECK(f.slope == doctest::Approx(2.0));
  CHECK(f.intercept == doctest::Approx(1.0));
  CHECK(f.r_squared == doctest::Approx(1.0));
  const std::vector<double> same{1, 1};
  CHECK_THROWS_AS(least_squares_line(same, same), std::invalid_argument);
}

TEST_CASE("gamma grid") {
  const auto g = GammaGrid{}.values();
  CHECK(g.size() == 121);
  CHECK(g.front() == 1.0);
  CHECK(g.back() == doctest::Approx(1e6));
  CHECK(g[20] == doctest::Approx(10.0));
}

TEST_CASE("scalar sweep") {
  const auto gen = plain(ComplexMatrix{{-1.0}});
  const std::vector<double> g{1.0};
  const auto s = resolvent_sweep(gen, g, {.c0 = 0.0, .shifted = false});
  CHECK(s.norms[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(s.gamma_times_norm[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("shifted sweep uses A - 2 c0") {
  const auto gen = plain(ComplexMatrix{{0.5}});
  const std::vector<double> g{2.0};
  const auto s = resolvent_sweep(gen, g, {.c0 = 0.5, .shifted = true});
  CHECK(s.norms[0] == doctest::Approx(1.0 / std::abs(cplx(0.5, 2.0))).epsilon(1e-12));
}

TEST_CASE("imaginary axis: skew generator hits the spectrum") {
  const auto gen = plain(skew());
  const std::vector<double> g{0.5, 1.0, 2.0};
  CHECK_THROWS_AS(resolvent_sweep(gen, g, {.shifted = false}), SweepError);
  try {
    resolvent_sweep(gen, g, {.shifted = false});
  } catch (const SweepError& e) {
    CHECK(e.gamma() == 1.0);
    CHECK(std::abs(e.nearest_eigenvalue() - cplx(0, 1)) < 1e-12);
  }
  const auto s = resolvent_sweep(gen, g, {.shifted = false, .allow_singular = true});
  CHECK(std::isinf(s.norms[1]));
  const auto axis = verify_imaginary_axis(s);
  CHECK_FALSE(axis.pass);
  CHECK(axis.argmin_gamma == 1.0);
  CHECK(axis.min_singular_value == 0.0);
}

TEST_CASE("imaginary axis: dissipative generator passes") {
  const auto gen = plain(ComplexMatrix{{-1.0, 1.0}, {-1.0, -1.0}});
  const auto s = resolvent_sweep(gen, GammaGrid{0, 2, 5}.values(), {.shifted = false});
  const auto axis = verify_imaginary_axis(s);
  CHECK(axis.pass);
  CHECK(axis.min_singular_value > axis.threshold);
}

TEST_CASE("power-law fits") {
  const auto g = GammaGrid{0, 6, 20}.values();
  const auto f = gevrey_fit(g, power_law(g, 3.0, 0.25), 1e3, 1e6);
  CHECK(f.varsigma == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(f.C == doctest::Approx(3.0).epsilon(1e-10));
  CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.samples == 61);
  const auto f1 = gevrey_fit(g, power_law(g, 0.5, 1.0), 1e3, 1e6);
  CHECK(f1.varsigma == doctest::Approx(1.0).epsilon(1e-12));
  for (double s : {0.25, 0.5, 1.0}) {
    const auto ind = analyticity_indicator(g, power_law(g, 2.0, s));
    CHECK(ind.tail_slope == doctest::Approx(1.0 - s).epsilon(1e-10));
  }
  const auto flat = analyticity_indicator(g, power_law(g, 2.0, 1.0));
  CHECK(flat.sup_gamma_norm == doctest::Approx(2.0));
}

TEST_CASE("power-law fit errors") {
  const auto g = GammaGrid{0, 6, 20}.values();
  CHECK_THROWS_WITH_AS(gevrey_fit(g, power_law(g, 3.0, 0.25), 1e5, 1e5 * 1.5),
                       doctest::Contains("window holds"), std::invalid_argument);
  const std::vector<double> constant(g.size(), 2.0);
  CHECK_THROWS_WITH_AS(gevrey_fit(g, constant, 1e3, 1e6), doctest::Contains("degenerate"),
                       std::invalid_argument);
}

TEST_CASE("spectral abscissa") {
  CHECK(spectral_abscissa(plain(ComplexMatrix{{-1.0, 0.0}, {0.0, -2.0}})) == doctest::Approx(-1.0));
  CHECK(std::abs(spectral_abscissa(plain(skew()))) < 1e-12);
  const auto sp = spectrum(preset(3));
  CHECK(sp.size() == 12);
  CHECK(sp.back().piece == 2);
}

TEST_CASE("numerical abscissa, shift and operator norm") {
  CHECK(numerical_abscissa(plain(ComplexMatrix{{-1.0, 0.0}, {0.0, 3.0}})) == doctest::Approx(3.0));
  CHECK(default_shift(plain(ComplexMatrix{{-1.0}})) == 0.0);
  CHECK(default_shift(plain(ComplexMatrix{{2.0}})) == doctest::Approx(2.0));
  CHECK(operator_norm(plain(ComplexMatrix{{-1.0, 0.0}, {0.0, 3.0}})) == doctest::Approx(3.0));
  const auto gen = preset(4);
  CHECK(gen.piece_count() == 4);
  CHECK(gen.dim() == 16);
  CHECK(gen.offset(2) == 8);
  const auto sh = gen.shifted(-1.5);
  CHECK(spectral_abscissa(sh) == doctest::Approx(spectral_abscissa(gen) - 1.5).epsilon(1e-10));
}

TEST_CASE("growth bound") {
  const auto t = linear_times(10.0, 20);
  CHECK(t.size() == 21);
  const auto decay = growth_bound(plain(ComplexMatrix{{-1.0}}), t);
  CHECK(decay.omega0 == doctest::Approx(-1.0).epsilon(1e-8));
  const auto rot = growth_bound(plain(skew()), t);
  CHECK(std::abs(rot.omega0) < 1e-10);
  CHECK_THROWS_AS(growth_bound(plain(ComplexMatrix{{800.0}}), t), linalg::OverflowError);
}

TEST_CASE("smoothing rate") {
  std::vector<cplx> d;
  for (int j = 0; j <= 24; ++j) d.emplace_back(-std::pow(10.0, j / 4.0));
  const auto t = log_times(1e-4, 1e-1, 16);
  const auto fit = smoothing_rate(plain(ComplexMatrix::diagonal(d)), t);
  CHECK(fit.slope == doctest::Approx(-1.0).epsilon(0.05));
  const auto rot = smoothing_rate(plain(skew()), t);
  CHECK(std::abs(rot.slope) < 1e-8);
}

TEST_CASE("smoothing rate: stiff scalar and three-mode closed forms") {
  const double eps = 1e-3;
  const auto t = log_times(eps, 10 * eps, 12);
  const auto fit = smoothing_rate(plain(ComplexMatrix{{-1.0 / eps}}), t);
  CHECK(fit.slope < 0.0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double want = std::exp(-t[i] / eps) / eps;
    CHECK(std::abs(fit.norms[i] - want) <= 1e-6 * want);
  }
  const auto three = smoothing_rate(plain(ComplexMatrix::diagonal(std::vector<cplx>{-1.0, -10.0, -100.0})),
                                    log_times(0.01, 0.1, 12));
  CHECK(three.slope >= -1.0);
  CHECK(three.slope <= 0.0);
}

TEST_CASE("resolvent norm dominates the inverse distance to the spectrum") {
  const auto gen = preset(5);
  const auto sw = resolvent_sweep(gen, GammaGrid{0, 3, 10}.values(), {.shifted = false});
  const auto sp = spectrum(gen);
  for (std::size_t i = 0; i < sw.gamma.size(); ++i) {
    double dist = 1e300;
    for (const auto& p : sp) dist = std::min(dist, std::abs(cplx(0, sw.gamma[i]) - p.value));
    CHECK(sw.norms[i] >= (1.0 - 1e-10) / dist);
  }
}

TEST_CASE("resolvent sweep is deterministic") {
  const auto gen = preset(20);
  const auto g = GammaGrid{0, 4, 10}.values();
  const auto a = resolvent_sweep(gen, g), b = resolvent_sweep(gen, g);
  CHECK(a.norms == b.norms);
  CHECK(a.argmax_piece == b.argmax_piece);
}

TEST_CASE("truncation: sweep and spectral abscissa stabilise in K") {
  const auto g = GammaGrid{}.values();
  const auto s50 = analyticity_indicator(resolvent_sweep(preset(50), g));
  const auto s100 = analyticity_indicator(resolvent_sweep(preset(100), g));
  CHECK(std::abs(s50.sup_gamma_norm - s100.sup_gamma_norm) <= 0.01 * s100.sup_gamma_norm);
  CHECK(std::abs(spectral_abscissa(preset(100)) - spectral_abscissa(preset(200))) <= 1e-6);
}

TEST_CASE("time grids") {
  const auto l = log_times(1e-3, 1.0, 4);
  CHECK(l.size() == 4);
  CHECK(l[1] == doctest::Approx(1e-2));
  CHECK_THROWS_AS(log_times(0.0, 1.0, 4), std::invalid_argument);
  CHECK_THROWS_AS(linear_times(-1.0, 4), std::invalid_argument);
}
