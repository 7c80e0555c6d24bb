#include "phaselag/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "phaselag/parallel.hpp"

namespace phaselag {

using linalg::cplx;
using linalg::ComplexMatrix;

Generator Generator::from_blocks(const std::vector<ModalBlock>& blocks) {
  Generator g;
  for (const auto& b : blocks) {
    g.pieces_.push_back(to_operator(b));
    g.offsets_.push_back(g.offsets_.back() + b.size());
  }
  return g;
}

Generator Generator::from_operator(DiscreteOperator op) {
  Generator g;
  g.offsets_.push_back(op.dim());
  g.pieces_.push_back(std::move(op));
  return g;
}

Generator Generator::shifted(double s) const {
  Generator g = *this;
  for (auto& p : g.pieces_) p.A = p.A.shifted(s);
  return g;
}

LineFit least_squares_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("least_squares_line: need at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("least_squares_line: abscissae are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - f.intercept - f.slope * x[i];
    ssr += r * r;
  }
  f.r_squared = syy > 0.0 ? std::clamp(1.0 - ssr / syy, 0.0, 1.0) : 1.0;
  return f;
}

std::vector<double> GammaGrid::values() const {
  if (per_decade < 1 || !(hi_decade > lo_decade))
    throw std::invalid_argument("gamma grid: need hi > lo and at least one point per decade");
  const auto count = static_cast<std::size_t>(std::llround((hi_decade - lo_decade) * per_decade));
  std::vector<double> out;
  for (std::size_t k = 0; k <= count; ++k)
    out.push_back(std::pow(10.0, lo_decade + static_cast<double>(k) / per_decade));
  return out;
}

SweepError::SweepError(double gamma, cplx nearest)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "resolvent_sweep: i*gamma is in the spectrum at gamma = " << gamma
           << " (nearest eigenvalue " << nearest.real() << (nearest.imag() < 0 ? " - " : " + ")
           << std::abs(nearest.imag()) << "i)";
        return os.str();
      }()),
      gamma_(gamma),
      nearest_(nearest) {}

namespace {

struct PointResult {
  double norm = 0.0;
  std::size_t piece = 0;
};

cplx nearest_eigenvalue(const ComplexMatrix& a, cplx target) {
  cplx best = std::numeric_limits<double>::infinity();
  for (const auto& ev : linalg::eigenvalues(a))
    if (std::abs(ev - target) < std::abs(best - target)) best = ev;
  return best;
}

}  // namespace

ResolventSweep resolvent_sweep(const Generator& gen, std::span<const double> gamma,
                               const SweepOptions& opts) {
  if (gen.piece_count() == 0) throw std::invalid_argument("resolvent_sweep: empty generator");
  for (std::size_t i = 0; i < gamma.size(); ++i)
    if (!(gamma[i] > 0.0) || (i > 0 && !(gamma[i] > gamma[i - 1])))
      throw std::invalid_argument("resolvent_sweep: gamma grid must be positive and increasing");

  const Generator b = opts.shifted ? gen.shifted(-2.0 * opts.c0) : gen;
  const auto& pieces = b.pieces();

  auto results = parallel_map(gamma.size(), [&](std::size_t i) {
    const cplx lambda(0.0, gamma[i]);
    PointResult best;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      const auto r = linalg::weighted_resolvent_norm(pieces[k].A, pieces[k].G, lambda, opts.norm);
      if (r.singular && !opts.allow_singular)
        throw SweepError(gamma[i], nearest_eigenvalue(pieces[k].A, lambda));
      if (r.value > best.norm || k == 0) best = {r.value, k};
    }
    return best;
  });

  ResolventSweep s;
  s.shifted = opts.shifted;
  s.c0 = opts.shifted ? opts.c0 : 0.0;
  s.operator_norm = operator_norm(b, opts.norm);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    s.gamma.push_back(gamma[i]);
    s.norms.push_back(results[i].norm);
    s.gamma_times_norm.push_back(gamma[i] * results[i].norm);
    s.argmax_piece.push_back(results[i].piece);
  }
  return s;
}

AxisReport verify_imaginary_axis(const ResolventSweep& sweep) {
  AxisReport rep;
  rep.threshold = 1e-12 * sweep.operator_norm;
  rep.min_singular_value = std::numeric_limits<double>::infinity();
  bool finite = true;
  for (std::size_t i = 0; i < sweep.norms.size(); ++i) {
    const double nrm = sweep.norms[i];
    const double sigma = std::isfinite(nrm) ? 1.0 / nrm : 0.0;
    finite = finite && std::isfinite(nrm);
    if (sigma < rep.min_singular_value) {
      rep.min_singular_value = sigma;
      rep.argmin_gamma = sweep.gamma[i];
    }
  }
  rep.pass = finite && !sweep.norms.empty() && rep.min_singular_value > rep.threshold;
  return rep;
}

AnalyticityIndicator analyticity_indicator(std::span<const double> gamma,
                                           std::span<const double> norms) {
  if (gamma.size() != norms.size() || gamma.size() < 2)
    throw std::invalid_argument("analyticity_indicator: need at least two samples");
  AnalyticityIndicator ind;
  std::vector<double> lx, ly;
  const double top = gamma.back() / 10.0 * (1.0 - 1e-12);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const double gn = gamma[i] * norms[i];
    if (gn > ind.sup_gamma_norm || i == 0) {
      ind.sup_gamma_norm = gn;
      ind.argsup_gamma = gamma[i];
    }
    if (gamma[i] >= top) {
      lx.push_back(std::log(gamma[i]));
      ly.push_back(std::log(gn));
    }
  }
  ind.tail_slope = lx.size() >= 2 ? least_squares_line(lx, ly).slope : 0.0;
  return ind;
}

AnalyticityIndicator analyticity_indicator(const ResolventSweep& sweep) {
  return analyticity_indicator(sweep.gamma, sweep.norms);
}

GevreyFit gevrey_fit(std::span<const double> gamma, std::span<const double> norms,
                     double window_lo, double window_hi) {
  if (gamma.size() != norms.size()) throw std::invalid_argument("gevrey_fit: size mismatch");
  std::vector<double> lx, ly;
  const double lo = window_lo * (1.0 - 1e-12), hi = window_hi * (1.0 + 1e-12);
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma[i] < lo || gamma[i] > hi) continue;
    if (!(norms[i] > 0.0) || !std::isfinite(norms[i]))
      throw std::invalid_argument("gevrey_fit: norms in the window must be finite and positive");
    lx.push_back(std::log(gamma[i]));
    ly.push_back(std::log(norms[i]));
  }
  if (lx.size() < 10)
    throw std::invalid_argument("gevrey_fit: window holds " + std::to_string(lx.size()) +
                                " samples, need at least 10");
  if (std::all_of(ly.begin(), ly.end(), [&](double v) { return v == ly.front(); }))
    throw std::invalid_argument("gevrey_fit: degenerate window (all norms equal)");
  const auto line = least_squares_line(lx, ly);
  GevreyFit f;
  f.varsigma = -line.slope;
  f.C = std::exp(line.intercept);
  f.r_squared = line.r_squared;
  f.window_lo = window_lo;
  f.window_hi = window_hi;
  f.samples = lx.size();
  return f;
}

GevreyFit gevrey_fit(const ResolventSweep& sweep, double decades) {
  if (sweep.gamma.empty()) throw std::invalid_argument("gevrey_fit: empty sweep");
  const double hi = sweep.gamma.back();
  return gevrey_fit(sweep.gamma, sweep.norms, hi * std::pow(10.0, -decades), hi);
}

std::vector<SpectralPoint> spectrum(const Generator& gen) {
  const auto& pieces = gen.pieces();
  // the G-orthonormal form is far better scaled than A itself for Case 2
  auto per_piece = parallel_map(pieces.size(), [&](std::size_t k) {
    return linalg::eigenvalues(pieces[k].G.similarity(pieces[k].A));
  });
  std::vector<SpectralPoint> out;
  for (std::size_t k = 0; k < per_piece.size(); ++k)
    for (const auto& ev : per_piece[k]) out.push_back({ev, k});
  return out;
}

double spectral_abscissa(const Generator& gen) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : spectrum(gen)) best = std::max(best, p.value.real());
  return best;
}

double numerical_abscissa(const Generator& gen) {
  const auto& pieces = gen.pieces();
  const auto vals = parallel_map(pieces.size(), [&](std::size_t k) {
    return linalg::numerical_abscissa(pieces[k].A, pieces[k].G);
  });
  return *std::max_element(vals.begin(), vals.end());
}

double default_shift(const Generator& gen) { return std::max(0.0, numerical_abscissa(gen)); }

double operator_norm(const Generator& gen, const linalg::NormOptions& opts) {
  const auto& pieces = gen.pieces();
  const auto vals = parallel_map(pieces.size(), [&](std::size_t k) {
    return linalg::weighted_norm(pieces[k].A, pieces[k].G, opts).value;
  });
  return *std::max_element(vals.begin(), vals.end());
}

namespace {

// max over pieces of ‖f(A_k, t)‖_{G_k} for every t
template <class F>
std::vector<double> piecewise_norms(const Generator& gen, std::span<const double> times,
                                    const linalg::NormOptions& opts, F&& f) {
  const auto& pieces = gen.pieces();
  return parallel_map(times.size(), [&](std::size_t i) {
    double best = 0.0;
    for (const auto& p : pieces) best = std::max(best, linalg::weighted_norm(f(p.A, times[i]), p.G, opts).value);
    return best;
  });
}

}  // namespace

GrowthFit growth_bound(const Generator& gen, std::span<const double> times,
                       const linalg::NormOptions& opts) {
  if (times.size() < 3) throw std::invalid_argument("growth_bound: need at least 3 times");
  GrowthFit fit;
  fit.times.assign(times.begin(), times.end());
  // on a uniform grid t_k = kΔ the propagators are powers of exp(ΔA)
  bool uniform = times.front() == 0.0;
  const double step = times[1] - times[0];
  for (std::size_t i = 1; i < times.size() && uniform; ++i)
    uniform = std::abs(times[i] - static_cast<double>(i) * step) <= 1e-12 * times.back();
  try {
    if (uniform) {
      const auto& pieces = gen.pieces();
      const auto per_piece = parallel_map(pieces.size(), [&](std::size_t k) {
        const auto& p = pieces[k];
        const ComplexMatrix e = linalg::matrix_exponential(p.A, step);
        ComplexMatrix power = ComplexMatrix::identity(p.dim());
        std::vector<double> norms;
        for (std::size_t i = 0; i < times.size(); ++i) {
          if (i > 0) power = e * power;
          if (!power.all_finite()) throw linalg::OverflowError("growth_bound: propagator overflowed");
          norms.push_back(linalg::weighted_norm(power, p.G, opts).value);
        }
        return norms;
      });
      fit.norms.assign(times.size(), 0.0);
      for (const auto& n : per_piece)
        for (std::size_t i = 0; i < n.size(); ++i) fit.norms[i] = std::max(fit.norms[i], n[i]);
    } else {
      fit.norms = piecewise_norms(gen, times, opts, [](const ComplexMatrix& a, double t) {
        return linalg::matrix_exponential(a, t);
      });
    }
  } catch (const linalg::OverflowError& e) {
    throw linalg::OverflowError(std::string(e.what()) +
                                "; the semigroup grows too fast, try a shifted run");
  }
  const double half = times.back() / 2.0;
  std::vector<double> x, y;
  for (std::size_t i = 0; i < times.size(); ++i)
    if (times[i] >= half * (1.0 - 1e-12)) {
      x.push_back(times[i]);
      y.push_back(std::log(fit.norms[i]));
    }
  fit.omega0 = least_squares_line(x, y).slope;
  return fit;
}

SmoothingFit smoothing_rate(const Generator& gen, std::span<const double> times,
                            const linalg::NormOptions& opts) {
  if (times.size() < 2) throw std::invalid_argument("smoothing_rate: need at least 2 times");
  SmoothingFit fit;
  fit.times.assign(times.begin(), times.end());
  fit.norms = piecewise_norms(gen, times, opts, [](const ComplexMatrix& a, double t) {
    return a * linalg::matrix_exponential(a, t);
  });
  std::vector<double> x, y;
  for (std::size_t i = 0; i < times.size(); ++i) {
    x.push_back(std::log(times[i]));
    y.push_back(std::log(fit.norms[i]));
  }
  fit.slope = least_squares_line(x, y).slope;
  return fit;
}

std::vector<double> log_times(double lo, double hi, std::size_t n) {
  if (n < 2 || !(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_times: bad range");
  std::vector<double> t;
  const double a = std::log10(lo), b = std::log10(hi);
  for (std::size_t i = 0; i < n; ++i)
    t.push_back(std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1)));
  return t;
}

std::vector<double> linear_times(double T, std::size_t n) {
  if (n < 1 || !(T > 0.0)) throw std::invalid_argument("linear_times: bad range");
  std::vector<double> t;
  for (std::size_t i = 0; i <= n; ++i) t.push_back(T * static_cast<double>(i) / static_cast<double>(n));
  return t;
}

}  // namespace phaselag
