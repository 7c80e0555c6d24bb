#include "phaselag/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace phaselag::linalg {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double abs1(const cplx& z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Parlett–Reinsch diagonal similarity with powers of two (exact in floating
// point), equalizing row and column off-diagonal norms.
void balance(ComplexMatrix& a) {
  const std::size_t n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += abs1(a(j, i));
        r += abs1(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0;
      double g = r / 2.0;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c > g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        for (std::size_t j = 0; j < n; ++j) a(i, j) /= f;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

void reduce_to_hessenberg(ComplexMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<cplx> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm += std::norm(a(i, k));
    xnorm = std::sqrt(xnorm);
    if (xnorm == 0.0) continue;
    const cplx x0 = a(k + 1, k);
    const cplx phase = std::abs(x0) == 0.0 ? cplx{1.0, 0.0} : x0 / std::abs(x0);
    const cplx alpha = -phase * xnorm;
    std::fill(v.begin(), v.end(), cplx{});
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] -= alpha;
    double vnorm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm += std::norm(v[i]);
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0.0) continue;
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    // (I − 2vvᴴ)·A
    for (std::size_t j = k; j < n; ++j) {
      cplx s{};
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * a(i, j);
      s *= 2.0;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= v[i] * s;
    }
    // A·(I − 2vvᴴ)
    for (std::size_t i = 0; i < n; ++i) {
      auto ri = a.row(i);
      cplx s{};
      for (std::size_t j = k + 1; j < n; ++j) s += ri[j] * v[j];
      s *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= s * std::conj(v[j]);
    }
    a(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = cplx{};
  }
}

struct Givens {
  double c = 1.0;
  cplx s{};
};

// G = [[c, s], [−s̄, c]] with G·[x; y] = [ρ; 0].
Givens make_givens(cplx x, cplx y) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  if (ay == 0.0) return {};
  if (ax == 0.0) return {0.0, cplx{1.0, 0.0}};
  const double r = std::hypot(ax, ay);
  return {ax / r, (x / ax) * std::conj(y) / r};
}

cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half = 0.5 * (a - d);
  const cplx disc = std::sqrt(half * half + b * c);
  const cplx m1 = 0.5 * (a + d) + disc;
  const cplx m2 = 0.5 * (a + d) - disc;
  return std::abs(m1 - d) < std::abs(m2 - d) ? m1 : m2;
}

}  // namespace

std::vector<cplx> eigenvalues(const ComplexMatrix& input, const EigenOptions& opts) {
  if (!input.square() || input.empty()) throw LinalgError("eigenvalues: matrix must be square");
  if (!input.all_finite()) throw LinalgError("eigenvalues: non-finite entries");
  const std::size_t n = input.rows();
  ComplexMatrix h = input;
  if (opts.balance) balance(h);
  reduce_to_hessenberg(h);

  const double hnorm = std::max(h.norm_max(), std::numeric_limits<double>::min());
  const long budget = static_cast<long>(opts.max_iterations_per_dim) * static_cast<long>(n);
  long total = 0;
  int since_deflation = 0;

  std::vector<cplx> eig;
  eig.reserve(n);
  long hi = static_cast<long>(n) - 1;
  while (hi >= 0) {
    if (hi == 0) {
      eig.push_back(h(0, 0));
      break;
    }
    long lo = hi;
    while (lo > 0) {
      const double sub = abs1(h(lo, lo - 1));
      double scale = abs1(h(lo, lo)) + abs1(h(lo - 1, lo - 1));
      if (scale == 0.0) scale = hnorm;
      if (sub <= kEps * scale) {
        h(lo, lo - 1) = cplx{};
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig.push_back(h(hi, hi));
      --hi;
      since_deflation = 0;
      continue;
    }
    if (total >= budget) {
      throw ConvergenceError("eigenvalues: QR iteration did not converge after " +
                                 std::to_string(total) + " iterations",
                             eig, abs1(h(hi, hi - 1)));
    }

    cplx mu;
    if (since_deflation > 0 && since_deflation % 10 == 0) {
      // exceptional shift
      mu = h(hi, hi) + 0.75 * abs1(h(hi, hi - 1));
    } else {
      mu = wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    const std::size_t l = static_cast<std::size_t>(lo);
    const std::size_t m = static_cast<std::size_t>(hi);
    cplx x = h(l, l) - mu;
    cplx y = h(l + 1, l);
    for (std::size_t k = l; k < m; ++k) {
      const Givens g = make_givens(x, y);
      const std::size_t jstart = k == l ? l : k - 1;
      for (std::size_t j = jstart; j <= m; ++j) {
        const cplx t1 = h(k, j);
        const cplx t2 = h(k + 1, j);
        h(k, j) = g.c * t1 + g.s * t2;
        h(k + 1, j) = -std::conj(g.s) * t1 + g.c * t2;
      }
      const std::size_t iend = std::min(k + 2, m);
      for (std::size_t i = l; i <= iend; ++i) {
        const cplx t1 = h(i, k);
        const cplx t2 = h(i, k + 1);
        h(i, k) = t1 * g.c + t2 * std::conj(g.s);
        h(i, k + 1) = -t1 * g.s + t2 * g.c;
      }
      if (k + 1 < m) {
        x = h(k + 1, k);
        y = h(k + 2, k);
      }
    }
    ++total;
    ++since_deflation;
  }
  return eig;
}

}  // namespace phaselag::linalg
