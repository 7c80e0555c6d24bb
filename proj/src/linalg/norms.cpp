#include "phaselag/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

namespace phaselag::linalg {
namespace {

using Apply = std::function<void(std::span<cplx>)>;

// Orthonormalizes the columns in place (modified Gram–Schmidt, two passes).
// Columns before `first` are taken as already orthonormal and left alone.
// Columns that collapse are replaced by fresh random directions.
void orthonormalize(std::vector<std::vector<cplx>>& q, std::mt19937_64& rng, std::size_t first = 0) {
  std::normal_distribution<double> normal;
  for (std::size_t j = first; j < q.size(); ++j) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      const double before = norm2(q[j]);
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < j; ++k) {
          const cplx c = dot(q[k], q[j]);
          for (std::size_t i = 0; i < q[j].size(); ++i) q[j][i] -= c * q[k][i];
        }
      }
      const double after = norm2(q[j]);
      if (after > 1e-10 * before && after > 0.0) {
        for (auto& x : q[j]) x /= after;
        break;
      }
      for (auto& x : q[j]) x = {normal(rng), normal(rng)};
    }
  }
}

// Largest eigenvalue θ of the Hermitian positive semidefinite operator
// H = Tᴴ·T, given T and Tᴴ as in-place callbacks; returns √θ = ‖T‖₂.
//
// Restarted block Krylov iteration: each sweep builds an orthonormal basis of
// [Q, HQ, …, H^m Q], does Rayleigh–Ritz on it and restarts from the top p Ritz
// vectors. Plain subspace iteration is the special case m = 0; the Krylov
// blocks matter when the top singular values cluster.
NormResult largest_singular_value(std::size_t n, const Apply& apply, const Apply& apply_adjoint,
                                  const NormOptions& opts) {
  const std::size_t p = std::max<std::size_t>(1, std::min(opts.block_size, n));
  constexpr std::size_t krylov_blocks = 5;
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> normal;
  std::vector<std::vector<cplx>> q(p, std::vector<cplx>(n));
  for (auto& col : q)
    for (auto& x : col) x = {normal(rng), normal(rng)};
  orthonormalize(q, rng);

  auto apply_h = [&](std::vector<cplx> x) {
    apply(x);
    apply_adjoint(x);
    return x;
  };

  NormResult out;
  double previous = -1.0;
  for (int it = 1; it <= opts.max_iterations; ++it) {
    std::vector<std::vector<cplx>> v = q, hv;
    for (const auto& col : v) hv.push_back(apply_h(col));
    for (std::size_t blk = 0; blk < krylov_blocks && v.size() < n; ++blk) {
      const std::size_t first = v.size() - std::min(p, v.size());
      const std::size_t take = std::min(p, n - v.size());
      std::vector<std::vector<cplx>> cand(hv.begin() + static_cast<std::ptrdiff_t>(first),
                                          hv.begin() + static_cast<std::ptrdiff_t>(first + take));
      const std::size_t before = v.size();
      v.insert(v.end(), cand.begin(), cand.end());
      orthonormalize(v, rng, before);
      for (std::size_t j = before; j < v.size(); ++j) hv.push_back(apply_h(v[j]));
    }
    const std::size_t k = v.size();
    ComplexMatrix s(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        s(i, j) = dot(v[i], hv[j]);
        s(j, i) = std::conj(s(i, j));
      }
    for (std::size_t i = 0; i < k; ++i) s(i, i) = s(i, i).real();
    const auto ritz = hermitian_eigen(s);
    const double theta = std::max(ritz.values.back(), 0.0);

    // Ritz vectors, largest first, and the residual of the top pair.
    std::vector<std::vector<cplx>> next(p, std::vector<cplx>(n));
    std::vector<cplx> r(n);
    for (std::size_t c = 0; c < p; ++c) {
      const std::size_t col = k - 1 - c;
      for (std::size_t m = 0; m < k; ++m) {
        const cplx w = ritz.vectors(m, col);
        if (w == cplx{}) continue;
        for (std::size_t i = 0; i < n; ++i) next[c][i] += w * v[m][i];
        if (c == 0)
          for (std::size_t i = 0; i < n; ++i) r[i] += w * (hv[m][i] - theta * v[m][i]);
      }
    }
    const double resid = theta > 0.0 ? norm2(r) / theta : 0.0;
    out.value = std::sqrt(theta);
    out.iterations = it;
    out.residual = resid;
    if (!std::isfinite(theta)) {
      out.value = std::numeric_limits<double>::infinity();
      out.singular = true;
      return out;
    }
    if (theta == 0.0 || k == n) return out;
    const bool stalled = previous >= 0.0 && std::abs(theta - previous) <= opts.tolerance * theta;
    if (resid <= 1e-9 || stalled) return out;
    previous = theta;
    q = std::move(next);
    orthonormalize(q, rng);
  }
  throw ConvergenceError("weighted norm: block power iteration did not converge after " +
                             std::to_string(opts.max_iterations) + " steps",
                         {cplx{out.value, 0.0}}, out.residual);
}

void lower_solve(const ComplexMatrix& l, std::span<cplx> x) {
  const std::size_t n = l.rows();
  for (std::size_t i = 0; i < n; ++i) {
    cplx s = x[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * x[k];
    x[i] = s / l(i, i);
  }
}

void lower_apply(const ComplexMatrix& l, std::span<cplx> x) {
  const std::size_t n = l.rows();
  for (std::size_t i = n; i-- > 0;) {
    cplx s{};
    for (std::size_t k = 0; k <= i; ++k) s += l(i, k) * x[k];
    x[i] = s;
  }
}

void copy_into(std::span<cplx> dst, const std::vector<cplx>& src) {
  std::copy(src.begin(), src.end(), dst.begin());
}

}  // namespace

NormResult weighted_resolvent_norm(const ComplexMatrix& a, const GramMatrix& g, cplx lambda,
                                   const NormOptions& opts) {
  if (!a.square()) throw LinalgError("weighted_resolvent_norm: matrix not square");
  const std::size_t n = a.rows();
  if (g.size() != n) throw LinalgError("weighted_resolvent_norm: Gram matrix not conformal");
  ComplexMatrix shifted = a;
  shifted *= -1.0;
  shifted = shifted.shifted(lambda);
  const LuFactorization lu(std::move(shifted));
  if (lu.singular()) {
    NormResult r;
    r.value = std::numeric_limits<double>::infinity();
    r.singular = true;
    return r;
  }
  const ComplexMatrix& l = g.cholesky();
  // T = Lᴴ(λI − A)⁻¹L⁻ᴴ, Tᴴ = L⁻¹(λI − A)⁻ᴴL.
  const Apply apply = [&](std::span<cplx> x) {
    auto y = g.from_euclidean(x);
    lu.solve_in_place(y);
    copy_into(x, g.to_euclidean(y));
  };
  const Apply apply_adjoint = [&](std::span<cplx> x) {
    lower_apply(l, x);
    lu.solve_adjoint_in_place(x);
    lower_solve(l, x);
  };
  return largest_singular_value(n, apply, apply_adjoint, opts);
}

NormResult weighted_norm(const ComplexMatrix& m, const GramMatrix& g, const NormOptions& opts) {
  if (!m.square()) throw LinalgError("weighted_norm: matrix not square");
  const std::size_t n = m.rows();
  if (g.size() != n) throw LinalgError("weighted_norm: Gram matrix not conformal");
  const ComplexMatrix& l = g.cholesky();
  const ComplexMatrix mh = m.adjoint();
  // T = Lᴴ M L⁻ᴴ, Tᴴ = L⁻¹ Mᴴ L.
  const Apply apply = [&](std::span<cplx> x) {
    const auto y = g.from_euclidean(x);
    copy_into(x, g.to_euclidean(m * std::span<const cplx>(y)));
  };
  const Apply apply_adjoint = [&](std::span<cplx> x) {
    lower_apply(l, x);
    const std::vector<cplx> tmp(x.begin(), x.end());
    copy_into(x, mh * std::span<const cplx>(tmp));
    lower_solve(l, x);
  };
  return largest_singular_value(n, apply, apply_adjoint, opts);
}

double numerical_abscissa(const ComplexMatrix& a, const GramMatrix& g) {
  if (!a.square() || g.size() != a.rows())
    throw LinalgError("numerical_abscissa: dimension mismatch");
  const ComplexMatrix& gm = g.matrix();
  const ComplexMatrix ga = gm * a;
  ComplexMatrix s = ga + ga.adjoint();
  s *= 0.5;
  const ComplexMatrix& l = g.cholesky();
  const std::size_t n = a.rows();
  // X = L⁻¹ S L⁻ᴴ = L⁻¹ (L⁻¹ S)ᴴ for Hermitian S.
  ComplexMatrix y(n, n);
  std::vector<cplx> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = s(i, j);
    lower_solve(l, col);
    for (std::size_t i = 0; i < n; ++i) y(i, j) = col[i];
  }
  const ComplexMatrix yh = y.adjoint();
  ComplexMatrix x(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = yh(i, j);
    lower_solve(l, col);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i];
  }
  return hermitian_eigen(x, false).values.back();
}

}  // namespace phaselag::linalg
