#include "phaselag/linalg.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace phaselag::linalg {

LuFactorization::LuFactorization(ComplexMatrix a) : lu_(std::move(a)) {
  if (!lu_.square() || lu_.empty()) throw LinalgError("LU: matrix must be square and non-empty");
  const std::size_t n = lu_.rows();
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  min_pivot_ = std::numeric_limits<double>::infinity();

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (p != k) {
      std::swap_ranges(lu_.row(k).begin(), lu_.row(k).end(), lu_.row(p).begin());
      std::swap(perm_[k], perm_[p]);
    }
    if (best < min_pivot_) {
      min_pivot_ = best;
      min_pivot_index_ = k;
    }
    if (best == 0.0) continue;
    const cplx inv = 1.0 / lu_(k, k);
    auto rk = lu_.row(k);
    for (std::size_t i = k + 1; i < n; ++i) {
      auto ri = lu_.row(i);
      const cplx l = ri[k] * inv;
      ri[k] = l;
      if (l == cplx{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) ri[j] -= l * rk[j];
    }
  }
}

void LuFactorization::require_regular() const {
  if (singular()) throw SingularMatrixError(min_pivot_index_, "lu_solve");
}

void LuFactorization::solve_in_place(std::span<cplx> x) const {
  require_regular();
  const std::size_t n = size();
  std::vector<cplx> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = x[perm_[i]];
  for (std::size_t i = 0; i < n; ++i) {
    auto ri = lu_.row(i);
    cplx s = y[i];
    for (std::size_t j = 0; j < i; ++j) s -= ri[j] * y[j];
    y[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    auto ri = lu_.row(i);
    cplx s = y[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= ri[j] * y[j];
    y[i] = s / ri[i];
  }
  std::copy(y.begin(), y.end(), x.begin());
}

// A = PᵀLU, so Aᴴ = UᴴLᴴP: solve Uᴴz = b, Lᴴw = z, x = Pᵀw.
void LuFactorization::solve_adjoint_in_place(std::span<cplx> x) const {
  require_regular();
  const std::size_t n = size();
  std::vector<cplx> z(x.begin(), x.end());
  for (std::size_t j = 0; j < n; ++j) {
    z[j] /= std::conj(lu_(j, j));
    const cplx zj = z[j];
    auto rj = lu_.row(j);
    for (std::size_t i = j + 1; i < n; ++i) z[i] -= std::conj(rj[i]) * zj;
  }
  for (std::size_t j = n; j-- > 0;) {
    const cplx zj = z[j];
    auto rj = lu_.row(j);
    for (std::size_t i = 0; i < j; ++i) z[i] -= std::conj(rj[i]) * zj;
  }
  for (std::size_t i = 0; i < n; ++i) x[perm_[i]] = z[i];
}

ComplexMatrix LuFactorization::solve(const ComplexMatrix& b) const {
  if (b.rows() != size()) throw LinalgError("lu_solve: right-hand side not conformal");
  ComplexMatrix x(b.rows(), b.cols());
  std::vector<cplx> col(b.rows());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, j);
    solve_in_place(col);
    for (std::size_t i = 0; i < b.rows(); ++i) x(i, j) = col[i];
  }
  return x;
}

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
  return LuFactorization(a).solve(b);
}

}  // namespace phaselag::linalg
