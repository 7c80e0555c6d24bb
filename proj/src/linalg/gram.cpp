#include "phaselag/linalg.hpp"

#include <cmath>
#include <mutex>

namespace phaselag::linalg {

struct GramMatrix::State {
  ComplexMatrix g;
  std::once_flag once;
  ComplexMatrix l;
  bool positive_definite = false;
};

namespace {

void factor(GramMatrix::State& st) {
  const std::size_t n = st.g.rows();
  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = st.g(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) {
      st.positive_definite = false;
      return;
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      cplx s = st.g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  st.l = std::move(l);
  st.positive_definite = true;
}

}  // namespace

GramMatrix::GramMatrix(ComplexMatrix g) : state_(std::make_shared<State>()) {
  if (!g.square() || g.empty()) throw LinalgError("GramMatrix: matrix must be square");
  if (!g.all_finite()) throw LinalgError("GramMatrix: non-finite entries");
  const double scale = g.norm_max();
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i; j < g.cols(); ++j)
      if (std::abs(g(i, j) - std::conj(g(j, i))) > 1e-12 * scale)
        throw LinalgError("GramMatrix: not Hermitian at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
  state_->g = std::move(g);
}

const ComplexMatrix& GramMatrix::matrix() const {
  if (!state_) throw LinalgError("GramMatrix: empty");
  return state_->g;
}


bool GramMatrix::positive_definite() const {
  if (!state_) return false;
  std::call_once(state_->once, [this] { factor(*state_); });
  return state_->positive_definite;
}

const ComplexMatrix& GramMatrix::cholesky() const {
  if (!positive_definite()) throw LinalgError("GramMatrix: Cholesky failed, matrix not positive definite");
  return state_->l;
}

double GramMatrix::inner(std::span<const cplx> x) const { return inner(x, x).real(); }

cplx GramMatrix::inner(std::span<const cplx> x, std::span<const cplx> y) const {
  const auto gx = matrix() * x;
  return dot(y, gx);
}

std::vector<cplx> GramMatrix::to_euclidean(std::span<const cplx> x) const {
  const auto& l = cholesky();
  const std::size_t n = l.rows();
  std::vector<cplx> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    cplx s{};
    for (std::size_t k = i; k < n; ++k) s += std::conj(l(k, i)) * x[k];
    y[i] = s;
  }
  return y;
}

std::vector<cplx> GramMatrix::from_euclidean(std::span<const cplx> y) const {
  const auto& l = cholesky();
  const std::size_t n = l.rows();
  std::vector<cplx> x(y.begin(), y.end());
  for (std::size_t i = n; i-- > 0;) {
    cplx s = x[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= std::conj(l(k, i)) * x[k];
    x[i] = s / l(i, i);
  }
  return x;
}

ComplexMatrix GramMatrix::similarity(const ComplexMatrix& m) const {
  const std::size_t n = size();
  if (m.rows() != n || m.cols() != n) throw LinalgError("similarity: dimension mismatch");
  // Row i of M·L⁻ᴴ solves L·rᴴ = (row i of M)ᴴ; then apply Lᴴ column-wise.
  const auto& l = cholesky();
  ComplexMatrix t(n, n);
  std::vector<cplx> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r[j] = std::conj(m(i, j));
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = r[j];
      for (std::size_t k = 0; k < j; ++k) s -= l(j, k) * r[k];
      r[j] = s / l(j, j);
    }
    for (std::size_t j = 0; j < n; ++j) t(i, j) = std::conj(r[j]);
  }
  ComplexMatrix out(n, n);
  std::vector<cplx> col(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = t(i, j);
    const auto y = to_euclidean(col);
    for (std::size_t i = 0; i < n; ++i) out(i, j) = y[i];
  }
  return out;
}

GramMatrix GramMatrix::identity(std::size_t n) { return GramMatrix(ComplexMatrix::identity(n)); }

GramMatrix GramMatrix::direct_sum(std::span<const GramMatrix> blocks) {
  std::vector<ComplexMatrix> mats;
  mats.reserve(blocks.size());
  for (const auto& b : blocks) mats.push_back(b.matrix());
  return GramMatrix(linalg::direct_sum(mats));
}

}  // namespace phaselag::linalg
