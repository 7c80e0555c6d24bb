#include "phaselag/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace phaselag::linalg {

HermitianEigen hermitian_eigen(const ComplexMatrix& input, bool want_vectors) {
  if (!input.square() || input.empty()) throw LinalgError("hermitian_eigen: matrix must be square");
  const std::size_t n = input.rows();
  ComplexMatrix a = input;
  // Symmetrize: only the Hermitian part is meaningful.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix{};
  constexpr int kMaxSweeps = 100;
  const double eps = std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      diag += std::norm(a(i, i));
      for (std::size_t j = i + 1; j < n; ++j) off += std::norm(a(i, j));
    }
    if (off <= eps * eps * diag * 1e-2 || off == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq == 0.0) continue;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (apq <= eps * 1e-3 * std::sqrt(std::abs(app * aqq))) {
          a(p, q) = a(q, p) = cplx{};
          continue;
        }
        const cplx e = a(p, q) / apq;
        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const cplx ce = std::conj(e);

        // A ← A·U with U_pp = c, U_pq = s, U_qp = −s·ē, U_qq = c·ē
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          a(i, p) = c * aip - s * ce * aiq;
          a(i, q) = s * aip + c * ce * aiq;
        }
        // A ← Uᴴ·A
        for (std::size_t j = 0; j < n; ++j) {
          const cplx apj = a(p, j);
          const cplx aqj = a(q, j);
          a(p, j) = c * apj - s * e * aqj;
          a(q, j) = s * apj + c * e * aqj;
        }
        a(p, q) = a(q, p) = cplx{};
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        if (want_vectors) {
          for (std::size_t i = 0; i < n; ++i) {
            const cplx vip = v(i, p);
            const cplx viq = v(i, q);
            v(i, p) = c * vip - s * ce * viq;
            v(i, q) = s * vip + c * ce * viq;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out;
  out.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.values[k] = a(order[k], order[k]).real();
  if (want_vectors) {
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace phaselag::linalg
