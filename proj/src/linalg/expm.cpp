#include "phaselag/linalg.hpp"

#include <array>
#include <cmath>

namespace phaselag::linalg {

// Degree-13 diagonal Padé approximant with scaling and squaring
// (Higham, SIAM J. Matrix Anal. Appl. 26, 2005).
ComplexMatrix matrix_exponential(const ComplexMatrix& a, double t, const ExpmOptions& opts) {
  if (!a.square() || a.empty()) throw LinalgError("matrix_exponential: matrix must be square");
  if (!std::isfinite(t)) throw LinalgError("matrix_exponential: non-finite time");
  if (!a.all_finite()) throw OverflowError("matrix_exponential: non-finite input");
  const std::size_t n = a.rows();
  if (t == 0.0) return ComplexMatrix::identity(n);

  static constexpr std::array<double, 14> b = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
      129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
      1323241920.0,        40840800.0,          960960.0,           16380.0,
      182.0,               1.0};

  ComplexMatrix x = a;
  x *= t;
  const double norm = x.norm_one();
  int squarings = 0;
  if (norm > opts.theta) squarings = static_cast<int>(std::ceil(std::log2(norm / opts.theta)));
  if (squarings > 1100) throw OverflowError("matrix_exponential: ‖tA‖ too large to scale");
  x *= std::ldexp(1.0, -squarings);

  const ComplexMatrix ident = ComplexMatrix::identity(n);
  const ComplexMatrix x2 = x * x;
  const ComplexMatrix x4 = x2 * x2;
  const ComplexMatrix x6 = x4 * x2;

  ComplexMatrix inner_u = b[13] * x6 + b[11] * x4 + b[9] * x2;
  ComplexMatrix u = x6 * inner_u + b[7] * x6 + b[5] * x4 + b[3] * x2 + b[1] * ident;
  u = x * u;
  ComplexMatrix inner_v = b[12] * x6 + b[10] * x4 + b[8] * x2;
  ComplexMatrix v = x6 * inner_v + b[6] * x6 + b[4] * x4 + b[2] * x2 + b[0] * ident;

  ComplexMatrix r = lu_solve(v - u, v + u);
  for (int k = 0; k < squarings; ++k) {
    r = r * r;
    if (!r.all_finite())
      throw OverflowError("matrix_exponential: overflow during squaring (step " +
                          std::to_string(k + 1) + " of " + std::to_string(squarings) + ")");
  }
  if (!r.all_finite()) throw OverflowError("matrix_exponential: non-finite result");
  return r;
}

}  // namespace phaselag::linalg
