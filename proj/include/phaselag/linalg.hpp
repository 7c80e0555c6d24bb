#ifndef PHASELAG_LINALG_HPP
#define PHASELAG_LINALG_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace phaselag::linalg {

using cplx = std::complex<double>;

/// Base class of every error raised by the dense kernels.
class LinalgError : public std::runtime_error {
public:
  explicit LinalgError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exactly zero pivot was met during LU factorization.
class SingularMatrixError : public LinalgError {
public:
  SingularMatrixError(std::size_t pivot, const std::string& where);
  std::size_t pivot() const noexcept { return pivot_; }

private:
  std::size_t pivot_;
};

/// An iteration hit its step limit. Carries whatever was computed so far.
class ConvergenceError : public LinalgError {
public:
  ConvergenceError(const std::string& msg, std::vector<cplx> partial,
                   double residual)
      : LinalgError(msg), partial_(std::move(partial)), residual_(residual) {}
  const std::vector<cplx>& partial() const noexcept { return partial_; }
  double residual() const noexcept { return residual_; }

private:
  std::vector<cplx> partial_;
  double residual_;
};

/// Non-finite values were produced (e.g. exponential overflow).
class OverflowError : public LinalgError {
public:
  explicit OverflowError(const std::string& msg) : LinalgError(msg) {}
};

/**
 * Dense complex matrix, row-major.
 *
 * Every kernel in this namespace takes and returns these by value or const
 * reference; nothing keeps a reference to a caller's matrix.
 */
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const cplx> d);
  static ComplexMatrix column(std::span<const cplx> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }
  bool square() const noexcept { return rows_ == cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<cplx> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const cplx> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const cplx> data() const noexcept { return data_; }

  std::vector<cplx> col(std::size_t j) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& block);
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  /// this + s·I
  ComplexMatrix shifted(cplx s) const;

  double norm_fro() const;
  double norm_one() const;
  double norm_max() const;
  bool all_finite() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
std::vector<cplx> operator*(const ComplexMatrix& a, std::span<const cplx> x);

/// Block-diagonal direct sum.
ComplexMatrix direct_sum(std::span<const ComplexMatrix> blocks);

/// Hermitian inner product xᴴy.
cplx dot(std::span<const cplx> x, std::span<const cplx> y);
double norm2(std::span<const cplx> x);

/// LU factorization with partial pivoting, PA = LU.
class LuFactorization {
public:
  explicit LuFactorization(ComplexMatrix a);

  std::size_t size() const noexcept { return lu_.rows(); }
  /// Smallest |u_kk|; zero means the matrix is exactly singular.
  double min_pivot() const noexcept { return min_pivot_; }
  std::size_t min_pivot_index() const noexcept { return min_pivot_index_; }
  bool singular() const noexcept { return min_pivot_ == 0.0; }

  /// Solves A·X = B. Throws SingularMatrixError on a zero pivot.
  ComplexMatrix solve(const ComplexMatrix& b) const;
  void solve_in_place(std::span<cplx> x) const;
  /// Solves Aᴴ·x = b.
  void solve_adjoint_in_place(std::span<cplx> x) const;

private:
  void require_regular() const;

  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
  double min_pivot_ = 0.0;
  std::size_t min_pivot_index_ = 0;
};

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenOptions {
  /// Iteration budget is max_iterations_per_dim · n across all deflations.
  int max_iterations_per_dim = 30;
  bool balance = true;
};

/// Eigenvalues via balancing, Householder Hessenberg reduction and the
/// implicitly shifted QR iteration with Wilkinson shifts. Order unspecified.
std::vector<cplx> eigenvalues(const ComplexMatrix& a, const EigenOptions& opts = {});

/// Eigen-decomposition of a Hermitian matrix (cyclic Jacobi).
struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< columns, matching `values`
};
HermitianEigen hermitian_eigen(const ComplexMatrix& h, bool want_vectors = true);

/**
 * Hermitian positive definite matrix defining ⟨x, y⟩_G = yᴴGx.
 *
 * The Cholesky factor is computed on first use. Copies share it; the factor
 * is published through std::call_once, so concurrent readers are safe.
 */
class GramMatrix {
public:
  GramMatrix() = default;
  /// Throws LinalgError when `g` is not Hermitian to 1e-12 relative.
  explicit GramMatrix(ComplexMatrix g);

  const ComplexMatrix& matrix() const;
  std::size_t size() const { return matrix().rows(); }
  /// Lower-triangular L with G = L·Lᴴ. Throws LinalgError if G is not
  /// positive definite.
  const ComplexMatrix& cholesky() const;
  bool positive_definite() const;

  double inner(std::span<const cplx> x) const;  ///< ‖x‖²_G
  cplx inner(std::span<const cplx> x, std::span<const cplx> y) const;

  /// y ← Lᴴx, the isometry from (ℂⁿ, G) onto (ℂⁿ, I).
  std::vector<cplx> to_euclidean(std::span<const cplx> x) const;
  /// x ← L⁻ᴴy.
  std::vector<cplx> from_euclidean(std::span<const cplx> y) const;
  /// Lᴴ·M·L⁻ᴴ: the matrix of M in a G-orthonormal basis.
  ComplexMatrix similarity(const ComplexMatrix& m) const;

  static GramMatrix identity(std::size_t n);
  static GramMatrix direct_sum(std::span<const GramMatrix> blocks);

  struct State;  // opaque

private:
  std::shared_ptr<State> state_;
};

struct NormOptions {
  int max_iterations = 500;
  double tolerance = 1e-13;  ///< relative change of the squared Ritz value
  std::uint64_t seed = 20240607;
  std::size_t block_size = 6;
};

struct NormResult {
  double value = 0.0;
  int iterations = 0;
  /// Relative residual ‖Hq − θq‖/θ of the top Ritz pair at exit.
  double residual = 0.0;
  bool singular = false;  ///< resolvent evaluated at a point of the spectrum
};

/**
 * ‖(λI − A)⁻¹‖_G, the operator norm induced by the G inner product.
 *
 * Equals the largest singular value of Lᴴ(λI − A)⁻¹L⁻ᴴ. Computed by block
 * power iteration with Rayleigh–Ritz on the resolvent composed with its
 * adjoint, every application being a pair of LU solves with λI − A; the
 * inverse is never formed. Returns +∞ (singular = true) when λI − A is
 * singular to working precision. Throws ConvergenceError after
 * max_iterations steps.
 */
NormResult weighted_resolvent_norm(const ComplexMatrix& a, const GramMatrix& g,
                                   cplx lambda, const NormOptions& opts = {});

/// ‖M‖_G = ‖Lᴴ M L⁻ᴴ‖₂, same iteration as the resolvent norm.
NormResult weighted_norm(const ComplexMatrix& m, const GramMatrix& g,
                         const NormOptions& opts = {});

/// sup Re⟨Ax, x⟩_G / ⟨x, x⟩_G: largest eigenvalue of the pencil
/// ((GA + AᴴG)/2, G), reduced with the Cholesky factor of G.
double numerical_abscissa(const ComplexMatrix& a, const GramMatrix& g);

struct ExpmOptions {
  /// Scaling threshold for the degree-13 Padé core; smaller is more accurate.
  double theta = 5.371920351148152;
};

/// exp(tA) by scaling and squaring. Throws OverflowError instead of
/// returning non-finite entries.
ComplexMatrix matrix_exponential(const ComplexMatrix& a, double t,
                                 const ExpmOptions& opts = {});

}  // namespace phaselag::linalg

#endif  // PHASELAG_LINALG_HPP
