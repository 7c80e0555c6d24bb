#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "phaselag/linalg.hpp"

using namespace phaselag::linalg;
using oracle::cplx;

namespace {

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return oracle::from_eigen(oracle::random_matrix(n, rng));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).norm_max();
}

// Characteristic polynomial coefficients by Faddeev–LeVerrier, ascending powers.
std::vector<cplx> characteristic_polynomial(const oracle::Mat& a) {
  const auto n = a.rows();
  std::vector<cplx> c(n + 1);
  c[n] = 1.0;
  oracle::Mat m = oracle::Mat::Zero(n, n);
  const oracle::Mat id = oracle::Mat::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c[n - k + 1] * id;
    c[n - k] = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

}  // namespace

TEST_SUITE("lu") {
  TEST_CASE("identity system returns the right-hand side") {
    const ComplexMatrix b{{1.0, cplx(2, 1)}, {-3.0, 0.5}, {cplx(0, 4), 7.0}};
    const auto x = lu_solve(ComplexMatrix::identity(3), b);
    CHECK(max_abs_diff(x, b) == 0.0);
  }

  TEST_CASE("diagonal system") {
    const ComplexMatrix a{{2.0, 0.0}, {0.0, 4.0}};
    const ComplexMatrix b{{2.0}, {4.0}};
    const auto x = lu_solve(a, b);
    CHECK(std::abs(x(0, 0) - 1.0) < 1e-15);
    CHECK(std::abs(x(1, 0) - 1.0) < 1e-15);
  }

  TEST_CASE("random 8x8 recovers the manufactured solution") {
    const auto a = random_matrix(8, 11);
    const auto xstar = random_matrix(8, 12).block(0, 0, 8, 3);
    const auto x = lu_solve(a, a * xstar);
    CHECK(max_abs_diff(x, xstar) < 1e-10);
    CHECK((a * x - a * xstar).norm_fro() <= 1e-10 * a.norm_fro() * x.norm_fro());
  }

  TEST_CASE("adjoint solve") {
    const auto a = random_matrix(7, 3);
    const LuFactorization lu(a);
    std::vector<cplx> x(7);
    for (std::size_t i = 0; i < 7; ++i) x[i] = cplx(double(i), 1.0 - double(i));
    const auto b = a.adjoint() * std::span<const cplx>(x);
    auto y = b;
    lu.solve_adjoint_in_place(y);
    for (std::size_t i = 0; i < 7; ++i) CHECK(std::abs(y[i] - x[i]) < 1e-12);
  }

  TEST_CASE("exactly singular matrix reports the pivot index") {
    const ComplexMatrix a{{1.0, 2.0, 3.0}, {2.0, 4.0, 6.0}, {0.0, 0.0, 1.0}};
    try {
      lu_solve(a, ComplexMatrix::identity(3));
      FAIL("expected SingularMatrixError");
    } catch (const SingularMatrixError& e) {
      CHECK(e.pivot() < 3);
      CHECK(std::string(e.what()).find("singular matrix") != std::string::npos);
    }
  }
}

TEST_SUITE("eigenvalues") {
  TEST_CASE("diagonal matrix") {
    const std::vector<cplx> d = {1.0, cplx(0, 2), -3.0};
    const auto ev = eigenvalues(ComplexMatrix::diagonal(d));
    CHECK(oracle::multiset_distance(ev, d) < 1e-14);
  }

  TEST_CASE("rotation generator") {
    const ComplexMatrix a{{0.0, 1.0}, {-1.0, 0.0}};
    const auto ev = eigenvalues(a);
    CHECK(oracle::multiset_distance(ev, {cplx(0, 1), cplx(0, -1)}) < 1e-14);
  }

  TEST_CASE("random 6x6 against characteristic polynomial roots") {
    std::mt19937_64 rng(5);
    const auto ea = oracle::random_matrix(6, rng);
    const auto roots = oracle::polynomial_roots(characteristic_polynomial(ea));
    const auto ev = eigenvalues(oracle::from_eigen(ea));
    CHECK(oracle::multiset_distance(ev, roots) < 1e-8);
  }

  TEST_CASE("backward error on larger random matrices") {
    for (std::size_t n : {1, 2, 17, 60}) {
      std::mt19937_64 rng(100 + n);
      const auto ea = oracle::random_matrix(n, rng);
      const auto ev = eigenvalues(oracle::from_eigen(ea));
      REQUIRE(ev.size() == n);
      const double anorm = Eigen::JacobiSVD<oracle::Mat>(ea).singularValues()(0);
      for (const auto& lam : ev) {
        const oracle::Mat shifted = ea - lam * oracle::Mat::Identity(n, n);
        const auto sv = Eigen::JacobiSVD<oracle::Mat>(shifted).singularValues();
        CHECK(sv(n - 1) <= 1e-9 * anorm);
      }
    }
  }

  TEST_CASE("badly scaled matrix keeps small eigenvalues after balancing") {
    // similarity of diag(−0.1, −1e4) by a wildly scaled diagonal
    const ComplexMatrix a{{-0.1, 1e-8}, {0.0, -1e4}};
    const ComplexMatrix d{{1e6, 0.0}, {0.0, 1e-6}};
    const ComplexMatrix dinv{{1e-6, 0.0}, {0.0, 1e6}};
    const auto ev = eigenvalues(d * a * dinv);
    CHECK(oracle::multiset_distance(ev, {-0.1, -1e4}) < 1e-10);
  }

  TEST_CASE("non-convergence raises with partial results") {
    const auto a = random_matrix(12, 9);
    EigenOptions opts;
    opts.max_iterations_per_dim = 0;
    CHECK_THROWS_AS(eigenvalues(a, opts), ConvergenceError);
  }
}

TEST_SUITE("hermitian") {
  TEST_CASE("agrees with an independent self-adjoint solver") {
    std::mt19937_64 rng(21);
    for (std::size_t n : {1, 3, 10, 25}) {
      const oracle::Mat b = oracle::random_matrix(n, rng);
      const oracle::Mat h = b + b.adjoint();
      const auto mine = hermitian_eigen(oracle::from_eigen(h));
      Eigen::SelfAdjointEigenSolver<oracle::Mat> es(h);
      for (std::size_t k = 0; k < n; ++k)
        CHECK(std::abs(mine.values[k] - es.eigenvalues()(k)) < 1e-11 * (1.0 + h.norm()));
      // H v = λ v
      const auto hm = oracle::from_eigen(h);
      for (std::size_t k = 0; k < n; ++k) {
        const auto v = mine.vectors.col(k);
        const auto hv = hm * std::span<const cplx>(v);
        double r = 0.0;
        for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(hv[i] - mine.values[k] * v[i]));
        CHECK(r < 1e-10 * (1.0 + h.norm()));
      }
    }
  }
}

TEST_SUITE("gram") {
  TEST_CASE("rejects non-Hermitian input") {
    CHECK_THROWS_AS(GramMatrix(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}), LinalgError);
  }

  TEST_CASE("indefinite input fails Cholesky") {
    const GramMatrix g(ComplexMatrix{{1.0, 2.0}, {2.0, 1.0}});
    CHECK_FALSE(g.positive_definite());
    CHECK_THROWS_AS(g.cholesky(), LinalgError);
  }

  TEST_CASE("factor reproduces G and is shared across concurrent readers") {
    std::mt19937_64 rng(4);
    const auto gm = oracle::from_eigen(oracle::random_spd(9, rng));
    const GramMatrix g(gm);
    std::vector<const ComplexMatrix*> seen(4);
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < seen.size(); ++k)
      pool.emplace_back([&, k] { seen[k] = &g.cholesky(); });
    for (auto& t : pool) t.join();
    for (auto* p : seen) CHECK(p == seen[0]);
    const auto& l = g.cholesky();
    CHECK(max_abs_diff(l * l.adjoint(), gm) < 1e-12 * gm.norm_max());
    const GramMatrix copy = g;
    CHECK(&copy.cholesky() == &l);
  }
}

TEST_SUITE("weighted_resolvent_norm") {
  TEST_CASE("scalar resolvent") {
    const auto r = weighted_resolvent_norm(ComplexMatrix{{-1.0}}, GramMatrix::identity(1), cplx(0, 1));
    CHECK(r.value == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  }

  TEST_CASE("diagonal weight commuting with a diagonal generator") {
    const GramMatrix g(ComplexMatrix{{1.0, 0.0}, {0.0, 4.0}});
    const auto r = weighted_resolvent_norm(ComplexMatrix{{-1.0, 0.0}, {0.0, -2.0}}, g, 0.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("random stable 5x5 against dense SVD") {
    std::mt19937_64 rng(77);
    oracle::Mat a = oracle::random_matrix(5, rng);
    a -= 6.0 * oracle::Mat::Identity(5, 5);
    const oracle::Mat g = oracle::random_spd(5, rng);
    const double want = oracle::resolvent_norm_svd(a, g, cplx(0, 2));
    const auto got = weighted_resolvent_norm(oracle::from_eigen(a), GramMatrix(oracle::from_eigen(g)), cplx(0, 2));
    CHECK(std::abs(got.value - want) <= 1e-8 * want);
  }

  TEST_CASE("identity weight reduces to the Euclidean resolvent norm") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      std::mt19937_64 rng(seed);
      const oracle::Mat a = oracle::random_matrix(12, rng);
      const cplx lambda(0.3, 1.7);
      const oracle::Mat r = (lambda * oracle::Mat::Identity(12, 12) - a).inverse();
      const double want = Eigen::JacobiSVD<oracle::Mat>(r).singularValues()(0);
      const auto got = weighted_resolvent_norm(oracle::from_eigen(a), GramMatrix::identity(12), lambda);
      CHECK(std::abs(got.value - want) <= 1e-8 * want);
    }
  }

  TEST_CASE("Hermitian negative definite closed form") {
    std::mt19937_64 rng(8);
    const oracle::Mat b = oracle::random_matrix(10, rng);
    const oracle::Mat a = -(b.adjoint() * b) - oracle::Mat::Identity(10, 10);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(a);
    for (double gamma : {0.0, 0.5, 3.0, 40.0}) {
      double dmin = 1e300;
      for (Eigen::Index j = 0; j < 10; ++j)
        dmin = std::min(dmin, std::sqrt(gamma * gamma + es.eigenvalues()(j) * es.eigenvalues()(j)));
      const auto got = weighted_resolvent_norm(oracle::from_eigen(a), GramMatrix::identity(10), cplx(0, gamma));
      CHECK(std::abs(got.value - 1.0 / dmin) <= 1e-10 / dmin);
    }
  }

  TEST_CASE("point of the spectrum gives infinity") {
    const ComplexMatrix a{{0.0, 1.0}, {-1.0, 0.0}};
    const auto r = weighted_resolvent_norm(a, GramMatrix::identity(2), cplx(0, 1));
    CHECK(r.singular);
    CHECK(std::isinf(r.value));
  }

  TEST_CASE("close singular values still converge") {
    // two nearly equal resolvent singular values stress the power iteration
    const std::vector<cplx> d = {-1.0, -1.0 - 1e-6, -5.0, -7.0, -9.0, -11.0, -13.0, -17.0};
    const auto r = weighted_resolvent_norm(ComplexMatrix::diagonal(d), GramMatrix::identity(d.size()), 0.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("iteration cap raises") {
    std::mt19937_64 rng(1);
    const auto a = oracle::from_eigen(oracle::random_matrix(30, rng));
    NormOptions opts;
    opts.max_iterations = 1;
    opts.block_size = 1;
    CHECK_THROWS_AS(weighted_resolvent_norm(a, GramMatrix::identity(30), cplx(0, 1), opts), ConvergenceError);
  }
}

TEST_SUITE("numerical_abscissa") {
  TEST_CASE("skew generator") {
    CHECK(std::abs(numerical_abscissa(ComplexMatrix{{0.0, 1.0}, {-1.0, 0.0}}, GramMatrix::identity(2))) < 1e-15);
  }

  TEST_CASE("diagonal generator") {
    CHECK(numerical_abscissa(ComplexMatrix{{-1.0, 0.0}, {0.0, -2.0}}, GramMatrix::identity(2)) ==
          doctest::Approx(-1.0).epsilon(1e-14));
  }

  TEST_CASE("shift equivariance") {
    std::mt19937_64 rng(31);
    const auto a = oracle::from_eigen(oracle::random_matrix(7, rng));
    const GramMatrix g(oracle::from_eigen(oracle::random_spd(7, rng)));
    const double c0 = 0.37;
    const double base = numerical_abscissa(a, g);
    const double shifted = numerical_abscissa(a.shifted(-2.0 * c0), g);
    CHECK(std::abs(shifted - (base - 2.0 * c0)) <= 1e-12 * (1.0 + a.norm_fro()));
  }

  TEST_CASE("dominates the weighted Rayleigh quotient of random vectors") {
    std::mt19937_64 rng(32);
    const auto ea = oracle::random_matrix(6, rng);
    const auto eg = oracle::random_spd(6, rng);
    const double nu = numerical_abscissa(oracle::from_eigen(ea), GramMatrix(oracle::from_eigen(eg)));
    std::normal_distribution<double> d;
    double best = -1e300;
    for (int k = 0; k < 20000; ++k) {
      Eigen::VectorXcd x(6);
      for (int i = 0; i < 6; ++i) x(i) = cplx(d(rng), d(rng));
      const double q = (x.adjoint() * eg * ea * x)(0).real() / (x.adjoint() * eg * x)(0).real();
      best = std::max(best, q);
    }
    CHECK(best <= nu + 1e-12);
    // independent pencil reduction
    const oracle::Mat s = (eg * ea + ea.adjoint() * eg) / 2.0;
    Eigen::LLT<oracle::Mat> llt(eg);
    const oracle::Mat li = llt.matrixL().solve(oracle::Mat::Identity(6, 6));
    const oracle::Mat red = li * s * li.adjoint();
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es((red + red.adjoint()) / 2.0);
    CHECK(std::abs(nu - es.eigenvalues()(5)) <= 1e-9 * (1.0 + ea.norm()));
  }
}

TEST_SUITE("matrix_exponential") {
  TEST_CASE("zero time gives the identity") {
    const auto a = random_matrix(4, 2);
    CHECK(max_abs_diff(matrix_exponential(a, 0.0), ComplexMatrix::identity(4)) == 0.0);
  }

  TEST_CASE("scalar log 2") {
    const auto e = matrix_exponential(ComplexMatrix{{std::log(2.0)}}, 1.0);
    CHECK(std::abs(e(0, 0) - 2.0) < 1e-14);
  }

  TEST_CASE("random diagonalizable matrix against eigendecomposition") {
    std::mt19937_64 rng(6);
    const oracle::Mat a = oracle::random_matrix(6, rng);
    Eigen::ComplexEigenSolver<oracle::Mat> es(a);
    const double t = 0.7;
    const Eigen::VectorXcd expd = (es.eigenvalues() * t).array().exp();
    const oracle::Mat want = es.eigenvectors() * expd.asDiagonal() * es.eigenvectors().inverse();
    const auto got = matrix_exponential(oracle::from_eigen(a), t);
    CHECK((oracle::to_eigen(got) - want).norm() <= 1e-8 * want.norm());
  }

  TEST_CASE("semigroup property") {
    std::mt19937_64 rng(10);
    const oracle::Mat ea = oracle::random_matrix(5, rng);
    const auto a = oracle::from_eigen(ea / ea.norm());
    for (auto [t, s] : {std::pair{0.3, 1.1}, std::pair{2.0, 5.0}, std::pair{4.0, 4.0}}) {
      const auto lhs = matrix_exponential(a, t + s);
      const auto rhs = matrix_exponential(a, t) * matrix_exponential(a, s);
      CHECK(max_abs_diff(lhs, rhs) <= 1e-8 * lhs.norm_max());
    }
  }

  TEST_CASE("large norm stays accurate") {
    // exp of [[−a, 1], [0, −a]] is e^{−a}[[1, t], [0, 1]]
    const double a = 300.0;
    const auto e = matrix_exponential(ComplexMatrix{{-a, 1.0}, {0.0, -a}}, 1.0);
    CHECK(std::abs(e(0, 0) - std::exp(-a)) <= 1e-9 * std::exp(-a));
    CHECK(std::abs(e(0, 1) - std::exp(-a)) <= 1e-9 * std::exp(-a));
  }

  TEST_CASE("overflow raises instead of returning infinities") {
    CHECK_THROWS_AS(matrix_exponential(ComplexMatrix{{800.0}}, 1.0), OverflowError);
  }
}
