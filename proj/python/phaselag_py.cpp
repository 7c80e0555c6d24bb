#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "phaselag/analysis.hpp"
#include "phaselag/cli.hpp"
#include "phaselag/modal.hpp"
#include "phaselag/model.hpp"

namespace py = pybind11;
using namespace phaselag;
using linalg::cplx;
using linalg::ComplexMatrix;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-D array");
  ComplexMatrix m(a.shape(0), a.shape(1));
  auto r = a.unchecked<2>();
  for (py::ssize_t i = 0; i < a.shape(0); ++i)
    for (py::ssize_t j = 0; j < a.shape(1); ++j) m(i, j) = r(i, j);
  return m;
}

CArray to_array(const ComplexMatrix& m) {
  CArray a({m.rows(), m.cols()});
  auto w = a.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
  return a;
}

PhaseLagModel make_model(std::vector<double> a, std::vector<double> b, double beta, double kappa1) {
  PhaseLagModel m;
  m.a = std::move(a);
  m.b = std::move(b);
  m.beta = beta;
  m.kappa1 = kappa1;
  return m;
}

}  // namespace

PYBIND11_MODULE(_phaselag, m) {
  m.doc() = "Phase-lag thermoelastic plate: operators, resolvent norms and fits";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<linalg::LinalgError>(m, "LinalgError", PyExc_RuntimeError);

  m.def(
      "taylor_coefficients",
      [](double tau_q, double tau_theta, double k_cond, int n) {
        const auto t = taylor_coefficients(tau_q, tau_theta, k_cond, n);
        return py::make_tuple(t.a, t.b);
      },
      py::arg("tau_q"), py::arg("tau_theta"), py::arg("k_cond"), py::arg("n"));

  m.def(
      "dirichlet_eigenvalues",
      [](double L1, double L2, std::size_t K) {
        std::vector<double> d;
        for (const auto& mode : dirichlet_eigenvalues(Rectangle{L1, L2}, K)) d.push_back(mode.d);
        return d;
      },
      py::arg("L1"), py::arg("L2"), py::arg("K"));

  m.def(
      "assemble_block",
      [](std::vector<double> a, std::vector<double> b, double d, double beta, double kappa1,
         bool literal) {
        const auto model = validate(make_model(std::move(a), std::move(b), beta, kappa1), Rectangle{});
        const auto blk = assemble_block(model, {1, 1, d},
                                        literal ? GeneratorVariant::paper_literal : GeneratorVariant::consistent);
        return py::make_tuple(to_array(blk.M), to_array(blk.G.matrix()));
      },
      py::arg("a"), py::arg("b"), py::arg("d"), py::arg("beta") = 1.0, py::arg("kappa1") = 1.0,
      py::arg("paper_literal_generator") = false,
      "Mode block (M, G) for eigenvalue d of the Dirichlet Laplacian.");

  m.def(
      "weighted_resolvent_norm",
      [](const CArray& a, const CArray& g, cplx lambda) {
        const auto A = to_matrix(a);
        const linalg::GramMatrix G(to_matrix(g));
        py::gil_scoped_release release;
        return linalg::weighted_resolvent_norm(A, G, lambda).value;
      },
      py::arg("A"), py::arg("G"), py::arg("lam"));

  m.def(
      "eigenvalues",
      [](const CArray& a) {
        const auto A = to_matrix(a);
        py::gil_scoped_release release;
        return linalg::eigenvalues(A);
      },
      py::arg("A"));

  m.def(
      "numerical_abscissa",
      [](const CArray& a, const CArray& g) {
        return linalg::numerical_abscissa(to_matrix(a), linalg::GramMatrix(to_matrix(g)));
      },
      py::arg("A"), py::arg("G"));

  m.def(
      "matrix_exponential",
      [](const CArray& a, double t) { return to_array(linalg::matrix_exponential(to_matrix(a), t)); },
      py::arg("A"), py::arg("t") = 1.0);

  m.def(
      "gevrey_fit",
      [](std::vector<double> gamma, std::vector<double> norms, double lo, double hi) {
        const auto f = phaselag::gevrey_fit(gamma, norms, lo, hi);
        py::dict out;
        out["varsigma"] = f.varsigma;
        out["C"] = f.C;
        out["r_squared"] = f.r_squared;
        out["samples"] = f.samples;
        return out;
      },
      py::arg("gamma"), py::arg("norms"), py::arg("window_lo"), py::arg("window_hi"));

  m.def(
      "run_cli",
      [](std::vector<std::string> args) {
        py::gil_scoped_release release;
        return run(args);
      },
      py::arg("args"), "Runs the command-line tool in process and returns its exit code.");
}
