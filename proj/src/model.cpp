#include "phaselag/model.hpp"

#include <cmath>
#include <sstream>

#include "phaselag/operator.hpp"

namespace phaselag {

std::string domain_name(const DomainSpec& d) {
  switch (d.index()) {
    case 0: return "rectangle";
    case 1: return "interval";
    default: return "concentric_discs";
  }
}

std::string Diagnostic::message() const {
  std::ostringstream os;
  os << constraint << " violated (" << field << " = " << actual << ")";
  return os.str();
}

namespace {

std::string join(const std::vector<Diagnostic>& diags) {
  std::string s = "invalid model:";
  for (const auto& d : diags) s += "\n  " + d.message();
  return s;
}

}  // namespace

ValidationError::ValidationError(std::vector<Diagnostic> diags)
    : std::runtime_error(join(diags)), diags_(std::move(diags)) {}

TaylorCoefficients taylor_coefficients(double tau_q, double tau_theta,
                                       double k_cond, int n) {
  if (n < 0) throw std::invalid_argument("taylor_coefficients: n must be >= 0");
  if (!(k_cond > 0.0)) throw std::invalid_argument("taylor_coefficients: k_cond must be > 0");
  if (tau_q < 0.0 || tau_theta < 0.0)
    throw std::invalid_argument("taylor_coefficients: delay times must be >= 0");
  if (n >= 1 && tau_q == 0.0)
    throw std::invalid_argument("degenerate a_n: tau_q = 0 with n >= 1");
  TaylorCoefficients t;
  double pq = 1.0, pt = 1.0, fact = 1.0;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) {
      pq *= tau_q;
      pt *= tau_theta;
      fact *= j;
    }
    t.a.push_back(pq / fact);
    t.b.push_back(k_cond * pt / fact);
  }
  return t;
}

std::vector<Diagnostic> check(const PhaseLagModel& m, const DomainSpec& domain) {
  std::vector<Diagnostic> out;
  auto need = [&](bool ok, const char* field, const char* constraint, double actual) {
    if (!ok) out.push_back({field, constraint, actual});
  };

  need(!m.a.empty(), "a", "n >= 0", static_cast<double>(m.a.size()) - 1.0);
  need(m.a.size() == m.b.size(), "b", "len(b) = len(a)", static_cast<double>(m.b.size()));
  for (std::size_t j = 0; j < m.a.size(); ++j)
    need(std::isfinite(m.a[j]), "a", "a_j finite", m.a[j]);
  for (std::size_t j = 0; j < m.b.size(); ++j)
    need(std::isfinite(m.b[j]), "b", "b_j finite", m.b[j]);
  if (!m.a.empty()) need(m.a.back() > 0.0, "a", "a_n > 0", m.a.back());
  if (!m.b.empty()) need(m.b.back() > 0.0, "b", "b_n > 0", m.b.back());

  need(m.rho > 0.0, "rho", "rho > 0", m.rho);
  need(m.rho == 1.0 || !(m.rho > 0.0), "rho", "rho = 1 (rescale beforehand)", m.rho);
  need(m.c_T > 0.0, "c_T", "c_T > 0", m.c_T);
  need(m.c_T == 1.0 || !(m.c_T > 0.0), "c_T", "c_T = 1 (rescale beforehand)", m.c_T);
  need(m.kappa1 > 0.0, "kappa1", "kappa1 > 0", m.kappa1);
  if (m.kappa2) need(*m.kappa2 > 0.0, "kappa2", "kappa2 > 0", *m.kappa2);
  need(std::isfinite(m.beta), "beta", "beta finite", m.beta);

  if (const auto* r = std::get_if<Rectangle>(&domain)) {
    need(r->L1 > 0.0, "L1", "L1 > 0", r->L1);
    need(r->L2 > 0.0, "L2", "L2 > 0", r->L2);
  } else if (const auto* i = std::get_if<Interval>(&domain)) {
    need(i->L > 0.0, "L", "L > 0", i->L);
  } else {
    const auto& c = std::get<ConcentricDiscs>(domain);
    need(c.R0 > 0.0, "R0", "R0 > 0", c.R0);
    need(c.R > 0.0, "R", "R > 0", c.R);
    need(c.R0 < c.R, "R0", "R0 < R", c.R0);
    need(m.kappa2.has_value(), "kappa2", "kappa2 set for concentric discs", 0.0);
  }
  return out;
}

PhaseLagModel validate(const PhaseLagModel& model, const DomainSpec& domain) {
  auto diags = check(model, domain);
  if (!diags.empty()) throw ValidationError(std::move(diags));
  return model;
}

const Slice& DiscreteOperator::slice(const std::string& name) const {
  for (const auto& s : layout)
    if (s.name == name) return s;
  throw std::out_of_range("no state component named '" + name + "'");
}

}  // namespace phaselag
