#include <cmath>

#include "doctest.h"
#include "phaselag/model.hpp"

using namespace phaselag;

namespace {

PhaseLagModel valid_model() {
  PhaseLagModel m;
  m.a = {1.0, 0.5};
  m.b = {1.0, 0.25};
  m.kappa1 = 1.0;
  m.beta = 1.0;
  return m;
}

bool has(const std::vector<Diagnostic>& d, const std::string& constraint) {
  for (const auto& x : d)
    if (x.constraint == constraint) return true;
  return false;
}

}  // namespace

TEST_CASE("taylor coefficients: zeroth term") {
  const auto t = taylor_coefficients(0.7, 0.3, 1.0, 0);
  CHECK(t.a == std::vector<double>{1.0});
  CHECK(t.b == std::vector<double>{1.0});
}

TEST_CASE("taylor coefficients: factorials") {
  const auto t = taylor_coefficients(1.0, 2.0, 1.0, 2);
  CHECK(t.a == std::vector<double>{1.0, 1.0, 0.5});
  CHECK(t.b == std::vector<double>{1.0, 2.0, 2.0});
  const auto u = taylor_coefficients(0.5, 0.25, 1.0, 1);
  CHECK(u.a == std::vector<double>{1.0, 0.5});
  CHECK(u.b == std::vector<double>{1.0, 0.25});
}

TEST_CASE("taylor coefficients: prefix property up to n = 8") {
  for (int n = 0; n < 8; ++n) {
    const auto s = taylor_coefficients(0.8, 1.3, 2.5, n);
    const auto l = taylor_coefficients(0.8, 1.3, 2.5, n + 1);
    for (int j = 0; j <= n; ++j) {
      CHECK(s.a[j] == l.a[j]);
      CHECK(s.b[j] == l.b[j]);
    }
  }
}

TEST_CASE("taylor coefficients: degenerate a_n") {
  CHECK_THROWS_WITH_AS(taylor_coefficients(0.0, 1.0, 1.0, 1), doctest::Contains("degenerate a_n"),
                       std::invalid_argument);
  CHECK_NOTHROW(taylor_coefficients(0.0, 1.0, 1.0, 0));
}

TEST_CASE("taylor coefficients with zero tau_theta leave b_n = 0 for validation to reject") {
  const auto t = taylor_coefficients(1.0, 0.0, 1.0, 1);
  PhaseLagModel m = valid_model();
  m.a = t.a;
  m.b = t.b;
  CHECK(has(check(m, Rectangle{}), "b_n > 0"));
}

TEST_CASE("validate: valid model passes unchanged") {
  const auto m = valid_model();
  const auto v = validate(m, Rectangle{1.0, 1.0});
  CHECK(v.a == m.a);
  CHECK(v.b == m.b);
  CHECK(v.beta == m.beta);
  CHECK_FALSE(v.decoupled());
}

TEST_CASE("validate: a_n = 0") {
  auto m = valid_model();
  m.a = {1.0, 0.0};
  try {
    validate(m, Rectangle{});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    REQUIRE(e.diagnostics().size() == 1);
    CHECK(e.diagnostics()[0].constraint == "a_n > 0");
    CHECK(e.diagnostics()[0].field == "a");
    CHECK(e.diagnostics()[0].actual == 0.0);
    CHECK(std::string(e.what()).find("a_n > 0 violated") != std::string::npos);
  }
}

TEST_CASE("validate: R0 = R") {
  auto m = valid_model();
  m.kappa2 = 2.0;
  const auto d = check(m, ConcentricDiscs{1.0, 1.0});
  REQUIRE(d.size() == 1);
  CHECK(d[0].message().find("R0 < R violated") == 0);
}

TEST_CASE("validate reports every violation") {
  PhaseLagModel m;
  m.a = {1.0, -1.0};
  m.b = {1.0, 0.0};
  m.kappa1 = -2.0;
  m.kappa2 = 0.0;
  m.rho = 2.0;
  const auto d = check(m, ConcentricDiscs{-1.0, 1.0});
  CHECK(has(d, "a_n > 0"));
  CHECK(has(d, "b_n > 0"));
  CHECK(has(d, "kappa1 > 0"));
  CHECK(has(d, "kappa2 > 0"));
  CHECK(has(d, "R0 > 0"));
  CHECK(has(d, "rho = 1 (rescale beforehand)"));
  CHECK(d.size() == 6);
}

TEST_CASE("validate: kappa2 required on concentric discs, mismatched lengths rejected") {
  auto m = valid_model();
  CHECK(has(check(m, ConcentricDiscs{0.5, 1.0}), "kappa2 set for concentric discs"));
  m.b = {1.0};
  CHECK(has(check(m, Rectangle{}), "len(b) = len(a)"));
  CHECK(has(check(valid_model(), Rectangle{0.0, 1.0}), "L1 > 0"));
  CHECK(has(check(valid_model(), Interval{-1.0}), "L > 0"));
}

TEST_CASE("validate is idempotent") {
  const auto m = valid_model();
  const auto once = validate(m, Rectangle{});
  const auto twice = validate(once, Rectangle{});
  CHECK(once.a == twice.a);
  CHECK(once.b == twice.b);
  CHECK(once.kappa1 == twice.kappa1);
  auto bad = valid_model();
  bad.a = {1.0, 0.0};
  const auto d1 = check(bad, Rectangle{});
  const auto d2 = check(bad, Rectangle{});
  REQUIRE(d1.size() == d2.size());
  for (std::size_t i = 0; i < d1.size(); ++i) CHECK(d1[i].message() == d2[i].message());
}

TEST_CASE("beta = 0 is accepted and flagged decoupled") {
  auto m = valid_model();
  m.beta = 0.0;
  CHECK(check(m, Rectangle{}).empty());
  CHECK(m.decoupled());
}
