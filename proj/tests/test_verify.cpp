#include "doctest.h"
#include "gchp/verify.hpp"

using namespace gchp;

TEST_CASE("degree zero subset passes") {
  VerifyOptions o;
  o.max_degree = 0;
  const VerifyReport r = run_verify(o);
  CHECK(r.passed());
  CHECK(r.count(CheckStatus::failed) == 0);
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; }));
}

TEST_CASE("small run records both errata") {
  VerifyOptions o;
  o.max_degree = 3;
  const VerifyReport r = run_verify(o);
  CHECK(r.passed());
  CHECK(r.errata.size() == 2);
  for (const CheckResult& c : r.checks)
    if (c.status == CheckStatus::erratum) CHECK_FALSE(c.erratum.empty());
}

TEST_CASE("float mode run") {
  VerifyOptions o;
  o.max_degree = 4;
  o.mode = Mode::floating;
  const VerifyReport r = run_verify(o);
  for (const CheckResult& c : r.checks) {
    INFO(c.name << " " << c.note);
    CHECK(c.status != CheckStatus::failed);
  }
}

TEST_CASE("corruption is detected") {
  VerifyOptions o;
  o.max_degree = 2;
  o.corrupt = true;
  const VerifyReport r = run_verify(o);
  CHECK_FALSE(r.passed());
}

TEST_CASE("custom parameter set and limits") {
  VerifyOptions o;
  o.max_degree = 2;
  o.params_set = {Params::exact(Rational(9, 4), Rational(1, 2), -3)};
  CHECK(run_verify(o).passed());
  o.max_degree = max_verify_degree + 1;
  CHECK_THROWS_AS(run_verify(o), std::invalid_argument);
}
