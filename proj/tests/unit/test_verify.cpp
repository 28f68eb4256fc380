#include <doctest.h>

#include "extremal/errors.hpp"
#include "extremal/verify.hpp"

using namespace extremal;

TEST_CASE("every suite passes at seed 0") {
  for (const SuiteInfo& info : suite_names()) {
    CAPTURE(info.name);
    const SuiteReport r = run_suite(info.name, SuiteOptions{});
    CHECK(r.suite == info.name);
    CHECK(r.violations == 0);
    CHECK_FALSE(r.inconclusive);
    CHECK(r.passed);
    CHECK(r.checks > 0);
  }
}

TEST_CASE("conjecture suite reports the k = 3 counterexamples") {
  SuiteOptions o;
  o.k = 3;
  o.s = 2;
  o.n_max = 11;
  const SuiteReport r = run_suite("conjecture", o);
  CHECK_FALSE(r.passed);
  CHECK(r.violations == 4);
}

TEST_CASE("boundary line is reported verbatim") {
  const SuiteReport r = run_suite("oracle", SuiteOptions{});
  bool found = false;
  for (const auto& line : r.lines)
    found = found || line.find("m*(6,4,2,2) = 9 > size_A(6,4,2,2) = 8; m(6,4,2,2) = 10 = conjecture_rhs(6,4,2,2) = 10") !=
                         std::string::npos;
  CHECK(found);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), ArgumentError); }
