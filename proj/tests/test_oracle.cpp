#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "rbfweno/oracle.hpp"

using namespace rbfweno;

TEST_CASE("multiquadric interpolant reproduces its data") {
  const std::array<double, 4> x{0.0, 0.3, 0.7, 1.0}, v{1.0, -2.0, 0.5, 3.0};
  const RbfSystem s = rbf_interp(x, v, 2.0);
  for (size_t q = 0; q < x.size(); ++q) CHECK(s.value(x[q]) == doctest::Approx(v[q]).epsilon(1e-13));
  CHECK(s.condition > 1.0);
  const double h = 1e-6;
  CHECK(s.derivative(0.5) == doctest::Approx((s.value(0.5 + h) - s.value(0.5 - h)) / (2 * h)).epsilon(1e-6));
}

TEST_CASE("oracle input errors") {
  const std::array<double, 2> x{0.5, 0.5}, v{1.0, 2.0};
  CHECK_THROWS_AS(rbf_interp(x, v, 1.0), OracleError);
  CHECK_THROWS_AS(mq_kernel(0.0, 2.0, -1.0), OracleError);
  const std::array<double, 2> st{1.0, 2.0};
  CHECK_THROWS_AS(flux_reconstruct_oracle(st, 2, 0.1, 1.0), OracleError);
  CHECK_THROWS_AS(closed_form_k2_weight(-1.0, 1.0), OracleError);
}

TEST_CASE("polynomial limit of the oracle") {
  // k = 2, r = 0 polynomial row is (1/2, 1/2)
  const std::array<double, 2> st{1.0, 3.0};
  CHECK(flux_reconstruct_oracle(st, 0, 0.0, 0.1) == doctest::Approx(2.0));
  // a nearly flat kernel approaches the polynomial value
  CHECK(flux_reconstruct_oracle(st, 0, 1e-6, 0.1) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(closed_form_k2_weight(0.0, 1.0) == 0.5);
}

TEST_CASE("empirical order") {
  const std::array<double, 3> h{0.1, 0.05, 0.025}, e{1e-2, 2.5e-3, 6.25e-4};
  CHECK(empirical_order(h, e).slope == doctest::Approx(2.0));
  const std::array<int, 3> n{10, 20, 40};
  CHECK(empirical_order(n, [](int k) { return 1.0 / (k * k * k); }).slope == doctest::Approx(3.0));
  const std::array<int, 2> two{10, 20};
  CHECK_THROWS(empirical_order(two, [](int) { return 1.0; }));
  CHECK(empirical_order(h, std::array<double, 3>{1.0, 0.0, 1.0}).saturated);
}

TEST_CASE("full verification suite passes with the built-in tables") {
  const auto results = run_verification();
  CHECK(results.size() >= 20);
  for (const auto& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("a corrupted coefficient is caught") {
  CoeffTables bad = default_coeff_tables();
  bad.rbf_k3[0].base[0] = 6.0 / 11.0;
  const auto results = run_verification({&bad});
  bool limit_failed = false;
  int failures = 0;
  for (const auto& r : results) {
    if (!r.pass) ++failures;
    if (r.name.rfind("polynomial limit: RBF rows", 0) == 0) limit_failed = !r.pass;
  }
  CHECK(limit_failed);
  CHECK(failures >= 3);
}
