#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rbfweno/problems.hpp"

using namespace rbfweno;

TEST_CASE("problem registry") {
  CHECK(parse_problem("burgers-sine") == ProblemId::burgers_sine);
  CHECK_THROWS_AS(parse_problem("shu-osher"), ConfigError);
  CHECK(problem_spec(ProblemId::lax).t_end == 0.13);
  CHECK(problem_spec(ProblemId::dmr).dims == 2);
  CHECK_THROWS_AS(problem_grid(ProblemId::dmr, 40), ConfigError);
  CHECK(problem_grid(ProblemId::advect_smooth, 10).x(0) == -1.0);
  CHECK(problem_grid(ProblemId::sod, 10).x(0) == doctest::Approx(-0.45));
}

TEST_CASE("monotone switch defaults") {
  CHECK_FALSE(default_monotone_switch(ProblemId::advect_smooth, 2));
  CHECK(default_monotone_switch(ProblemId::advect_smooth, 3));
  CHECK(default_monotone_switch(ProblemId::sod, 2));
}

TEST_CASE("Burgers exact solution satisfies the implicit relation") {
  const double t = 0.2;
  for (double x = -1.0; x < 1.0; x += 0.0137) {
    const double u = exact_solution(ProblemId::burgers_sine, x, t);
    CHECK(u == doctest::Approx(-std::sin(std::numbers::pi * (x - u * t))).epsilon(1e-13));
  }
  CHECK_THROWS_AS(exact_solution(ProblemId::burgers_sine, 0.0, 0.5), std::domain_error);
}

TEST_CASE("Sod and Lax star states") {
  const auto sod = riemann_reference(ProblemId::sod);
  CHECK(sod.p_star == doctest::Approx(0.30313).epsilon(1e-5));
  CHECK(sod.u_star == doctest::Approx(0.92745).epsilon(1e-5));
  const auto lax = riemann_reference(ProblemId::lax);
  CHECK(lax.p_star == doctest::Approx(2.4660).epsilon(1e-3));
  CHECK(lax.u_star == doctest::Approx(1.5289).epsilon(1e-3));
  // sampling far away returns the initial states
  CHECK(sod.sample(-10.0).rho == 1.0);
  CHECK(sod.sample(10.0).rho == 0.125);
  // contact
  CHECK(sod.sample(sod.u_star - 1e-9).rho == doctest::Approx(0.42632).epsilon(1e-4));
  CHECK(sod.sample(sod.u_star + 1e-9).rho == doctest::Approx(0.26557).epsilon(1e-4));
}

TEST_CASE("vacuum-generating data are rejected") {
  CHECK_THROWS_AS(exact_riemann({1.0, -20.0, 0.0, 1.0}, {1.0, 20.0, 0.0, 1.0}), StateError);
}

TEST_CASE("double Mach setup") {
  const Grid2D g(0.0, 4.0, 40, 0.0, 1.0, 10);
  const DmrSetup s = dmr_setup(g);
  CHECK(s.field(0, 0, 0) == 8.0);
  CHECK(s.field(39, 9, 0) == 1.4);
  CHECK_THROWS_AS(dmr_setup(Grid2D(0.0, 4.0, 40, 0.0, 1.0, 20)), ConfigError);
  // reflecting part of the bottom wall flips v
  const int i = 30;
  CHECK(s.field(i, -1, 2) == -s.field(i, 0, 2));
}

TEST_CASE("error norms and observed orders") {
  const std::vector<double> a{1.0, 2.0, 3.0, 4.0}, b{1.0, 2.5, 3.0, 3.0};
  const Norms n = error_norms(a, b, 0.5);
  CHECK(n.l1 == doctest::Approx(0.75));
  CHECK(n.l2 == doctest::Approx(std::sqrt(0.5 * 1.25)));
  CHECK(n.linf == 1.0);
  CHECK(observed_order(8.0, 1.0) == 3.0);

  ErrorReport r;
  r.add(10, {1.0, 1.0, 1.0});
  r.add(20, {0.25, 0.5, 0.125});
  r.add(50, {0.1, 0.1, 0.1});
  CHECK_FALSE(r.rows[0].order.has_value());
  REQUIRE(r.rows[1].order.has_value());
  CHECK(r.rows[1].order->l1 == 2.0);
  CHECK(r.rows[1].order->linf == 3.0);
  CHECK_FALSE(r.rows[2].order.has_value());
}

TEST_CASE("initial data") {
  const Grid1D g = problem_grid(ProblemId::sod, 10);
  const Field1D u = init_1d(ProblemId::sod, g);
  CHECK(u(0, 0) == 1.0);
  CHECK(u(9, 0) == 0.125);
  CHECK_THROWS_AS(init_1d(ProblemId::sod, Grid1D(0.0, 1.0, 10)), ConfigError);
}
