#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "rbfweno/problems.hpp"
#include "rbfweno/solver.hpp"

using namespace rbfweno;

TEST_CASE("RK3 on a linear ODE") {
  Field1D u(1, 1, 0);
  u(0) = 1.0;
  const double z = -0.6;
  rk3_step(u, 1.0, [&](Field1D& s, Field1D& L, double) { L(0) = z * s(0); });
  CHECK(u(0) == doctest::Approx(1.0 + z + z * z / 2 + z * z * z / 6).epsilon(1e-15));
  CHECK_THROWS_AS(rk3_step(u, 0.0, [](Field1D&, Field1D&, double) {}), std::invalid_argument);
}

TEST_CASE("CFL step and final-time truncation") {
  const Grid1D g(0.0, 1.0, 100);
  const TimeConfig cfg{0.5, 1.0, std::nullopt};
  CHECK(cfl_dt(2.0, g, cfg, 0.0) == doctest::Approx(0.0025));
  CHECK(cfl_dt(2.0, g, cfg, 0.999) == doctest::Approx(0.001));
  const TimeConfig capped{0.5, 1.0, 1e-4};
  CHECK(cfl_dt(0.0, g, capped, 0.0) == 1e-4);
  CHECK_THROWS_AS((TimeConfig{1.5, 1.0, std::nullopt}.validate()), ConfigError);
  CHECK_THROWS_AS((SchemeConfig{4, Scheme::eno, EulerMode::characteristic, true}.validate()), ConfigError);
}

TEST_CASE("advance lands exactly on t_end") {
  const Grid1D g = problem_grid(ProblemId::advect_smooth, 40);
  Field1D u = init_1d(ProblemId::advect_smooth, g);
  const auto st = advance(u, g, {Equation::advection, {}}, boundary_1d(ProblemId::advect_smooth),
                          {3, Scheme::weno_js, EulerMode::characteristic, true}, {0.1, 0.3, std::nullopt});
  CHECK(st.t_final == 0.3);
  CHECK(st.steps == static_cast<int>(std::ceil(0.3 / (0.1 * g.dx()) - 1e-9)));
  double err = 0.0;
  for (int i = 0; i < g.n; ++i) err = std::max(err, std::abs(u(i) - std::sin(std::numbers::pi * (g.x(i) - 0.3))));
  CHECK(err < 1e-3);
}

TEST_CASE("serial and parallel tendencies are identical") {
  for (Scheme s : {Scheme::eno, Scheme::rbf_eno, Scheme::weno_js, Scheme::rbf_weno_js}) {
    for (EulerMode mode : {EulerMode::characteristic, EulerMode::componentwise}) {
      const Grid1D g = problem_grid(ProblemId::lax, 64);
      const Field1D u = init_1d(ProblemId::lax, g);
      const Physics ph{Equation::euler, {}};
      const SchemeConfig cfg{2, s, mode, true};
      Field1D a(g.n, 3), b(g.n, 3);
      const double alpha = max_wavespeed(u, ph.equation, ph.eos);
      rhs_1d(u, g, ph, cfg, alpha, a, Exec::serial);
      rhs_1d(u, g, ph, cfg, alpha, b, Exec::parallel);
      for (size_t q = 0; q < a.values().size(); ++q) CHECK(a.values()[q] == b.values()[q]);
    }
  }
}

TEST_CASE("non-finite tendency aborts") {
  const Grid1D g = problem_grid(ProblemId::advect_smooth, 16);
  Field1D u = init_1d(ProblemId::advect_smooth, g);
  u(5) = std::numeric_limits<double>::quiet_NaN();
  fill_ghosts(u, boundary_1d(ProblemId::advect_smooth), 0.0);
  Field1D L(g.n, 1);
  CHECK_THROWS_AS(rhs_1d(u, g, {Equation::advection, {}}, {2, Scheme::weno_js, EulerMode::characteristic, true}, 1.0,
                         L, Exec::serial),
                  SolverError);
}

TEST_CASE("uniform flow is a steady state") {
  const Grid1D g(0.0, 1.0, 32);
  Field1D u(g.n, 3);
  const auto U = to_conserved_1d({1.0, 0.5, 0.0, 1.0}, Eos{});
  for (int i = 0; i < g.n; ++i) {
    for (int v = 0; v < 3; ++v) u(i, v) = U[static_cast<size_t>(v)];
  }
  fill_ghosts(u, {BoundaryCondition::periodic(), BoundaryCondition::periodic()}, 0.0);
  Field1D L(g.n, 3);
  rhs_1d(u, g, {Equation::euler, {}}, {3, Scheme::rbf_weno_js, EulerMode::characteristic, true}, 2.0, L);
  for (int i = 0; i < g.n; ++i) {
    for (int v = 0; v < 3; ++v) CHECK(std::abs(L(i, v)) < 1e-12);
  }
}
