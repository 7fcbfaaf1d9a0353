#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rbfweno/physics.hpp"

using namespace rbfweno;

TEST_CASE("primitive and conserved round trip") {
  const Eos eos{};
  const Primitive w{1.2, 0.3, -0.7, 2.5};
  const auto U = to_conserved_2d(w, eos);
  const Primitive back = to_primitive(U, eos);
  CHECK(back.rho == doctest::Approx(w.rho));
  CHECK(back.u == doctest::Approx(w.u));
  CHECK(back.v == doctest::Approx(w.v));
  CHECK(back.p == doctest::Approx(w.p));
  const auto U1 = to_conserved_1d({1.0, 0.0, 0.0, 1.0}, eos);
  CHECK(U1[2] == doctest::Approx(2.5));
  CHECK(pressure(U1, eos) == doctest::Approx(1.0));
}

TEST_CASE("nonpositive density is a state error") {
  const std::array<double, 3> U{-1.0, 0.0, 1.0};
  CHECK_THROWS_AS(pressure(U, Eos{}), StateError);
}

TEST_CASE("Euler fluxes") {
  const Eos eos{};
  const auto U = to_conserved_1d({1.0, 2.0, 0.0, 1.0}, eos);
  const auto F = flux_euler_1d(U, eos);
  CHECK(F[0] == doctest::Approx(2.0));
  CHECK(F[1] == doctest::Approx(5.0));
  CHECK(F[2] == doctest::Approx(2.0 * (U[2] + 1.0)));

  const auto U2 = to_conserved_2d({1.0, 0.0, 3.0, 2.0}, eos);
  const auto G = flux_euler_2d_y(U2, eos);
  CHECK(G[0] == doctest::Approx(3.0));
  CHECK(G[1] == doctest::Approx(0.0));
  CHECK(G[2] == doctest::Approx(11.0));
  const auto Fx = flux_euler_2d_x(U2, eos);
  CHECK(Fx[1] == doctest::Approx(2.0));
}

TEST_CASE("scalar fluxes and wave speeds") {
  CHECK(flux_burgers(-3.0) == 4.5);
  const std::array<double, 1> u{-3.0};
  CHECK(local_wavespeed(Equation::burgers, 1, Direction::x, u, Eos{}) == 3.0);
  CHECK(local_wavespeed(Equation::advection, 1, Direction::x, u, Eos{}) == 1.0);
  const auto U = to_conserved_1d({1.4, 2.0, 0.0, 1.0}, Eos{});
  CHECK(local_wavespeed(Equation::euler, 1, Direction::x, U, Eos{}) == doctest::Approx(3.0));
}

TEST_CASE("Lax-Friedrichs splitting") {
  const std::array<double, 2> f{1.0, -2.0}, u{0.5, 4.0};
  const auto s = lf_split(f, u, 2.0);
  CHECK(s.fplus[0] == 1.0);
  CHECK(s.fminus[0] == 0.0);
  CHECK(s.fplus[1] == 3.0);
  CHECK(s.fminus[1] == -5.0);
}

TEST_CASE("Roe basis round trip and projections") {
  const Eos eos{};
  const auto UL = to_conserved_2d({1.0, 0.5, 0.1, 1.0}, eos);
  const auto UR = to_conserved_2d({0.125, -0.2, 0.3, 0.1}, eos);
  for (Direction d : {Direction::x, Direction::y}) {
    const CharBasis b = roe_basis(UL, UR, eos, 2, d);
    const std::array<double, 4> q{0.3, -1.0, 2.0, 0.7};
    std::array<double, 4> w{}, back{};
    char_transform(b, q, w);
    char_inverse(b, w, back);
    for (int v = 0; v < 4; ++v) CHECK(back[static_cast<size_t>(v)] == doctest::Approx(q[static_cast<size_t>(v)]));
  }
  const CharBasis id = identity_basis(3);
  CHECK(id.left(1, 1) == 1.0);
  CHECK(id.right(0, 2) == 0.0);
}
