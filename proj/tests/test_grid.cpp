#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rbfweno/grid.hpp"

using namespace rbfweno;

TEST_CASE("node positions come from the index formula") {
  const Grid1D g(-1.0, 1.0, 320);
  CHECK(g.dx() == 2.0 / 320);
  CHECK(g.x(0) == -1.0 + 0.5 * g.dx());
  CHECK(g.x(319) == -1.0 + 319.5 * g.dx());
  CHECK(g.face(0) == -1.0);
  for (int i = -3; i < 323; ++i) CHECK(g.x(i) == -1.0 + (i + 0.5) * g.dx());

  const Grid1D nodes(-1.0, 1.0, 10, 0.0);
  CHECK(nodes.x(0) == -1.0);
  CHECK(nodes.face(0) == doctest::Approx(-1.1));
}

TEST_CASE("grid construction rejects bad input") {
  CHECK_THROWS_AS(Grid1D(1.0, 0.0, 10), ConfigError);
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 0), ConfigError);
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 10, 1.5), ConfigError);
  CHECK_THROWS_AS(Grid2D(0.0, 1.0, 4, 1.0, 1.0, 4), ConfigError);
}

TEST_CASE("periodic ghosts wrap") {
  Field1D f(4, 1, 2);
  for (int i = 0; i < 4; ++i) f(i) = i + 1.0;
  fill_ghosts(f, {BoundaryCondition::periodic(), BoundaryCondition::periodic()}, 0.0);
  CHECK(f(-2) == 3.0);
  CHECK(f(-1) == 4.0);
  CHECK(f(4) == 1.0);
  CHECK(f(5) == 2.0);
}

TEST_CASE("unpaired periodic side is a configuration error") {
  Field1D f(4, 1, 2);
  CHECK_THROWS_AS(fill_ghosts(f, {BoundaryCondition::periodic(), BoundaryCondition::outflow()}, 0.0), ConfigError);
}

TEST_CASE("dirichlet and outflow") {
  Field1D f(4, 1, 3);
  for (int i = 0; i < 4; ++i) f(i) = 10.0 + i;
  fill_ghosts(f, {BoundaryCondition::dirichlet({1.0}), BoundaryCondition::outflow()}, 0.0);
  for (int m = 1; m <= 3; ++m) {
    CHECK(f(-m) == 1.0);
    CHECK(f(3 + m) == 13.0);
  }
  CHECK_THROWS_AS(fill_ghosts(f, {BoundaryCondition::dirichlet({1.0, 2.0}), BoundaryCondition::outflow()}, 0.0),
                  ConfigError);
}

TEST_CASE("reflecting walls flip the normal momentum only") {
  const Grid2D g(0.0, 1.0, 3, 0.0, 1.0, 3);
  Field2D u(3, 3, 4);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < 3; ++i) {
      for (int v = 0; v < 4; ++v) u(i, j, v) = v + 1.0 + 10.0 * j;
    }
  }
  const auto r = BoundaryCondition::reflecting();
  fill_ghosts(u, g, {r, r, r, r}, 0.0);
  CHECK(u(1, -1, 0) == 1.0);
  CHECK(u(1, -1, 1) == 2.0);
  CHECK(u(1, -1, 2) == -3.0);
  CHECK(u(1, -1, 3) == 4.0);
  CHECK(u(1, -2, 2) == -13.0);  // mirror of row 1
  CHECK(u(-1, 1, 1) == -12.0);
  CHECK(u(-1, 1, 2) == 13.0);

  Field2D again = u;
  fill_ghosts(again, g, {r, r, r, r}, 0.0);
  for (size_t q = 0; q < u.values().size(); ++q) CHECK(u.values()[q] == again.values()[q]);
}

TEST_CASE("special boundaries receive the time") {
  const Grid2D g(0.0, 1.0, 4, 0.0, 1.0, 4);
  Field2D u(4, 4, 1);
  double seen = -1.0;
  auto filler = [&](Field2D& f, const Grid2D&, Side, double t) {
    seen = t;
    for (int i = 0; i < f.nx(); ++i) {
      for (int m = 1; m <= f.ghost(); ++m) f(i, f.ny() - 1 + m) = t;
    }
  };
  const auto o = BoundaryCondition::outflow();
  fill_ghosts(u, g, {o, o, o, BoundaryCondition::special(filler)}, 0.25);
  CHECK(seen == 0.25);
  CHECK(u(2, 4) == 0.25);
}
