#include "rbfweno/problems.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rbfweno {

namespace {

constexpr std::array<ProblemSpec, 6> kProblems{{
    {ProblemId::advect_smooth, "advect-smooth", Equation::advection, 1, -1.0, 1.0, 0.0, 0.0, 0.5, true, 0.0},
    {ProblemId::advect_step, "advect-step", Equation::advection, 1, -1.0, 1.0, 0.0, 0.0, 0.5, false, 0.5},
    {ProblemId::burgers_sine, "burgers-sine", Equation::burgers, 1, -1.0, 1.0, 0.0, 0.0, 0.2, true, 0.0},
    {ProblemId::sod, "sod", Equation::euler, 1, -0.5, 0.5, 0.0, 0.0, 0.2, false, 0.5},
    {ProblemId::lax, "lax", Equation::euler, 1, -0.5, 0.5, 0.0, 0.0, 0.13, false, 0.5},
    {ProblemId::dmr, "dmr", Equation::euler, 2, 0.0, 4.0, 0.0, 1.0, 0.2, false, 0.5},
}};

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)); }

double sgn(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

Primitive sod_state(bool left) { return left ? Primitive{1.0, 0.0, 0.0, 1.0} : Primitive{0.125, 0.0, 0.0, 0.1}; }
Primitive lax_state(bool left) {
  return left ? Primitive{0.445, 0.698, 0.0, 3.528} : Primitive{0.5, 0.0, 0.0, 0.571};
}

double burgers_exact(double x, double t) {
  if (t > kBurgersShockTime * (1.0 + 1e-15)) {
    throw std::domain_error("burgers-sine exact solution is only available before the shock time 1/pi");
  }
  const double pi = std::numbers::pi;
  auto g = [&](double u) { return u + std::sin(pi * (x - u * t)); };
  auto dg = [&](double u) { return 1.0 - pi * t * std::cos(pi * (x - u * t)); };

  // g is nondecreasing on [-1, 1] with g(-1) <= 0 <= g(1): bracketed Newton.
  double lo = -1.0, hi = 1.0;
  double u = -std::sin(pi * x);
  for (int it = 0; it < 200; ++it) {
    const double r = g(u);
    if (std::abs(r) < 1e-15) break;
    if (r < 0.0) {
      lo = u;
    } else {
      hi = u;
    }
    const double d = dg(u);
    double next = d > 0.0 ? u - r / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == u) break;
    u = next;
  }
  return u;
}

}  // namespace

const ProblemSpec& problem_spec(ProblemId id) {
  for (const auto& p : kProblems) {
    if (p.id == id) return p;
  }
  throw std::invalid_argument("unknown problem id");
}

ProblemId parse_problem(std::string_view name) {
  for (const auto& p : kProblems) {
    if (p.name == name) return p.id;
  }
  throw ConfigError("unknown problem '" + std::string(name) + "'");
}

Grid1D problem_grid(ProblemId id, int n) {
  const ProblemSpec& spec = problem_spec(id);
  if (spec.dims != 1) throw ConfigError(std::string(spec.name) + " is not a 1D problem");
  return Grid1D(spec.x0, spec.x1, n, spec.grid_offset);
}

bool default_monotone_switch(ProblemId id, int k) { return k == 3 || !problem_spec(id).has_exact; }

Field1D init_1d(ProblemId id, const Grid1D& grid, const Eos& eos) {
  const ProblemSpec& spec = problem_spec(id);
  if (spec.dims != 1) throw ConfigError(std::string(spec.name) + " is not a 1D problem");
  if (!near(grid.a, spec.x0) || !near(grid.b, spec.x1)) {
    throw ConfigError(std::string(spec.name) + ": grid does not match the problem domain");
  }
  const int nv = num_vars(spec.equation, 1);
  Field1D f(grid.n, nv);
  const double pi = std::numbers::pi;
  for (int i = 0; i < grid.n; ++i) {
    const double x = grid.x(i);
    switch (id) {
      case ProblemId::advect_smooth: f(i) = std::sin(pi * x); break;
      case ProblemId::advect_step: f(i) = -sgn(x); break;
      case ProblemId::burgers_sine: f(i) = -std::sin(pi * x); break;
      case ProblemId::sod:
      case ProblemId::lax: {
        const Primitive w = id == ProblemId::sod ? sod_state(x <= 0.0) : lax_state(x <= 0.0);
        const auto U = to_conserved_1d(w, eos);
        for (int v = 0; v < 3; ++v) f(i, v) = U[static_cast<size_t>(v)];
        break;
      }
      case ProblemId::dmr: break;
    }
  }
  fill_ghosts(f, boundary_1d(id, eos), 0.0);
  return f;
}

BoundarySpec1D boundary_1d(ProblemId id, const Eos& /*eos*/) {
  switch (id) {
    case ProblemId::advect_smooth:
    case ProblemId::burgers_sine: return {BoundaryCondition::periodic(), BoundaryCondition::periodic()};
    case ProblemId::advect_step: return {BoundaryCondition::dirichlet({1.0}), BoundaryCondition::outflow()};
    case ProblemId::sod:
    case ProblemId::lax: return {BoundaryCondition::outflow(), BoundaryCondition::outflow()};
    case ProblemId::dmr: break;
  }
  throw ConfigError("no 1D boundary for this problem");
}

double exact_solution(ProblemId id, double x, double t) {
  const double pi = std::numbers::pi;
  switch (id) {
    case ProblemId::advect_smooth: return std::sin(pi * (x - t));
    case ProblemId::advect_step: return -sgn(x - t);
    case ProblemId::burgers_sine: return burgers_exact(x, t);
    default: break;
  }
  throw std::invalid_argument("no scalar exact solution for this problem");
}

RiemannSolution riemann_reference(ProblemId id, const Eos& eos) {
  if (id == ProblemId::sod) return exact_riemann(sod_state(true), sod_state(false), eos);
  if (id == ProblemId::lax) return exact_riemann(lax_state(true), lax_state(false), eos);
  throw std::invalid_argument("riemann_reference: not a shock tube problem");
}

Primitive Dmr::post_shock() {
  const double s = 8.25;
  return {8.0, s * std::sin(std::numbers::pi / 3.0), -s * std::cos(std::numbers::pi / 3.0), 116.5};
}

Primitive Dmr::pre_shock() { return {1.4, 0.0, 0.0, 1.0}; }

double Dmr::shock_x(double y, double t) { return kWallStart + (y + 20.0 * t) / std::sqrt(3.0); }

DmrSetup dmr_setup(const Grid2D& grid, const Eos& eos) {
  const ProblemSpec& spec = problem_spec(ProblemId::dmr);
  if (!near(grid.x0, spec.x0) || !near(grid.x1, spec.x1) || !near(grid.y0, spec.y0) || !near(grid.y1, spec.y1)) {
    throw ConfigError("dmr: grid does not match [0,4] x [0,1]");
  }
  if (grid.nx != 4 * grid.ny) throw ConfigError("dmr: grid must have nx == 4 ny");

  const auto post = to_conserved_2d(Dmr::post_shock(), eos);
  const auto pre = to_conserved_2d(Dmr::pre_shock(), eos);

  DmrSetup setup{Field2D(grid.nx, grid.ny, 4), {}};
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const auto& U = grid.x(i) < Dmr::shock_x(grid.y(j), 0.0) ? post : pre;
      for (int v = 0; v < 4; ++v) setup.field(i, j, v) = U[static_cast<size_t>(v)];
    }
  }

  const std::vector<double> post_v(post.begin(), post.end());
  auto bottom = [post](Field2D& f, const Grid2D& g, Side, double) {
    for (int i = 0; i < f.nx(); ++i) {
      const bool inflow = g.x(i) < Dmr::kWallStart;
      for (int m = 1; m <= f.ghost(); ++m) {
        for (int v = 0; v < 4; ++v) {
          if (inflow) {
            f(i, -m, v) = post[static_cast<size_t>(v)];
          } else {
            const double mirror = f(i, m - 1, v);
            f(i, -m, v) = v == 2 ? -mirror : mirror;
          }
        }
      }
    }
  };
  auto top = [post, pre](Field2D& f, const Grid2D& g, Side, double t) {
    for (int i = 0; i < f.nx(); ++i) {
      for (int m = 1; m <= f.ghost(); ++m) {
        const int j = f.ny() - 1 + m;
        const auto& U = g.x(i) < Dmr::shock_x(g.y(j), t) ? post : pre;
        for (int v = 0; v < 4; ++v) f(i, j, v) = U[static_cast<size_t>(v)];
      }
    }
  };
  setup.boundary.left = BoundaryCondition::dirichlet(post_v);
  setup.boundary.right = BoundaryCondition::outflow();
  setup.boundary.bottom = BoundaryCondition::special(bottom);
  setup.boundary.top = BoundaryCondition::special(top);
  fill_ghosts(setup.field, grid, setup.boundary, 0.0);
  return setup;
}

Norms error_norms(std::span<const double> numeric, std::span<const double> exact, double dx) {
  if (numeric.size() != exact.size()) throw std::invalid_argument("error_norms: size mismatch");
  Norms n;
  double s1 = 0.0, s2 = 0.0;
  for (size_t i = 0; i < numeric.size(); ++i) {
    const double e = std::abs(numeric[i] - exact[i]);
    s1 += e;
    s2 += e * e;
    n.linf = std::max(n.linf, e);
  }
  n.l1 = dx * s1;
  n.l2 = std::sqrt(dx * s2);
  return n;
}

double observed_order(double coarse, double fine) { return std::log2(coarse / fine); }

void ErrorReport::add(int n, const Norms& e) {
  ErrorRow row{n, e, std::nullopt};
  if (!rows.empty() && rows.back().n * 2 == n) {
    const Norms& c = rows.back().error;
    row.order = Norms{observed_order(c.l1, e.l1), observed_order(c.l2, e.l2), observed_order(c.linf, e.linf)};
  }
  rows.push_back(row);
}

}  // namespace rbfweno
