#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbfweno/grid.hpp"
#include "rbfweno/physics.hpp"

namespace rbfweno {

enum class ProblemId { advect_smooth, advect_step, burgers_sine, sod, lax, dmr };

struct ProblemSpec {
  ProblemId id;
  std::string_view name;
  Equation equation;
  int dims;
  double x0, x1;
  double y0, y1;  // 2D only
  double t_end;
  bool has_exact;  // smooth exact solution usable for error tables
  double grid_offset;  // Grid1D node offset; 0 for the periodic smooth problems
};

const ProblemSpec& problem_spec(ProblemId id);
/// Accepts advect-smooth, advect-step, burgers-sine, sod, lax, dmr.
ProblemId parse_problem(std::string_view name);

/// The problem's 1D grid with n nodes. The periodic smooth problems use nodes at
/// a + i dx so that the zeros of sin(pi x) fall on nodes rather than on faces; with a face
/// on a stationary zero of the split flux the k = 2 shape parameter has no finite optimum.
Grid1D problem_grid(ProblemId id, int n);

/// Monotone-switch policy: always on for k = 3, whose shape-parameter denominator vanishes
/// at every smooth extremum, and for discontinuous data; off for k = 2 on smooth problems,
/// where it would only degrade smooth extrema to the polynomial limit.
bool default_monotone_switch(ProblemId id, int k);

/// Point samples of the initial data at cell centers; sgn(0) = 0. Throws ConfigError if
/// the grid does not cover the problem domain.
Field1D init_1d(ProblemId id, const Grid1D& grid, const Eos& eos = {});
BoundarySpec1D boundary_1d(ProblemId id, const Eos& eos = {});

inline constexpr double kBurgersShockTime = 0.31830988618379067;  // 1/pi

/// Exact scalar solution at (x, t) for advect-smooth, advect-step and burgers-sine.
/// Burgers is solved from u = -sin(pi (x - u t)) and requires t <= 1/pi.
double exact_solution(ProblemId id, double x, double t);

struct RiemannSolution {
  Primitive left, right;
  double p_star = 0.0;
  double u_star = 0.0;
  double gamma = 1.4;

  /// Self-similar state at xi = x / t.
  Primitive sample(double xi) const;
  /// Signal speeds: left wave head/tail, contact, right wave tail/head. For a shock the
  /// head and tail coincide with the shock speed.
  double left_head() const;
  double left_tail() const;
  double right_tail() const;
  double right_head() const;
  bool left_is_shock() const { return p_star > left.p; }
  bool right_is_shock() const { return p_star > right.p; }
};

/// Exact Riemann solution of the 1D Euler equations. Newton iteration on the pressure
/// function from the two-rarefaction guess, |dp| / p < 1e-12. Throws StateError on
/// nonpositive input or vacuum generation.
RiemannSolution exact_riemann(const Primitive& left, const Primitive& right, const Eos& eos = {});

/// Reference Riemann solution for sod / lax (initial jump at x = 0).
RiemannSolution riemann_reference(ProblemId id, const Eos& eos = {});

/// Double Mach reflection: Mach 10 shock at 60 degrees to the wall, foot at x = 1/6.
struct Dmr {
  static constexpr double kWallStart = 1.0 / 6.0;
  static Primitive post_shock();
  static Primitive pre_shock();
  /// x position of the shock front at height y and time t.
  static double shock_x(double y, double t);
};

struct DmrSetup {
  Field2D field;
  BoundarySpec2D boundary;
};

/// Initial field and boundary closure for the double Mach reflection on [0,4] x [0,1].
/// Throws ConfigError unless nx == 4 ny and the grid spans the problem domain.
DmrSetup dmr_setup(const Grid2D& grid, const Eos& eos = {});

struct Norms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

/// L1 = dx sum|e|, L2 = sqrt(dx sum e^2), Linf = max|e|.
Norms error_norms(std::span<const double> numeric, std::span<const double> exact, double dx);

/// log2(coarse / fine).
double observed_order(double coarse, double fine);

struct ErrorRow {
  int n = 0;
  Norms error;
  std::optional<Norms> order;  // against the previous row when n doubled
};

struct ErrorReport {
  std::string problem;
  std::string scheme;
  int k = 0;
  std::vector<ErrorRow> rows;

  /// Appends a row and fills in orders if the previous resolution is exactly half.
  void add(int n, const Norms& e);
};

}  // namespace rbfweno
