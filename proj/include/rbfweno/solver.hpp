#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rbfweno/grid.hpp"
#include "rbfweno/physics.hpp"
#include "rbfweno/reconstruction.hpp"

namespace rbfweno {

enum class EulerMode { characteristic, componentwise };

struct SchemeConfig {
  int k = 3;
  Scheme scheme = Scheme::weno_js;
  EulerMode euler_mode = EulerMode::characteristic;
  /// Polynomial limit at local extrema of the flux (RBF schemes only).
  bool monotone_switch = true;

  void validate() const;
};

struct TimeConfig {
  double cfl = 0.1;
  double t_end = 0.0;
  std::optional<double> dt_cap;

  void validate() const;
};

struct Physics {
  Equation equation = Equation::advection;
  Eos eos{};
};

/// Serial loops are the reference; parallel runs the same per-line kernel under OpenMP
/// and must reproduce the serial result bit for bit.
enum class Exec { serial, parallel };

class SolverError : public std::runtime_error {
 public:
  SolverError(const std::string& what, int cell) : std::runtime_error(what), cell_(cell) {}
  int cell() const { return cell_; }

 private:
  int cell_;
};

/// du_i/dt = -(fhat_{i+1/2} - fhat_{i-1/2}) / dx with fhat = plus(f+) + minus(f-) and the
/// global Lax-Friedrichs splitting at speed `alpha`. Ghosts of `u` must be filled.
/// Throws SolverError on a non-finite tendency.
void rhs_1d(const Field1D& u, const Grid1D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha,
            Field1D& dudt, Exec exec = Exec::parallel, ReconStats* stats = nullptr);

/// Dimension-by-dimension: x sweeps along rows plus y sweeps along columns.
void rhs_2d(const Field2D& u, const Grid2D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha_x,
            double alpha_y, Field2D& dudt, Exec exec = Exec::parallel, ReconStats* stats = nullptr);

/// Serial reference implementations; rhs_1d/rhs_2d dispatch here for Exec::serial.
namespace serial {
void rhs_1d(const Field1D& u, const Grid1D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha,
            Field1D& dudt, ReconStats& stats);
void rhs_2d(const Field2D& u, const Grid2D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha_x,
            double alpha_y, Field2D& dudt, ReconStats& stats);
}  // namespace serial

namespace omp {
void rhs_1d(const Field1D& u, const Grid1D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha,
            Field1D& dudt, ReconStats& stats);
void rhs_2d(const Field2D& u, const Grid2D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha_x,
            double alpha_y, Field2D& dudt, ReconStats& stats);
}  // namespace omp

/// Shu-Osher TVD RK3 as convex combinations of forward Euler stages.
struct Rk3Tableau {
  static constexpr std::array<double, 2> stage2{3.0 / 4.0, 1.0 / 4.0};
  static constexpr std::array<double, 2> stage3{1.0 / 3.0, 2.0 / 3.0};
  static constexpr std::array<double, 3> stage_time{0.0, 1.0, 0.5};
};

/// One RK3 step. `rhs(stage, L, time_fraction)` must refill the ghosts of `stage` for
/// time t + time_fraction * dt and write the tendency into L. FieldT needs copy
/// construction and values().
template <class FieldT, class Rhs>
void rk3_step(FieldT& u, double dt, Rhs&& rhs) {
  if (!(dt > 0.0)) throw std::invalid_argument("rk3_step: dt must be positive");
  const FieldT u0 = u;
  FieldT L = u;
  auto un = u0.values();
  auto us = u.values();
  auto lv = L.values();
  const size_t n = us.size();

  rhs(u, L, Rk3Tableau::stage_time[0]);
  for (size_t q = 0; q < n; ++q) us[q] = un[q] + dt * lv[q];

  rhs(u, L, Rk3Tableau::stage_time[1]);
  for (size_t q = 0; q < n; ++q) {
    us[q] = Rk3Tableau::stage2[0] * un[q] + Rk3Tableau::stage2[1] * (us[q] + dt * lv[q]);
  }

  rhs(u, L, Rk3Tableau::stage_time[2]);
  for (size_t q = 0; q < n; ++q) {
    us[q] = Rk3Tableau::stage3[0] * un[q] + Rk3Tableau::stage3[1] * (us[q] + dt * lv[q]);
  }
}

/// dt = C dx / alpha, truncated so t + dt does not pass t_end. With alpha == 0 the step
/// falls back to dt_cap, or to the remaining time.
double cfl_dt(double alpha, const Grid1D& grid, const TimeConfig& cfg, double t);
/// dt = C / (alpha_x / dx + alpha_y / dy), same truncation rules.
double cfl_dt(double alpha_x, double alpha_y, const Grid2D& grid, const TimeConfig& cfg, double t);

struct RunStats {
  int steps = 0;
  double t_final = 0.0;
  double dt_min = 0.0;
  double dt_max = 0.0;
  ReconStats recon{};
};

/// Advances `u` from t = 0 to cfg.t_end. The Lax-Friedrichs speed is recomputed once per
/// step and frozen across the three stages.
RunStats advance(Field1D& u, const Grid1D& grid, const Physics& phys, const BoundarySpec1D& bc,
                 const SchemeConfig& scheme, const TimeConfig& time, Exec exec = Exec::parallel);
RunStats advance(Field2D& u, const Grid2D& grid, const Physics& phys, const BoundarySpec2D& bc,
                 const SchemeConfig& scheme, const TimeConfig& time, Exec exec = Exec::parallel);

}  // namespace rbfweno
