#include "rbfweno/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace rbfweno {

void SchemeConfig::validate() const {
  if (k != 2 && k != 3) throw ConfigError("k must be 2 or 3, got " + std::to_string(k));
}

void TimeConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("CFL number must lie in (0, 1]");
  if (!(t_end >= 0.0)) throw ConfigError("t_end must be nonnegative");
  if (dt_cap && !(*dt_cap > 0.0)) throw ConfigError("dt_cap must be positive");
}

namespace {

void check_finite(const Field1D& d) {
  for (int i = 0; i < d.size(); ++i) {
    for (int v = 0; v < d.nvar(); ++v) {
      if (!std::isfinite(d(i, v))) {
        throw SolverError("non-finite tendency at cell " + std::to_string(i) + " component " + std::to_string(v), i);
      }
    }
  }
}

void check_finite(const Field2D& d) {
  for (int j = 0; j < d.ny(); ++j) {
    for (int i = 0; i < d.nx(); ++i) {
      for (int v = 0; v < d.nvar(); ++v) {
        if (!std::isfinite(d(i, j, v))) {
          throw SolverError("non-finite tendency at cell (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") component " + std::to_string(v),
                            j * d.nx() + i);
        }
      }
    }
  }
}

double finish_dt(double dt, const TimeConfig& cfg, double t) {
  if (cfg.dt_cap) dt = std::min(dt, *cfg.dt_cap);
  const double remaining = cfg.t_end - t;
  return std::min(dt, remaining);
}

}  // namespace

void rhs_1d(const Field1D& u, const Grid1D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha,
            Field1D& dudt, Exec exec, ReconStats* stats) {
  cfg.validate();
  if (u.ghost() < cfg.k) throw ConfigError("ghost width smaller than stencil reach");
  ReconStats local;
  if (exec == Exec::serial) {
    serial::rhs_1d(u, grid, phys, cfg, alpha, dudt, local);
  } else {
    omp::rhs_1d(u, grid, phys, cfg, alpha, dudt, local);
  }
  if (stats) *stats += local;
  check_finite(dudt);
}

void rhs_2d(const Field2D& u, const Grid2D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha_x,
            double alpha_y, Field2D& dudt, Exec exec, ReconStats* stats) {
  cfg.validate();
  if (u.ghost() < cfg.k) throw ConfigError("ghost width smaller than stencil reach");
  ReconStats local;
  if (exec == Exec::serial) {
    serial::rhs_2d(u, grid, phys, cfg, alpha_x, alpha_y, dudt, local);
  } else {
    omp::rhs_2d(u, grid, phys, cfg, alpha_x, alpha_y, dudt, local);
  }
  if (stats) *stats += local;
  check_finite(dudt);
}

double cfl_dt(double alpha, const Grid1D& grid, const TimeConfig& cfg, double t) {
  if (alpha < 0.0) throw std::invalid_argument("cfl_dt: negative wave speed");
  const double dt = alpha > 0.0 ? cfg.cfl * grid.dx() / alpha : std::numeric_limits<double>::infinity();
  return finish_dt(dt, cfg, t);
}

double cfl_dt(double alpha_x, double alpha_y, const Grid2D& grid, const TimeConfig& cfg, double t) {
  if (alpha_x < 0.0 || alpha_y < 0.0) throw std::invalid_argument("cfl_dt: negative wave speed");
  const double rate = alpha_x / grid.dx() + alpha_y / grid.dy();
  const double dt = rate > 0.0 ? cfg.cfl / rate : std::numeric_limits<double>::infinity();
  return finish_dt(dt, cfg, t);
}

namespace {

template <class Step>
RunStats time_loop(const TimeConfig& time, Step&& step) {
  time.validate();
  RunStats rs;
  rs.dt_min = std::numeric_limits<double>::infinity();
  double t = 0.0;
  while (t < time.t_end) {
    const double dt = step(t);
    if (!(dt > 0.0)) break;
    const bool last = t + dt >= time.t_end;
    t = last ? time.t_end : t + dt;
    ++rs.steps;
    rs.dt_min = std::min(rs.dt_min, dt);
    rs.dt_max = std::max(rs.dt_max, dt);
  }
  if (rs.steps == 0) rs.dt_min = 0.0;
  rs.t_final = t;
  return rs;
}

}  // namespace

RunStats advance(Field1D& u, const Grid1D& grid, const Physics& phys, const BoundarySpec1D& bc,
                 const SchemeConfig& scheme, const TimeConfig& time, Exec exec) {
  scheme.validate();
  ReconStats recon;
  RunStats rs = time_loop(time, [&](double t) {
    fill_ghosts(u, bc, t);
    const double alpha = max_wavespeed(u, phys.equation, phys.eos);
    const double dt = cfl_dt(alpha, grid, time, t);
    if (!(dt > 0.0)) return dt;
    rk3_step(u, dt, [&](Field1D& stage, Field1D& L, double frac) {
      fill_ghosts(stage, bc, t + frac * dt);
      rhs_1d(stage, grid, phys, scheme, alpha, L, exec, &recon);
    });
    return dt;
  });
  fill_ghosts(u, bc, rs.t_final);
  rs.recon = recon;
  return rs;
}

RunStats advance(Field2D& u, const Grid2D& grid, const Physics& phys, const BoundarySpec2D& bc,
                 const SchemeConfig& scheme, const TimeConfig& time, Exec exec) {
  scheme.validate();
  ReconStats recon;
  RunStats rs = time_loop(time, [&](double t) {
    fill_ghosts(u, grid, bc, t);
    const double ax = max_wavespeed(u, phys.equation, phys.eos, Direction::x);
    const double ay = max_wavespeed(u, phys.equation, phys.eos, Direction::y);
    const double dt = cfl_dt(ax, ay, grid, time, t);
    if (!(dt > 0.0)) return dt;
    rk3_step(u, dt, [&](Field2D& stage, Field2D& L, double frac) {
      fill_ghosts(stage, grid, bc, t + frac * dt);
      rhs_2d(stage, grid, phys, scheme, ax, ay, L, exec, &recon);
    });
    return dt;
  });
  fill_ghosts(u, grid, bc, rs.t_final);
  rs.recon = recon;
  return rs;
}

}  // namespace rbfweno
