#pragma once

// Per-line kernel shared by the serial and OpenMP right-hand sides. A line is a
// contiguous run of cells [-g, n + g) with nvar components each, starting at cell -g.

#include <exception>
#include <vector>

#include "rbfweno/solver.hpp"

namespace rbfweno::detail {

struct LineContext {
  const Physics* phys = nullptr;
  const SchemeConfig* cfg = nullptr;
  int dims = 1;
  Direction dir = Direction::x;
  double alpha = 0.0;
  int n = 0;
  int g = 0;
  int nvar = 1;

  bool characteristic() const {
    return phys->equation == Equation::euler && cfg->euler_mode == EulerMode::characteristic;
  }
};

struct LineScratch {
  std::vector<double> fplus, fminus;  // split fluxes per cell, [-g, n+g)
  std::vector<double> fhat;           // interfaces i+1/2 for i = -1 .. n-1

  void resize(const LineContext& ctx);
};

/// Physical flux and Lax-Friedrichs split for cells [begin, end) of the line.
void split_cells(const LineContext& ctx, const double* u, LineScratch& s, int begin, int end);

/// Numerical flux at x_{i+1/2}, i in [-1, n-1], written to s.fhat.
void interface_flux(const LineContext& ctx, const double* u, LineScratch& s, int i, ReconStats& stats);

/// Tendency for cells [begin, end). With accumulate the result is added to out.
void line_tendency(const LineContext& ctx, const LineScratch& s, double inv_dx, double* out, int begin, int end,
                   bool accumulate);

/// Keeps the first exception thrown inside an OpenMP region so it can be rethrown
/// after the region ends; exceptions must not escape a parallel region.
class ExceptionCapture {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(rbfweno_exception_capture)
      if (!first_) first_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::exception_ptr first_;
};

/// Whole line, serially: split, all interfaces, tendency.
void sweep_line(const LineContext& ctx, const double* u, LineScratch& s, double inv_dx, double* out, bool accumulate,
                ReconStats& stats);

}  // namespace rbfweno::detail
