#include <omp.h>

#include "sweep.hpp"

namespace rbfweno::omp {

void rhs_1d(const Field1D& u, const Grid1D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha,
            Field1D& dudt, ReconStats& stats) {
  const int n = u.size(), g = u.ghost();
  detail::LineContext ctx{&phys, &cfg, 1, Direction::x, alpha, n, g, u.nvar()};
  detail::LineScratch scratch;
  scratch.resize(ctx);
  const double* line = u.cell(-g).data();
  double* out = &dudt(0, 0);
  detail::ExceptionCapture errors;

#pragma omp parallel
  {
    ReconStats local;
#pragma omp for schedule(static)
    for (int c = -g; c < n + g; ++c) errors.run([&] { detail::split_cells(ctx, line, scratch, c, c + 1); });
#pragma omp for schedule(static)
    for (int i = -1; i < n; ++i) errors.run([&] { detail::interface_flux(ctx, line, scratch, i, local); });
#pragma omp for schedule(static)
    for (int c = 0; c < n; ++c) detail::line_tendency(ctx, scratch, 1.0 / grid.dx(), out, c, c + 1, false);
#pragma omp critical
    stats += local;
  }
  errors.rethrow();
}

void rhs_2d(const Field2D& u, const Grid2D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha_x,
            double alpha_y, Field2D& dudt, ReconStats& stats) {
  const int nx = u.nx(), ny = u.ny(), g = u.ghost(), nv = u.nvar();
  const detail::LineContext xc{&phys, &cfg, 2, Direction::x, alpha_x, nx, g, nv};
  const detail::LineContext yc{&phys, &cfg, 2, Direction::y, alpha_y, ny, g, nv};
  detail::ExceptionCapture errors;

#pragma omp parallel
  {
    ReconStats local;
    detail::LineScratch xs;
    xs.resize(xc);
#pragma omp for schedule(static)
    for (int j = 0; j < ny; ++j) {
      errors.run([&] { detail::sweep_line(xc, u.cell(-g, j).data(), xs, 1.0 / grid.dx(), &dudt(0, j, 0), false, local); });
    }

    detail::LineScratch ys;
    ys.resize(yc);
    std::vector<double> column(static_cast<size_t>(ny + 2 * g) * nv);
    std::vector<double> tend(static_cast<size_t>(ny) * nv);
#pragma omp for schedule(static)
    for (int i = 0; i < nx; ++i) {
      for (int j = -g; j < ny + g; ++j) {
        for (int v = 0; v < nv; ++v) column[static_cast<size_t>(j + g) * nv + v] = u(i, j, v);
      }
      errors.run([&] { detail::sweep_line(yc, column.data(), ys, 1.0 / grid.dy(), tend.data(), false, local); });
      for (int j = 0; j < ny; ++j) {
        for (int v = 0; v < nv; ++v) dudt(i, j, v) += tend[static_cast<size_t>(j) * nv + v];
      }
    }
#pragma omp critical
    stats += local;
  }
  errors.rethrow();
}

}  // namespace rbfweno::omp
