#include "sweep.hpp"

namespace rbfweno::serial {

void rhs_1d(const Field1D& u, const Grid1D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha,
            Field1D& dudt, ReconStats& stats) {
  detail::LineContext ctx{&phys, &cfg, 1, Direction::x, alpha, u.size(), u.ghost(), u.nvar()};
  detail::LineScratch scratch;
  scratch.resize(ctx);
  detail::sweep_line(ctx, u.cell(-u.ghost()).data(), scratch, 1.0 / grid.dx(), &dudt(0, 0), false, stats);
}

void rhs_2d(const Field2D& u, const Grid2D& grid, const Physics& phys, const SchemeConfig& cfg, double alpha_x,
            double alpha_y, Field2D& dudt, ReconStats& stats) {
  const int nx = u.nx(), ny = u.ny(), g = u.ghost(), nv = u.nvar();

  detail::LineContext xc{&phys, &cfg, 2, Direction::x, alpha_x, nx, g, nv};
  detail::LineScratch xs;
  xs.resize(xc);
  for (int j = 0; j < ny; ++j) {
    detail::sweep_line(xc, u.cell(-g, j).data(), xs, 1.0 / grid.dx(), &dudt(0, j, 0), false, stats);
  }

  detail::LineContext yc{&phys, &cfg, 2, Direction::y, alpha_y, ny, g, nv};
  detail::LineScratch ys;
  ys.resize(yc);
  std::vector<double> column(static_cast<size_t>(ny + 2 * g) * nv);
  std::vector<double> tend(static_cast<size_t>(ny) * nv);
  for (int i = 0; i < nx; ++i) {
    for (int j = -g; j < ny + g; ++j) {
      for (int v = 0; v < nv; ++v) column[static_cast<size_t>(j + g) * nv + v] = u(i, j, v);
    }
    detail::sweep_line(yc, column.data(), ys, 1.0 / grid.dy(), tend.data(), false, stats);
    for (int j = 0; j < ny; ++j) {
      for (int v = 0; v < nv; ++v) dudt(i, j, v) += tend[static_cast<size_t>(j) * nv + v];
    }
  }
}

}  // namespace rbfweno::serial
