#include "rbfweno/grid.hpp"

#include <string>

namespace rbfweno {

Grid1D::Grid1D(double a_, double b_, int n_, double offset_) : a(a_), b(b_), n(n_), offset(offset_) {
  if (n <= 0 || !(b > a)) throw ConfigError("Grid1D: need n > 0 and b > a");
  if (!(offset >= 0.0 && offset <= 1.0)) throw ConfigError("Grid1D: offset must lie in [0, 1]");
}

Grid2D::Grid2D(double x0_, double x1_, int nx_, double y0_, double y1_, int ny_)
    : x0(x0_), x1(x1_), y0(y0_), y1(y1_), nx(nx_), ny(ny_) {
  if (nx <= 0 || ny <= 0 || !(x1 > x0) || !(y1 > y0)) throw ConfigError("Grid2D: degenerate grid");
}

Field1D::Field1D(int n, int nvar, int ghost)
    : n_(n), nvar_(nvar), g_(ghost), data_(static_cast<size_t>((n + 2 * ghost) * nvar), 0.0) {
  if (n <= 0 || nvar <= 0 || ghost < 0) throw ConfigError("Field1D: bad dimensions");
}

std::vector<double> Field1D::interior(int v) const {
  std::vector<double> out(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) out[static_cast<size_t>(i)] = (*this)(i, v);
  return out;
}

Field2D::Field2D(int nx, int ny, int nvar, int ghost)
    : nx_(nx), ny_(ny), nvar_(nvar), g_(ghost),
      data_(static_cast<size_t>(nx + 2 * ghost) * static_cast<size_t>(ny + 2 * ghost) * static_cast<size_t>(nvar),
            0.0) {
  if (nx <= 0 || ny <= 0 || nvar <= 0 || ghost < 0) throw ConfigError("Field2D: bad dimensions");
}

namespace {

void check_condition(const BoundaryCondition& bc, int nvar, const char* side) {
  if (bc.kind == BoundaryKind::dirichlet && static_cast<int>(bc.state.size()) != nvar) {
    throw ConfigError(std::string("dirichlet state size mismatch on ") + side);
  }
  if (bc.kind == BoundaryKind::special && !bc.filler) {
    throw ConfigError(std::string("special boundary without a filler on ") + side);
  }
}

void check_pair(const BoundaryCondition& lo, const BoundaryCondition& hi, const char* axis) {
  bool lp = lo.kind == BoundaryKind::periodic;
  bool hp = hi.kind == BoundaryKind::periodic;
  if (lp != hp) throw ConfigError(std::string("periodic boundary must be set on both sides of ") + axis);
}

}  // namespace

void BoundarySpec1D::validate(int nvar) const {
  check_pair(left, right, "x");
  check_condition(left, nvar, "left");
  check_condition(right, nvar, "right");
  if (left.kind == BoundaryKind::special || right.kind == BoundaryKind::special) {
    throw ConfigError("special boundaries are 2D only");
  }
}

void BoundarySpec2D::validate(int nvar) const {
  check_pair(left, right, "x");
  check_pair(bottom, top, "y");
  check_condition(left, nvar, "left");
  check_condition(right, nvar, "right");
  check_condition(bottom, nvar, "bottom");
  check_condition(top, nvar, "top");
}

void fill_ghosts(Field1D& f, const BoundarySpec1D& spec, double /*t*/) {
  const int n = f.size(), g = f.ghost(), nv = f.nvar();
  spec.validate(nv);
  if (g > n && spec.left.kind == BoundaryKind::periodic) throw ConfigError("periodic wrap wider than grid");

  for (int m = 1; m <= g; ++m) {
    const int gl = -m;         // left ghost
    const int gr = n - 1 + m;  // right ghost
    for (int v = 0; v < nv; ++v) {
      switch (spec.left.kind) {
        case BoundaryKind::periodic: f(gl, v) = f(n - m, v); break;
        case BoundaryKind::dirichlet: f(gl, v) = spec.left.state[static_cast<size_t>(v)]; break;
        case BoundaryKind::outflow: f(gl, v) = f(0, v); break;
        case BoundaryKind::reflecting: f(gl, v) = (v == 1 && nv >= 3) ? -f(m - 1, v) : f(m - 1, v); break;
        case BoundaryKind::special: break;
      }
      switch (spec.right.kind) {
        case BoundaryKind::periodic: f(gr, v) = f(m - 1, v); break;
        case BoundaryKind::dirichlet: f(gr, v) = spec.right.state[static_cast<size_t>(v)]; break;
        case BoundaryKind::outflow: f(gr, v) = f(n - 1, v); break;
        case BoundaryKind::reflecting: f(gr, v) = (v == 1 && nv >= 3) ? -f(n - m, v) : f(n - m, v); break;
        case BoundaryKind::special: break;
      }
    }
  }
}

namespace {

// Fill one ghost cell `dst` from interior `src` under a non-special condition.
// `normal` is the momentum component flipped by a reflecting wall.
inline void apply(const BoundaryCondition& bc, std::span<double> dst, std::span<const double> src,
                  std::span<const double> mirror, int normal) {
  const int nv = static_cast<int>(dst.size());
  for (int v = 0; v < nv; ++v) {
    switch (bc.kind) {
      case BoundaryKind::periodic: dst[v] = src[v]; break;
      case BoundaryKind::dirichlet: dst[v] = bc.state[static_cast<size_t>(v)]; break;
      case BoundaryKind::outflow: dst[v] = src[v]; break;
      case BoundaryKind::reflecting: dst[v] = (v == normal && nv >= 4) ? -mirror[v] : mirror[v]; break;
      case BoundaryKind::special: break;
    }
  }
}

}  // namespace

void fill_ghosts(Field2D& f, const Grid2D& grid, const BoundarySpec2D& spec, double t) {
  const int nx = f.nx(), ny = f.ny(), g = f.ghost();
  spec.validate(f.nvar());

  // y-sides over interior columns first, then x-sides over all rows (fills corners).
  for (int i = 0; i < nx; ++i) {
    for (int m = 1; m <= g; ++m) {
      {
        const int src = spec.bottom.kind == BoundaryKind::periodic ? ny - m : 0;
        apply(spec.bottom, f.cell(i, -m), f.cell(i, src), f.cell(i, m - 1), 2);
      }
      {
        const int src = spec.top.kind == BoundaryKind::periodic ? m - 1 : ny - 1;
        apply(spec.top, f.cell(i, ny - 1 + m), f.cell(i, src), f.cell(i, ny - m), 2);
      }
    }
  }
  if (spec.bottom.kind == BoundaryKind::special) spec.bottom.filler(f, grid, Side::bottom, t);
  if (spec.top.kind == BoundaryKind::special) spec.top.filler(f, grid, Side::top, t);

  for (int j = -g; j < ny + g; ++j) {
    for (int m = 1; m <= g; ++m) {
      {
        const int src = spec.left.kind == BoundaryKind::periodic ? nx - m : 0;
        apply(spec.left, f.cell(-m, j), f.cell(src, j), f.cell(m - 1, j), 1);
      }
      {
        const int src = spec.right.kind == BoundaryKind::periodic ? m - 1 : nx - 1;
        apply(spec.right, f.cell(nx - 1 + m, j), f.cell(src, j), f.cell(nx - m, j), 1);
      }
    }
  }
  if (spec.left.kind == BoundaryKind::special) spec.left.filler(f, grid, Side::left, t);
  if (spec.right.kind == BoundaryKind::special) spec.right.filler(f, grid, Side::right, t);
}

}  // namespace rbfweno
