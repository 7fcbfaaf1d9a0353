#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rbfweno {

/// Ghost layer width. Covers the k=3 stencils plus the 4-point shape-parameter window.
inline constexpr int kGhostWidth = 3;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Uniform 1D grid on [a, b] with n cells. Node i (zero-based) sits at a + (i + offset) dx:
/// offset 1/2 gives cell centers, offset 0 puts the nodes on a, a + dx, ..., b - dx, the
/// usual layout for periodic finite difference grids.
struct Grid1D {
  double a = 0.0;
  double b = 1.0;
  int n = 1;
  double offset = 0.5;

  Grid1D() = default;
  Grid1D(double a_, double b_, int n_, double offset_ = 0.5);

  double dx() const { return (b - a) / n; }
  /// Node position from the index formula. Valid for ghost indices as well.
  double x(int i) const { return a + (i + offset) * dx(); }
  /// Left face of node i, i.e. x_{i-1/2}.
  double face(int i) const { return a + (i + offset - 0.5) * dx(); }
};

struct Grid2D {
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  int nx = 1, ny = 1;

  Grid2D() = default;
  Grid2D(double x0_, double x1_, int nx_, double y0_, double y1_, int ny_);

  double dx() const { return (x1 - x0) / nx; }
  double dy() const { return (y1 - y0) / ny; }
  double x(int i) const { return x0 + (i + 0.5) * dx(); }
  double y(int j) const { return y0 + (j + 0.5) * dy(); }
};

/// Cell-centered values with `nvar` components per cell and a ghost layer on each side.
/// Indices run over [-ghost, n + ghost).
class Field1D {
 public:
  Field1D() = default;
  Field1D(int n, int nvar, int ghost = kGhostWidth);

  int size() const { return n_; }
  int nvar() const { return nvar_; }
  int ghost() const { return g_; }

  double& operator()(int i, int v = 0) { return data_[offset(i, v)]; }
  double operator()(int i, int v = 0) const { return data_[offset(i, v)]; }

  std::span<double> cell(int i) { return {data_.data() + offset(i, 0), static_cast<size_t>(nvar_)}; }
  std::span<const double> cell(int i) const {
    return {data_.data() + offset(i, 0), static_cast<size_t>(nvar_)};
  }

  /// Whole storage, ghosts included, ordered [cell][component].
  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

  /// Interior component v copied out in cell order.
  std::vector<double> interior(int v = 0) const;

 private:
  size_t offset(int i, int v) const { return static_cast<size_t>((i + g_) * nvar_ + v); }

  int n_ = 0, nvar_ = 1, g_ = 0;
  std::vector<double> data_;
};

/// 2D analogue of Field1D; x index varies fastest.
class Field2D {
 public:
  Field2D() = default;
  Field2D(int nx, int ny, int nvar, int ghost = kGhostWidth);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nvar() const { return nvar_; }
  int ghost() const { return g_; }

  double& operator()(int i, int j, int v = 0) { return data_[offset(i, j, v)]; }
  double operator()(int i, int j, int v = 0) const { return data_[offset(i, j, v)]; }

  std::span<double> cell(int i, int j) {
    return {data_.data() + offset(i, j, 0), static_cast<size_t>(nvar_)};
  }
  std::span<const double> cell(int i, int j) const {
    return {data_.data() + offset(i, j, 0), static_cast<size_t>(nvar_)};
  }

  std::span<double> values() { return data_; }
  std::span<const double> values() const { return data_; }

 private:
  size_t offset(int i, int j, int v) const {
    return (static_cast<size_t>(j + g_) * static_cast<size_t>(nx_ + 2 * g_) + static_cast<size_t>(i + g_)) *
               static_cast<size_t>(nvar_) +
           static_cast<size_t>(v);
  }

  int nx_ = 0, ny_ = 0, nvar_ = 1, g_ = 0;
  std::vector<double> data_;
};

enum class BoundaryKind { periodic, dirichlet, outflow, reflecting, special };
enum class Side { left, right, bottom, top };

/// Fills the ghost cells of one side of a 2D field. Used for time-dependent or
/// position-dependent boundaries such as the double Mach reflection top and bottom edges.
using GhostFiller = std::function<void(Field2D&, const Grid2D&, Side, double t)>;

struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::outflow;
  std::vector<double> state;  // dirichlet only
  GhostFiller filler;         // special only

  static BoundaryCondition periodic() { return {BoundaryKind::periodic, {}, {}}; }
  static BoundaryCondition outflow() { return {BoundaryKind::outflow, {}, {}}; }
  static BoundaryCondition reflecting() { return {BoundaryKind::reflecting, {}, {}}; }
  static BoundaryCondition dirichlet(std::vector<double> s) { return {BoundaryKind::dirichlet, std::move(s), {}}; }
  static BoundaryCondition special(GhostFiller f) { return {BoundaryKind::special, {}, std::move(f)}; }
};

struct BoundarySpec1D {
  BoundaryCondition left, right;
  /// Throws ConfigError on unpaired periodic sides or a dirichlet state of the wrong size.
  void validate(int nvar) const;
};

struct BoundarySpec2D {
  BoundaryCondition left, right, bottom, top;
  void validate(int nvar) const;
};

/// Populates every ghost cell of `field`. Periodic wraps, dirichlet copies the fixed state,
/// outflow copies the nearest interior cell, reflecting mirrors and flips the wall-normal
/// momentum (component 1 in x, component 2 in y; scalars are mirrored only).
void fill_ghosts(Field1D& field, const BoundarySpec1D& spec, double t);
void fill_ghosts(Field2D& field, const Grid2D& grid, const BoundarySpec2D& spec, double t);

}  // namespace rbfweno
