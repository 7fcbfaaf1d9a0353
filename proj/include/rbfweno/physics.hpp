#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "rbfweno/grid.hpp"

namespace rbfweno {

enum class Equation { advection, burgers, euler };
enum class Direction { x, y };

class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Eos {
  double gamma = 1.4;
};

/// Conserved components per cell: 1 for the scalar equations, 3 (rho, m, E) for 1D Euler,
/// 4 (rho, mx, my, E) for 2D Euler.
int num_vars(Equation eq, int dims);

struct Primitive {
  double rho = 1.0, u = 0.0, v = 0.0, p = 1.0;
};

/// P = (gamma - 1)(E - rho |u|^2 / 2). Throws StateError for rho <= 0.
double pressure(std::span<const double> U, const Eos& eos);
Primitive to_primitive(std::span<const double> U, const Eos& eos);
std::array<double, 3> to_conserved_1d(const Primitive& w, const Eos& eos);
std::array<double, 4> to_conserved_2d(const Primitive& w, const Eos& eos);

inline double flux_advection(double u) { return u; }
inline double flux_burgers(double u) { return 0.5 * u * u; }

std::array<double, 3> flux_euler_1d(const std::array<double, 3>& U, const Eos& eos);
std::array<double, 4> flux_euler_2d_x(const std::array<double, 4>& U, const Eos& eos);
std::array<double, 4> flux_euler_2d_y(const std::array<double, 4>& U, const Eos& eos);

/// Physical flux of `eq` along `dir` for one cell state of `dims`-dimensional problem.
/// Scalar advection in 2D uses u_t + u_x + u_y = 0.
void physical_flux(Equation eq, int dims, Direction dir, std::span<const double> U, const Eos& eos,
                   std::span<double> F);

/// Largest characteristic speed along `dir` in a single state.
double local_wavespeed(Equation eq, int dims, Direction dir, std::span<const double> U, const Eos& eos);

/// Global maximum over the interior cells.
double max_wavespeed(const Field1D& field, Equation eq, const Eos& eos);
double max_wavespeed(const Field2D& field, Equation eq, const Eos& eos, Direction dir);

struct SplitFluxPair {
  std::vector<double> fplus, fminus;
};

/// Global Lax-Friedrichs splitting f+- = (f +- alpha u) / 2, componentwise.
SplitFluxPair lf_split(std::span<const double> f, std::span<const double> u, double alpha);

/// Left/right eigenvector matrices of the flux Jacobian at an interface. Row-major,
/// n x n with n = number of conserved variables.
struct CharBasis {
  int n = 1;
  std::array<double, 16> L{};
  std::array<double, 16> R{};

  double left(int a, int b) const { return L[static_cast<size_t>(a * n + b)]; }
  double right(int a, int b) const { return R[static_cast<size_t>(a * n + b)]; }
};

CharBasis identity_basis(int n);

/// Roe-averaged eigenbasis between states UL and UR (Euler, 1D or 2D along `dir`).
/// Throws StateError when the averaged state has no real sound speed.
CharBasis roe_basis(std::span<const double> UL, std::span<const double> UR, const Eos& eos, int dims,
                    Direction dir);

/// out = L * in (project onto characteristic fields).
void char_transform(const CharBasis& b, std::span<const double> in, std::span<double> out);
/// out = R * in (back to conserved components).
void char_inverse(const CharBasis& b, std::span<const double> in, std::span<double> out);

}  // namespace rbfweno
