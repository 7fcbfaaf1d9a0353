#include "rbfweno/physics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rbfweno {

int num_vars(Equation eq, int dims) {
  if (eq != Equation::euler) return 1;
  return dims == 1 ? 3 : 4;
}

double pressure(std::span<const double> U, const Eos& eos) {
  const double rho = U[0];
  if (!(rho > 0.0)) throw StateError("nonpositive density " + std::to_string(rho));
  double kinetic = 0.0;
  const size_t nmom = U.size() - 2;
  for (size_t d = 1; d <= nmom; ++d) kinetic += U[d] * U[d];
  return (eos.gamma - 1.0) * (U.back() - 0.5 * kinetic / rho);
}

Primitive to_primitive(std::span<const double> U, const Eos& eos) {
  Primitive w;
  w.p = pressure(U, eos);
  w.rho = U[0];
  w.u = U[1] / U[0];
  w.v = U.size() == 4 ? U[2] / U[0] : 0.0;
  return w;
}

std::array<double, 3> to_conserved_1d(const Primitive& w, const Eos& eos) {
  return {w.rho, w.rho * w.u, w.p / (eos.gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

std::array<double, 4> to_conserved_2d(const Primitive& w, const Eos& eos) {
  return {w.rho, w.rho * w.u, w.rho * w.v, w.p / (eos.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v)};
}

std::array<double, 3> flux_euler_1d(const std::array<double, 3>& U, const Eos& eos) {
  const double p = pressure(U, eos);
  const double u = U[1] / U[0];
  return {U[1], U[1] * u + p, (U[2] + p) * u};
}

std::array<double, 4> flux_euler_2d_x(const std::array<double, 4>& U, const Eos& eos) {
  const double p = pressure(U, eos);
  const double u = U[1] / U[0];
  return {U[1], U[1] * u + p, U[2] * u, (U[3] + p) * u};
}

std::array<double, 4> flux_euler_2d_y(const std::array<double, 4>& U, const Eos& eos) {
  const double p = pressure(U, eos);
  const double v = U[2] / U[0];
  return {U[2], U[1] * v, U[2] * v + p, (U[3] + p) * v};
}

void physical_flux(Equation eq, int dims, Direction dir, std::span<const double> U, const Eos& eos,
                   std::span<double> F) {
  switch (eq) {
    case Equation::advection: F[0] = flux_advection(U[0]); return;
    case Equation::burgers: F[0] = flux_burgers(U[0]); return;
    case Equation::euler: break;
  }
  if (dims == 1) {
    const auto f = flux_euler_1d({U[0], U[1], U[2]}, eos);
    std::copy(f.begin(), f.end(), F.begin());
  } else {
    const std::array<double, 4> s{U[0], U[1], U[2], U[3]};
    const auto f = dir == Direction::x ? flux_euler_2d_x(s, eos) : flux_euler_2d_y(s, eos);
    std::copy(f.begin(), f.end(), F.begin());
  }
}

double local_wavespeed(Equation eq, int dims, Direction dir, std::span<const double> U, const Eos& eos) {
  switch (eq) {
    case Equation::advection: return 1.0;
    case Equation::burgers: return std::abs(U[0]);
    case Equation::euler: break;
  }
  const double p = pressure(U, eos);
  const double rho = U[0];
  if (!(p > 0.0)) throw StateError("nonpositive pressure " + std::to_string(p));
  const double c = std::sqrt(eos.gamma * p / rho);
  const double un = (dims == 2 && dir == Direction::y) ? U[2] / rho : U[1] / rho;
  return std::abs(un) + c;
}

double max_wavespeed(const Field1D& field, Equation eq, const Eos& eos) {
  double a = 0.0;
  for (int i = 0; i < field.size(); ++i) a = std::max(a, local_wavespeed(eq, 1, Direction::x, field.cell(i), eos));
  return a;
}

double max_wavespeed(const Field2D& field, Equation eq, const Eos& eos, Direction dir) {
  double a = 0.0;
  for (int j = 0; j < field.ny(); ++j) {
    for (int i = 0; i < field.nx(); ++i) a = std::max(a, local_wavespeed(eq, 2, dir, field.cell(i, j), eos));
  }
  return a;
}

SplitFluxPair lf_split(std::span<const double> f, std::span<const double> u, double alpha) {
  if (f.size() != u.size()) throw std::invalid_argument("lf_split: size mismatch");
  SplitFluxPair out{std::vector<double>(f.size()), std::vector<double>(f.size())};
  for (size_t q = 0; q < f.size(); ++q) {
    out.fplus[q] = 0.5 * (f[q] + alpha * u[q]);
    out.fminus[q] = 0.5 * (f[q] - alpha * u[q]);
  }
  return out;
}

CharBasis identity_basis(int n) {
  CharBasis b;
  b.n = n;
  for (int a = 0; a < n; ++a) {
    b.L[static_cast<size_t>(a * n + a)] = 1.0;
    b.R[static_cast<size_t>(a * n + a)] = 1.0;
  }
  return b;
}

CharBasis roe_basis(std::span<const double> UL, std::span<const double> UR, const Eos& eos, int dims,
                    Direction dir) {
  const double g = eos.gamma;
  const double rl = UL[0], rr = UR[0];
  if (!(rl > 0.0) || !(rr > 0.0)) throw StateError("roe_basis: nonpositive density");
  const double pl = pressure(UL, eos), pr = pressure(UR, eos);
  const double sl = std::sqrt(rl), sr = std::sqrt(rr);
  const double inv = 1.0 / (sl + sr);

  // normal / tangential momentum slots
  const size_t in = (dims == 2 && dir == Direction::y) ? 2 : 1;
  const size_t it = (dims == 2 && dir == Direction::y) ? 1 : 2;
  const size_t ie = UL.size() - 1;

  const double un = (UL[in] / sl + UR[in] / sr) * inv;
  const double ut = dims == 2 ? (UL[it] / sl + UR[it] / sr) * inv : 0.0;
  const double H = ((UL[ie] + pl) / sl + (UR[ie] + pr) / sr) * inv;
  const double q2 = un * un + ut * ut;
  const double c2 = (g - 1.0) * (H - 0.5 * q2);
  if (!(c2 > 0.0)) throw StateError("roe_basis: averaged state has c^2 <= 0");
  const double c = std::sqrt(c2);
  const double b1 = (g - 1.0) / c2;
  const double b2 = 0.5 * b1 * q2;

  // Logical ordering (rho, m_n, m_t, E); characteristic fields (u-c, entropy, shear, u+c).
  const double Llog[4][4] = {
      {0.5 * (b2 + un / c), 0.5 * (-b1 * un - 1.0 / c), -0.5 * b1 * ut, 0.5 * b1},
      {1.0 - b2, b1 * un, b1 * ut, -b1},
      {-ut, 0.0, 1.0, 0.0},
      {0.5 * (b2 - un / c), 0.5 * (-b1 * un + 1.0 / c), -0.5 * b1 * ut, 0.5 * b1},
  };
  const double Rlog[4][4] = {
      {1.0, 1.0, 0.0, 1.0},
      {un - c, un, 0.0, un + c},
      {ut, ut, 1.0, ut},
      {H - un * c, 0.5 * q2, ut, H + un * c},
  };

  CharBasis b;
  if (dims == 1) {
    b.n = 3;
    const int pick[3] = {0, 1, 3};
    for (int a = 0; a < 3; ++a) {
      for (int k = 0; k < 3; ++k) {
        b.L[static_cast<size_t>(a * 3 + k)] = Llog[pick[a]][pick[k]];
        b.R[static_cast<size_t>(a * 3 + k)] = Rlog[pick[a]][pick[k]];
      }
    }
    return b;
  }
  b.n = 4;
  const size_t perm[4] = {0, in, it, 3};  // logical -> physical component
  for (size_t a = 0; a < 4; ++a) {
    for (size_t k = 0; k < 4; ++k) {
      b.L[a * 4 + perm[k]] = Llog[a][k];
      b.R[perm[a] * 4 + k] = Rlog[a][k];
    }
  }
  return b;
}

void char_transform(const CharBasis& b, std::span<const double> in, std::span<double> out) {
  for (int a = 0; a < b.n; ++a) {
    double s = 0.0;
    for (int k = 0; k < b.n; ++k) s += b.left(a, k) * in[static_cast<size_t>(k)];
    out[static_cast<size_t>(a)] = s;
  }
}

void char_inverse(const CharBasis& b, std::span<const double> in, std::span<double> out) {
  for (int a = 0; a < b.n; ++a) {
    double s = 0.0;
    for (int k = 0; k < b.n; ++k) s += b.right(a, k) * in[static_cast<size_t>(k)];
    out[static_cast<size_t>(a)] = s;
  }
}

}  // namespace rbfweno
