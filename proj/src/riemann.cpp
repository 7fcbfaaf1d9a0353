// Exact Riemann solver for the ideal-gas Euler equations (pressure-function Newton
// iteration with sampling of the self-similar solution).

#include <cmath>

#include "rbfweno/problems.hpp"

namespace rbfweno {

namespace {

struct WaveSide {
  double rho, u, p, c;
};

// Pressure function f_K(p) and its derivative for one side.
void pressure_function(double p, const WaveSide& s, double g, double& f, double& df) {
  if (p > s.p) {
    const double A = 2.0 / ((g + 1.0) * s.rho);
    const double B = (g - 1.0) / (g + 1.0) * s.p;
    const double q = std::sqrt(A / (p + B));
    f = (p - s.p) * q;
    df = q * (1.0 - 0.5 * (p - s.p) / (B + p));
  } else {
    const double ratio = p / s.p;
    f = 2.0 * s.c / (g - 1.0) * (std::pow(ratio, (g - 1.0) / (2.0 * g)) - 1.0);
    df = 1.0 / (s.rho * s.c) * std::pow(ratio, -(g + 1.0) / (2.0 * g));
  }
}

WaveSide side_of(const Primitive& w, double g) {
  if (!(w.rho > 0.0) || !(w.p > 0.0)) throw StateError("exact_riemann: nonpositive density or pressure");
  return {w.rho, w.u, w.p, std::sqrt(g * w.p / w.rho)};
}

}  // namespace

RiemannSolution exact_riemann(const Primitive& left, const Primitive& right, const Eos& eos) {
  const double g = eos.gamma;
  const WaveSide L = side_of(left, g), R = side_of(right, g);
  if (2.0 * (L.c + R.c) / (g - 1.0) <= R.u - L.u) throw StateError("exact_riemann: initial data generate vacuum");

  const double z = (g - 1.0) / (2.0 * g);
  double p = std::pow((L.c + R.c - 0.5 * (g - 1.0) * (R.u - L.u)) / (L.c / std::pow(L.p, z) + R.c / std::pow(R.p, z)),
                      1.0 / z);
  p = std::max(p, 1e-12);
  double fl = 0.0, dfl = 0.0, fr = 0.0, dfr = 0.0;
  for (int it = 0; it < 100; ++it) {
    pressure_function(p, L, g, fl, dfl);
    pressure_function(p, R, g, fr, dfr);
    double next = p - (fl + fr + R.u - L.u) / (dfl + dfr);
    if (next < 0.0) next = 1e-12;
    const double change = 2.0 * std::abs(next - p) / (next + p);
    p = next;
    if (change < 1e-14) break;
  }
  pressure_function(p, L, g, fl, dfl);
  pressure_function(p, R, g, fr, dfr);

  RiemannSolution sol;
  sol.left = left;
  sol.right = right;
  sol.gamma = g;
  sol.p_star = p;
  sol.u_star = 0.5 * (L.u + R.u) + 0.5 * (fr - fl);
  return sol;
}

double RiemannSolution::left_head() const {
  const double g = gamma, c = std::sqrt(g * left.p / left.rho);
  if (left_is_shock()) {
    return left.u - c * std::sqrt((g + 1.0) / (2.0 * g) * p_star / left.p + (g - 1.0) / (2.0 * g));
  }
  return left.u - c;
}

double RiemannSolution::left_tail() const {
  if (left_is_shock()) return left_head();
  const double g = gamma, c = std::sqrt(g * left.p / left.rho);
  return u_star - c * std::pow(p_star / left.p, (g - 1.0) / (2.0 * g));
}

double RiemannSolution::right_head() const {
  const double g = gamma, c = std::sqrt(g * right.p / right.rho);
  if (right_is_shock()) {
    return right.u + c * std::sqrt((g + 1.0) / (2.0 * g) * p_star / right.p + (g - 1.0) / (2.0 * g));
  }
  return right.u + c;
}

double RiemannSolution::right_tail() const {
  if (right_is_shock()) return right_head();
  const double g = gamma, c = std::sqrt(g * right.p / right.rho);
  return u_star + c * std::pow(p_star / right.p, (g - 1.0) / (2.0 * g));
}

Primitive RiemannSolution::sample(double xi) const {
  const double g = gamma;
  const double gm = (g - 1.0) / (g + 1.0);
  if (xi <= u_star) {
    const double c = std::sqrt(g * left.p / left.rho);
    if (left_is_shock()) {
      if (xi <= left_head()) return left;
      const double ratio = p_star / left.p;
      return {left.rho * (ratio + gm) / (gm * ratio + 1.0), u_star, 0.0, p_star};
    }
    if (xi <= left_head()) return left;
    if (xi >= left_tail()) return {left.rho * std::pow(p_star / left.p, 1.0 / g), u_star, 0.0, p_star};
    const double u = 2.0 / (g + 1.0) * (c + 0.5 * (g - 1.0) * left.u + xi);
    const double base = 2.0 / (g + 1.0) + gm / c * (left.u - xi);
    return {left.rho * std::pow(base, 2.0 / (g - 1.0)), u, 0.0, left.p * std::pow(base, 2.0 * g / (g - 1.0))};
  }
  const double c = std::sqrt(g * right.p / right.rho);
  if (right_is_shock()) {
    if (xi >= right_head()) return right;
    const double ratio = p_star / right.p;
    return {right.rho * (ratio + gm) / (gm * ratio + 1.0), u_star, 0.0, p_star};
  }
  if (xi >= right_head()) return right;
  if (xi <= right_tail()) return {right.rho * std::pow(p_star / right.p, 1.0 / g), u_star, 0.0, p_star};
  const double u = 2.0 / (g + 1.0) * (-c + 0.5 * (g - 1.0) * right.u + xi);
  const double base = 2.0 / (g + 1.0) - gm / c * (right.u - xi);
  return {right.rho * std::pow(base, 2.0 / (g - 1.0)), u, 0.0, right.p * std::pow(base, 2.0 * g / (g - 1.0))};
}

}  // namespace rbfweno
