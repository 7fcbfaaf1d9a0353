#include "rbfweno/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace rbfweno {

namespace {

using Real = OracleReal;
using Matrix = std::vector<std::vector<Real>>;

// In-place LU with partial pivoting. Returns false on an exactly singular pivot.
template <class T>
bool lu_factor(std::vector<std::vector<T>>& a, std::vector<size_t>& piv) {
  const size_t n = a.size();
  piv.resize(n);
  std::iota(piv.begin(), piv.end(), size_t{0});
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    for (size_t r = c + 1; r < n; ++r) {
      if (abs(a[r][c]) > abs(a[p][c])) p = r;
    }
    if (a[p][c] == 0) return false;
    std::swap(a[p], a[c]);
    std::swap(piv[p], piv[c]);
    for (size_t r = c + 1; r < n; ++r) {
      a[r][c] /= a[c][c];
      for (size_t q = c + 1; q < n; ++q) a[r][q] -= a[r][c] * a[c][q];
    }
  }
  return true;
}

template <class T>
std::vector<T> lu_solve(const std::vector<std::vector<T>>& lu, const std::vector<size_t>& piv, const std::vector<T>& b) {
  const size_t n = lu.size();
  std::vector<T> x(n);
  for (size_t r = 0; r < n; ++r) {
    x[r] = b[piv[r]];
    for (size_t q = 0; q < r; ++q) x[r] -= lu[r][q] * x[q];
  }
  for (size_t r = n; r-- > 0;) {
    for (size_t q = r + 1; q < n; ++q) x[r] -= lu[r][q] * x[q];
    x[r] /= lu[r][r];
  }
  return x;
}

Real kernel(const Real& x, const Real& xc, const Real& eps2) {
  const Real rad = 1 + eps2 * (x - xc) * (x - xc);
  if (!(rad > 0)) throw OracleError("multiquadric radicand is not positive");
  return sqrt(rad);
}

Real kernel_dx(const Real& x, const Real& xc, const Real& eps2) { return eps2 * (x - xc) / kernel(x, xc, eps2); }

// 1-norm condition number; the systems here are at most 6 x 6, so A^{-1} is formed column by column.
double condition_1(const Matrix& a, const Matrix& lu, const std::vector<size_t>& piv) {
  const size_t n = a.size();
  Real norm_a = 0, norm_inv = 0;
  for (size_t c = 0; c < n; ++c) {
    Real col = 0;
    for (size_t r = 0; r < n; ++r) col += abs(a[r][c]);
    norm_a = std::max(norm_a, col);
    std::vector<Real> e(n, Real(0));
    e[c] = 1;
    const auto x = lu_solve(lu, piv, e);
    Real s = 0;
    for (const auto& v : x) s += abs(v);
    norm_inv = std::max(norm_inv, s);
  }
  return static_cast<double>(norm_a * norm_inv);
}

// Derivative at 0 of the polynomial through (x_m, H_m), via Lagrange basis derivatives.
Real poly_derivative_at_zero(const std::vector<Real>& x, const std::vector<Real>& h) {
  const size_t n = x.size();
  Real d = 0;
  for (size_t m = 0; m < n; ++m) {
    Real denom = 1;
    for (size_t q = 0; q < n; ++q) {
      if (q != m) denom *= x[m] - x[q];
    }
    // d/dx prod_{q != m} (x - x_q) at x = 0
    Real num = 0;
    for (size_t skip = 0; skip < n; ++skip) {
      if (skip == m) continue;
      Real term = 1;
      for (size_t q = 0; q < n; ++q) {
        if (q != m && q != skip) term *= -x[q];
      }
      num += term;
    }
    d += h[m] * num / denom;
  }
  return d;
}

}  // namespace

double mq_kernel(double x, double xc, double eps2) {
  const double rad = 1.0 + eps2 * (x - xc) * (x - xc);
  if (!(rad > 0.0)) throw OracleError("multiquadric radicand is not positive");
  return std::sqrt(rad);
}

double RbfSystem::value(double x) const {
  Real s = 0;
  for (size_t m = 0; m < centers.size(); ++m) s += lambda[m] * kernel(Real(x), Real(centers[m]), Real(eps2));
  return static_cast<double>(s);
}

double RbfSystem::derivative(double x) const {
  Real s = 0;
  for (size_t m = 0; m < centers.size(); ++m) s += lambda[m] * kernel_dx(Real(x), Real(centers[m]), Real(eps2));
  return static_cast<double>(s);
}

RbfSystem rbf_interp(std::span<const double> centers, std::span<const double> values, double eps2) {
  const size_t n = centers.size();
  if (n == 0 || values.size() != n) throw OracleError("rbf_interp: need matching, nonempty centers and values");
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = a + 1; b < n; ++b) {
      if (centers[a] == centers[b]) throw OracleError("rbf_interp: repeated center");
    }
  }
  Matrix a(n, std::vector<Real>(n));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) a[r][c] = kernel(Real(centers[r]), Real(centers[c]), Real(eps2));
  }
  Matrix lu = a;
  std::vector<size_t> piv;
  if (!lu_factor(lu, piv)) throw OracleError("rbf_interp: singular interpolation matrix");

  RbfSystem sys;
  sys.centers.assign(centers.begin(), centers.end());
  sys.eps2 = eps2;
  sys.condition = condition_1(a, lu, piv);
  if (!(sys.condition < 1e45)) throw OracleError("rbf_interp: interpolation matrix numerically singular");
  std::vector<Real> rhs(values.begin(), values.end());
  sys.lambda = lu_solve(lu, piv, rhs);
  return sys;
}

double flux_reconstruct_oracle(std::span<const double> stencil, int r, double eps2, double dx) {
  const int k = static_cast<int>(stencil.size());
  if (k < 1 || r < -1 || r > k - 1) throw OracleError("flux_reconstruct_oracle: shift outside the stencil range");
  if (!(dx > 0.0)) throw OracleError("flux_reconstruct_oracle: dx must be positive");

  // Faces x_{i-r-1/2+m}, m = 0..k, measured from x_{i+1/2}.
  std::vector<Real> x(static_cast<size_t>(k) + 1), h(static_cast<size_t>(k) + 1);
  Real acc = 0;
  for (int m = 0; m <= k; ++m) {
    x[static_cast<size_t>(m)] = Real(m - r - 1) * Real(dx);
    h[static_cast<size_t>(m)] = acc;
    if (m < k) acc += Real(dx) * Real(stencil[static_cast<size_t>(m)]);
  }
  const Real anchor = h[static_cast<size_t>(r + 1)];
  for (auto& v : h) v -= anchor;

  if (eps2 == 0.0) return static_cast<double>(poly_derivative_at_zero(x, h));

  const size_t n = x.size();
  Matrix a(n, std::vector<Real>(n));
  for (size_t p = 0; p < n; ++p) {
    for (size_t q = 0; q < n; ++q) a[p][q] = kernel(x[p], x[q], Real(eps2));
  }
  Matrix lu = a;
  std::vector<size_t> piv;
  if (!lu_factor(lu, piv)) throw OracleError("flux_reconstruct_oracle: singular interpolation matrix");
  if (!(condition_1(a, lu, piv) < 1e45)) throw OracleError("flux_reconstruct_oracle: matrix numerically singular");
  const auto lambda = lu_solve(lu, piv, h);
  Real d = 0;
  for (size_t q = 0; q < n; ++q) d += lambda[q] * kernel_dx(Real(0), x[q], Real(eps2));
  return static_cast<double>(d);
}

double closed_form_k2_weight(double eps2, double dx) {
  const double eta = eps2 * dx * dx;
  if (!(eta > -0.25)) throw OracleError("closed_form_k2_weight: requires eta > -1/4");
  return (std::sqrt(4.0 * eta + 1.0) + 1.0) / (4.0 * std::sqrt(eta + 1.0));
}

OrderFit empirical_order(std::span<const double> h, std::span<const double> errors) {
  if (h.size() != errors.size() || h.size() < 2) throw std::invalid_argument("empirical_order: need >= 2 pairs");
  OrderFit fit;
  for (double e : errors) {
    if (e == 0.0) {
      fit.saturated = true;
      return fit;
    }
  }
  const size_t n = h.size();
  double mx = 0.0, my = 0.0;
  for (size_t q = 0; q < n; ++q) {
    mx += std::log(h[q]);
    my += std::log(std::abs(errors[q]));
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (size_t q = 0; q < n; ++q) {
    const double dx = std::log(h[q]) - mx;
    sxy += dx * (std::log(std::abs(errors[q])) - my);
    sxx += dx * dx;
  }
  fit.slope = sxy / sxx;
  return fit;
}

OrderFit empirical_order(std::span<const int> resolutions, const std::function<double(int)>& error_at) {
  if (resolutions.size() < 3) throw std::invalid_argument("empirical_order: need at least three resolutions");
  std::vector<double> h, e;
  for (int n : resolutions) {
    if (n <= 0) throw std::invalid_argument("empirical_order: resolutions must be positive");
    h.push_back(1.0 / n);
    e.push_back(error_at(n));
  }
  return empirical_order(h, e);
}

double two_point_midpoint_error(const std::function<double(double)>& u, double x0, double h, double eps2) {
  const double mid = x0 + 0.5 * h;
  if (eps2 == 0.0) return u(mid) - 0.5 * (u(x0) + u(x0 + h));
  const std::array<double, 2> c{x0, x0 + h};
  const std::array<double, 2> v{u(x0), u(x0 + h)};
  return u(mid) - rbf_interp(c, v, eps2).value(mid);
}

}  // namespace rbfweno
