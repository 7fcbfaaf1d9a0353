#pragma once

// Independent checks for the table-driven kernels: direct multiquadric interpolation by a
// dense linear solve, the closed-form k = 2 coefficient, and empirical convergence orders.
// Nothing here is used by the solver itself.

#include <functional>
#include <span>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbfweno/reconstruction.hpp"

namespace rbfweno {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sqrt(1 + eps2 (x - xc)^2). eps2 may be negative; throws OracleError if the radicand is not positive.
double mq_kernel(double x, double xc, double eps2);

/// 50 significant digits: enough to resolve nearly flat kernels, whose expansion
/// coefficients grow like 1/eta and cancel almost completely.
using OracleReal = boost::multiprecision::cpp_bin_float_50;

/// Multiquadric interpolant sum_i lambda_i phi(x - x_i) with one shared eps2.
struct RbfSystem {
  std::vector<double> centers;
  double eps2 = 0.0;
  std::vector<OracleReal> lambda;
  double condition = 0.0;  // 1-norm condition number of the kernel matrix

  double value(double x) const;
  double derivative(double x) const;
};

/// Solves A lambda = u with A_ij = phi(|x_i - x_j|). Throws OracleError for repeated
/// centers, invalid radicands or a numerically singular matrix (condition > 1e45).
RbfSystem rbf_interp(std::span<const double> centers, std::span<const double> values, double eps2);

/// Value at x_{i+1/2} of the derivative of an interpolant of the primitive H built on the
/// stencil {i-r, ..., i-r+k-1}: H is sampled at the k+1 faces (zero at x_{i+1/2}),
/// interpolated with multiquadrics (eps2 != 0) or a polynomial (eps2 == 0), and
/// differentiated analytically.
double flux_reconstruct_oracle(std::span<const double> stencil, int r, double eps2, double dx);

/// Closed-form k = 2, r = 0 multiquadric weight (sqrt(4 eta + 1) + 1) / (4 sqrt(eta + 1)), eta = eps2 dx^2.
double closed_form_k2_weight(double eps2, double dx);

struct OrderFit {
  double slope = 0.0;
  bool saturated = false;  // some error was zero; slope undefined
};

/// Least-squares slope of log(error) against log(h).
OrderFit empirical_order(std::span<const double> h, std::span<const double> errors);

/// Runs `error_at(n)` for each resolution n and fits the slope against h = 1/n.
/// Requires at least three resolutions.
OrderFit empirical_order(std::span<const int> resolutions, const std::function<double(int)>& error_at);

/// Two-point midpoint interpolation error of u on {x0, x0 + h}: with eps2 = 0 it is the
/// linear interpolant, otherwise the two-center multiquadric.
double two_point_midpoint_error(const std::function<double(double)>& u, double x0, double h, double eps2);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  /// Tables under test; defaults to the built-in ones. Tests swap in corrupted copies.
  const CoeffTables* tables = nullptr;
};

/// Every oracle and property check, one result per check.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

}  // namespace rbfweno
