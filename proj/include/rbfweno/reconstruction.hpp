#pragma once

// Interface reconstruction kernels for finite difference ENO / WENO-JS and their
// multiquadric-RBF variants.
//
// Window convention: a reconstruction window is 2k-1 consecutive nodal flux values
// centered on cell i, i.e. f_{i-k+1} ... f_{i+k-1}. Side::plus yields the left-biased
// value at x_{i+1/2}. Side::minus yields the right-biased value at x_{i-1/2} by reversing
// the window and reusing the plus path.
//
// Coefficient rows are indexed by the left shift r of the stencil {i-r, ..., i-r+k-1};
// the value at x_{i+1/2} is sum_j c_{rj} f_{i-r+j}.

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace rbfweno {

enum class Scheme { eno, rbf_eno, weno_js, rbf_weno_js };
enum class ReconSide { plus, minus };

std::string_view to_string(Scheme s);
/// Accepts eno, rbf-eno, weno-js, rbf-weno-js. Throws ConfigError otherwise.
Scheme parse_scheme(std::string_view name);
inline bool uses_rbf(Scheme s) { return s == Scheme::rbf_eno || s == Scheme::rbf_weno_js; }

inline constexpr double kWenoEpsilon = 1e-6;
inline constexpr double kEtaClamp = 2.0;
inline constexpr double kDenominatorTolerance = 1e-10;

struct StencilSpec {
  int k = 3;
  int r = 0;
  int s() const { return k - 1 - r; }
};

/// Dimensionless shape parameter eta = eps^2 dx^2. `limited` marks the polynomial limit
/// (value 0) or a clamp (|value| == kEtaClamp, `clamped` also set).
struct Eta {
  double value = 0.0;
  bool limited = false;
  bool clamped = false;
};

struct ReconCoeffs {
  int k = 0;
  std::array<double, 3> c{};

  double sum() const;
  /// sum_j c_j f_j over the k stencil values.
  double apply(std::span<const double> stencil) const;
};

/// Constant part and eta-slope of one row. The RBF coefficient is base + slope * eta.
struct CoeffRow {
  std::array<double, 3> base{};
  std::array<double, 3> slope{};
};

/// Both coefficient tables for k = 2, 3. The polynomial table and the RBF table are
/// stored independently so the polynomial-limit identity between them is checkable.
struct CoeffTables {
  std::array<std::array<double, 3>, 3> poly_k2{};  // rows r = -1, 0, 1
  std::array<std::array<double, 3>, 4> poly_k3{};  // rows r = -1, 0, 1, 2
  std::array<CoeffRow, 3> rbf_k2{};
  std::array<CoeffRow, 4> rbf_k3{};

  const std::array<double, 3>& poly(int k, int r) const;
  const CoeffRow& rbf(int k, int r) const;
};

const CoeffTables& default_coeff_tables();

struct WenoWeights {
  int k = 0;
  double eps_m = kWenoEpsilon;
  std::array<double, 3> d{}, beta{}, alpha{}, w{};
};

/// Counters accumulated by the kernels. Integer counts keep parallel sums deterministic.
struct ReconStats {
  std::int64_t eta_evaluations = 0;
  std::int64_t eta_limited = 0;  // polynomial limit forced (switch or zero denominator)
  std::int64_t eta_clamped = 0;

  ReconStats& operator+=(const ReconStats& o) {
    eta_evaluations += o.eta_evaluations;
    eta_limited += o.eta_limited;
    eta_clamped += o.eta_clamped;
    return *this;
  }
};

/// Level m (m = 0 .. size-1) holds the undivided forward differences Delta^m f_j.
using DifferenceTable = std::vector<std::vector<double>>;
DifferenceTable undivided_differences(std::span<const double> window);

/// ENO stencil choice for the x_{i+1/2} reconstruction from a 2k-1 window. Starting from
/// {i} the stencil grows towards the smaller undivided difference; ties grow right.
int eno_select(std::span<const double> window, int k);

ReconCoeffs poly_coeffs(int k, int r, const CoeffTables& tables = default_coeff_tables());
ReconCoeffs rbf_coeffs(int k, int r, double eta, const CoeffTables& tables = default_coeff_tables());

/// True when the quadratic through (f_{i-1}, f_i, f_{i+1}) on [0, 3dx] has its extremum
/// strictly inside the interval, i.e. the polynomial limit must be used.
bool monotone_k2(double fm, double f0, double fp);

/// Shape parameter for k = 2 from (f_{i-1}, f_i, f_{i+1}), with the monotone switch (unless
/// disabled), the zero-denominator guard and the |eta| <= kEtaClamp clamp.
Eta eta_k2(double fm, double f0, double fp, bool monotone_switch = true);
double eta_k2_raw(double fm, double f0, double fp);

/// Shape parameter for k = 3 from (f_{i-1}, ..., f_{i+2}). Applies the monotone switch to
/// the two 3-cell blocks inside this window, the guard and the clamp. The remaining block
/// (f_{i-2}, f_{i-1}, f_i) is checked by adapted_eta.
Eta eta_k3(double fm, double f0, double fp, double fpp, bool monotone_switch = true);
double eta_k3_raw(double fm, double f0, double fp, double fpp);

/// Shared eta for one interface from a 2k-1 plus-side window, all monotone blocks checked.
Eta adapted_eta(int k, std::span<const double> window, bool monotone_switch = true);

/// Jiang-Shu smoothness indicators from a 2k-1 window, ordered r = 0 .. k-1.
std::array<double, 3> beta_js(int k, std::span<const double> window);

/// Optimal linear weights d_r, ordered r = 0 .. k-1.
std::array<double, 3> linear_weights(int k);

WenoWeights weno_weights(int k, std::span<const double> d, std::span<const double> beta,
                         double eps_m = kWenoEpsilon);

struct ReconOptions {
  /// Force the polynomial limit where the local quadratic has an interior extremum.
  bool monotone_switch = true;
  /// Coefficient tables; null selects default_coeff_tables().
  const CoeffTables* tables = nullptr;
};

/// Interface value from a 2k-1 window. Throws std::invalid_argument on a bad window size
/// or k outside {2, 3}.
double reconstruct_interface(int k, Scheme scheme, std::span<const double> window, ReconSide side,
                             ReconStats* stats = nullptr, const ReconOptions& opts = {});

}  // namespace rbfweno
