#include "rbfweno/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rbfweno/grid.hpp"

namespace rbfweno {

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::eno: return "eno";
    case Scheme::rbf_eno: return "rbf-eno";
    case Scheme::weno_js: return "weno-js";
    case Scheme::rbf_weno_js: return "rbf-weno-js";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "eno") return Scheme::eno;
  if (name == "rbf-eno") return Scheme::rbf_eno;
  if (name == "weno-js") return Scheme::weno_js;
  if (name == "rbf-weno-js") return Scheme::rbf_weno_js;
  throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

double ReconCoeffs::sum() const {
  double s = 0.0;
  for (int j = 0; j < k; ++j) s += c[static_cast<size_t>(j)];
  return s;
}

double ReconCoeffs::apply(std::span<const double> stencil) const {
  if (static_cast<int>(stencil.size()) != k) throw std::invalid_argument("ReconCoeffs::apply: stencil size != k");
  double s = 0.0;
  for (int j = 0; j < k; ++j) s += c[static_cast<size_t>(j)] * stencil[static_cast<size_t>(j)];
  return s;
}

namespace {

void check_kr(int k, int r) {
  if ((k != 2 && k != 3) || r < -1 || r > k - 1) {
    throw std::invalid_argument("coefficient row out of range: k=" + std::to_string(k) + " r=" + std::to_string(r));
  }
}

CoeffTables make_default_tables() {
  CoeffTables t;
  t.poly_k2 = {{{3.0 / 2.0, -1.0 / 2.0, 0.0}, {1.0 / 2.0, 1.0 / 2.0, 0.0}, {-1.0 / 2.0, 3.0 / 2.0, 0.0}}};
  t.poly_k3 = {{{11.0 / 6.0, -7.0 / 6.0, 1.0 / 3.0},
                {1.0 / 3.0, 5.0 / 6.0, -1.0 / 6.0},
                {-1.0 / 6.0, 5.0 / 6.0, 1.0 / 3.0},
                {1.0 / 3.0, -7.0 / 6.0, 11.0 / 6.0}}};

  t.rbf_k2 = {{
      {{3.0 / 2.0, -1.0 / 2.0, 0.0}, {-3.0 / 2.0, 1.0 / 2.0, 0.0}},
      {{1.0 / 2.0, 1.0 / 2.0, 0.0}, {1.0 / 4.0, 1.0 / 4.0, 0.0}},
      {{-1.0 / 2.0, 3.0 / 2.0, 0.0}, {1.0 / 2.0, -3.0 / 2.0, 0.0}},
  }};
  t.rbf_k3 = {{
      {{11.0 / 6.0, -7.0 / 6.0, 1.0 / 3.0}, {-9.0 / 2.0, 6.0, -3.0 / 2.0}},
      {{1.0 / 3.0, 5.0 / 6.0, -1.0 / 6.0}, {5.0 / 6.0, -2.0 / 3.0, -1.0 / 6.0}},
      {{-1.0 / 6.0, 5.0 / 6.0, 1.0 / 3.0}, {-1.0 / 6.0, -2.0 / 3.0, 5.0 / 6.0}},
      {{1.0 / 3.0, -7.0 / 6.0, 11.0 / 6.0}, {-3.0 / 2.0, 6.0, -9.0 / 2.0}},
  }};
  return t;
}

}  // namespace

const std::array<double, 3>& CoeffTables::poly(int k, int r) const {
  check_kr(k, r);
  return k == 2 ? poly_k2[static_cast<size_t>(r + 1)] : poly_k3[static_cast<size_t>(r + 1)];
}

const CoeffRow& CoeffTables::rbf(int k, int r) const {
  check_kr(k, r);
  return k == 2 ? rbf_k2[static_cast<size_t>(r + 1)] : rbf_k3[static_cast<size_t>(r + 1)];
}

const CoeffTables& default_coeff_tables() {
  static const CoeffTables tables = make_default_tables();
  return tables;
}

DifferenceTable undivided_differences(std::span<const double> window) {
  DifferenceTable table;
  table.emplace_back(window.begin(), window.end());
  while (table.back().size() > 1) {
    const auto& prev = table.back();
    std::vector<double> next(prev.size() - 1);
    for (size_t j = 0; j + 1 < prev.size(); ++j) next[j] = prev[j + 1] - prev[j];
    table.push_back(std::move(next));
  }
  return table;
}

namespace {

// Delta^m f_j on a raw window.
inline double forward_difference(const double* f, int j, int m) {
  switch (m) {
    case 1: return f[j + 1] - f[j];
    case 2: return f[j + 2] - 2.0 * f[j + 1] + f[j];
    default: return 0.0;
  }
}

inline int eno_select_raw(const double* f, int k) {
  const int c = k - 1;
  int left = c;
  for (int m = 1; m < k; ++m) {
    const double dl = forward_difference(f, left - 1, m);
    const double dr = forward_difference(f, left, m);
    if (std::abs(dl) < std::abs(dr)) --left;
  }
  return c - left;
}

inline double window_scale(const double* f, int n) {
  double s = 1.0;
  for (int j = 0; j < n; ++j) s = std::max(s, std::abs(f[j]));
  return s;
}

inline bool monotone_k2_raw(double fm, double f0, double fp) {
  const double curvature = -fm + 2.0 * f0 - fp;
  const double tau = kDenominatorTolerance * std::max({1.0, std::abs(fm), std::abs(f0), std::abs(fp)});
  if (std::abs(curvature) < tau) return false;
  const double xp = (-2.0 * fm + 3.0 * f0 - fp) / curvature;
  return xp > 0.0 && xp < 3.0;
}

inline Eta finish_eta(double num, double den, double tau) {
  Eta e;
  if (!(std::abs(den) >= tau)) {
    e.limited = true;
    return e;
  }
  e.value = num / den;
  if (std::abs(e.value) > kEtaClamp) {
    e.value = std::copysign(kEtaClamp, e.value);
    e.limited = true;
    e.clamped = true;
  }
  return e;
}

inline Eta eta_k2_impl(double fm, double f0, double fp, bool sw) {
  if (sw && monotone_k2_raw(fm, f0, fp)) return {0.0, true, false};
  const double tau = kDenominatorTolerance * std::max({1.0, std::abs(fm), std::abs(f0), std::abs(fp)});
  return finish_eta(2.0 * (-fm + 2.0 * f0 - fp), -fm + 5.0 * f0 + 2.0 * fp, tau);
}

inline Eta eta_k3_impl(double fm, double f0, double fp, double fpp, bool sw) {
  if (sw && (monotone_k2_raw(fm, f0, fp) || monotone_k2_raw(f0, fp, fpp))) return {0.0, true, false};
  const double tau =
      kDenominatorTolerance * std::max({1.0, std::abs(fm), std::abs(f0), std::abs(fp), std::abs(fpp)});
  return finish_eta(fm - 3.0 * f0 + 3.0 * fp - fpp, fm - 15.0 * f0 + 15.0 * fp - fpp, tau);
}

inline Eta adapted_eta_raw(int k, const double* f, bool sw) {
  if (k == 2) return eta_k2_impl(f[0], f[1], f[2], sw);
  if (sw && monotone_k2_raw(f[0], f[1], f[2])) return {0.0, true, false};
  return eta_k3_impl(f[1], f[2], f[3], f[4], sw);
}

inline std::array<double, 3> beta_raw(int k, const double* f) {
  if (k == 2) {
    const double b0 = f[2] - f[1];
    const double b1 = f[1] - f[0];
    return {b0 * b0, b1 * b1, 0.0};
  }
  // f[0..4] = f_{i-2} .. f_{i+2}
  const double a0 = f[2] - 2.0 * f[3] + f[4], c0 = 3.0 * f[2] - 4.0 * f[3] + f[4];
  const double a1 = f[1] - 2.0 * f[2] + f[3], c1 = f[1] - f[3];
  const double a2 = f[0] - 2.0 * f[1] + f[2], c2 = f[0] - 4.0 * f[1] + 3.0 * f[2];
  constexpr double w = 13.0 / 12.0;
  return {w * a0 * a0 + 0.25 * c0 * c0, w * a1 * a1 + 0.25 * c1 * c1, w * a2 * a2 + 0.25 * c2 * c2};
}

inline std::array<double, 3> linear_weights_raw(int k) {
  if (k == 2) return {2.0 / 3.0, 1.0 / 3.0, 0.0};
  return {3.0 / 10.0, 3.0 / 5.0, 1.0 / 10.0};
}

inline WenoWeights weights_raw(int k, const double* d, const double* beta, double eps_m) {
  WenoWeights ww;
  ww.k = k;
  ww.eps_m = eps_m;
  double total = 0.0;
  for (int r = 0; r < k; ++r) {
    const size_t q = static_cast<size_t>(r);
    ww.d[q] = d[r];
    ww.beta[q] = beta[r];
    const double den = eps_m + beta[r];
    ww.alpha[q] = d[r] / (den * den);
    total += ww.alpha[q];
  }
  for (int r = 0; r < k; ++r) ww.w[static_cast<size_t>(r)] = ww.alpha[static_cast<size_t>(r)] / total;
  return ww;
}

// Row r applied to the stencil {i-r, ..., i-r+k-1} of a window centered at index k-1.
inline double apply_row(const double* f, int k, int r, const std::array<double, 3>& base,
                        const std::array<double, 3>& slope, double eta) {
  const double* s = f + (k - 1 - r);
  double v = 0.0;
  for (int j = 0; j < k; ++j) v += (base[static_cast<size_t>(j)] + slope[static_cast<size_t>(j)] * eta) * s[j];
  return v;
}

inline double apply_poly(const double* f, int k, int r, const std::array<double, 3>& c) {
  const double* s = f + (k - 1 - r);
  double v = 0.0;
  for (int j = 0; j < k; ++j) v += c[static_cast<size_t>(j)] * s[j];
  return v;
}

inline void record(ReconStats* stats, const Eta& e) {
  if (!stats) return;
  ++stats->eta_evaluations;
  if (e.clamped) {
    ++stats->eta_clamped;
  } else if (e.limited) {
    ++stats->eta_limited;
  }
}

double reconstruct_plus(int k, Scheme scheme, const double* f, ReconStats* stats, const CoeffTables& tables, bool sw) {
  switch (scheme) {
    case Scheme::eno: {
      const int r = eno_select_raw(f, k);
      return apply_poly(f, k, r, tables.poly(k, r));
    }
    case Scheme::rbf_eno: {
      const int r = eno_select_raw(f, k);
      const Eta eta = adapted_eta_raw(k, f, sw);
      record(stats, eta);
      const CoeffRow& row = tables.rbf(k, r);
      return apply_row(f, k, r, row.base, row.slope, eta.value);
    }
    case Scheme::weno_js:
    case Scheme::rbf_weno_js: {
      const auto beta = beta_raw(k, f);
      const auto d = linear_weights_raw(k);
      const WenoWeights ww = weights_raw(k, d.data(), beta.data(), kWenoEpsilon);
      double eta = 0.0;
      if (scheme == Scheme::rbf_weno_js) {
        const Eta e = adapted_eta_raw(k, f, sw);
        record(stats, e);
        eta = e.value;
      }
      double v = 0.0;
      for (int r = 0; r < k; ++r) {
        const double sub = scheme == Scheme::weno_js
                               ? apply_poly(f, k, r, tables.poly(k, r))
                               : apply_row(f, k, r, tables.rbf(k, r).base, tables.rbf(k, r).slope, eta);
        v += ww.w[static_cast<size_t>(r)] * sub;
      }
      return v;
    }
  }
  return 0.0;
}

void check_window(int k, std::span<const double> window) {
  if (k != 2 && k != 3) throw std::invalid_argument("k must be 2 or 3");
  if (static_cast<int>(window.size()) != 2 * k - 1) {
    throw std::invalid_argument("window must hold 2k-1 values, got " + std::to_string(window.size()));
  }
}

}  // namespace

int eno_select(std::span<const double> window, int k) {
  check_window(k, window);
  return eno_select_raw(window.data(), k);
}

ReconCoeffs poly_coeffs(int k, int r, const CoeffTables& tables) {
  return {k, tables.poly(k, r)};
}

ReconCoeffs rbf_coeffs(int k, int r, double eta, const CoeffTables& tables) {
  const CoeffRow& row = tables.rbf(k, r);
  ReconCoeffs out{k, {}};
  for (size_t j = 0; j < static_cast<size_t>(k); ++j) out.c[j] = row.base[j] + row.slope[j] * eta;
  return out;
}

bool monotone_k2(double fm, double f0, double fp) { return monotone_k2_raw(fm, f0, fp); }

double eta_k2_raw(double fm, double f0, double fp) {
  return 2.0 * (-fm + 2.0 * f0 - fp) / (-fm + 5.0 * f0 + 2.0 * fp);
}

double eta_k3_raw(double fm, double f0, double fp, double fpp) {
  return (fm - 3.0 * f0 + 3.0 * fp - fpp) / (fm - 15.0 * f0 + 15.0 * fp - fpp);
}

Eta eta_k2(double fm, double f0, double fp, bool monotone_switch) { return eta_k2_impl(fm, f0, fp, monotone_switch); }

Eta eta_k3(double fm, double f0, double fp, double fpp, bool monotone_switch) {
  return eta_k3_impl(fm, f0, fp, fpp, monotone_switch);
}

Eta adapted_eta(int k, std::span<const double> window, bool monotone_switch) {
  check_window(k, window);
  return adapted_eta_raw(k, window.data(), monotone_switch);
}

std::array<double, 3> beta_js(int k, std::span<const double> window) {
  check_window(k, window);
  return beta_raw(k, window.data());
}

std::array<double, 3> linear_weights(int k) {
  if (k != 2 && k != 3) throw std::invalid_argument("k must be 2 or 3");
  return linear_weights_raw(k);
}

WenoWeights weno_weights(int k, std::span<const double> d, std::span<const double> beta, double eps_m) {
  if (k != 2 && k != 3) throw std::invalid_argument("k must be 2 or 3");
  if (static_cast<int>(d.size()) < k || static_cast<int>(beta.size()) < k) {
    throw std::invalid_argument("weno_weights: need k linear weights and k indicators");
  }
  if (!(eps_m > 0.0)) throw std::invalid_argument("weno_weights: eps_m must be positive");
  return weights_raw(k, d.data(), beta.data(), eps_m);
}

double reconstruct_interface(int k, Scheme scheme, std::span<const double> window, ReconSide side,
                             ReconStats* stats, const ReconOptions& opts) {
  check_window(k, window);
  const CoeffTables& tables = opts.tables ? *opts.tables : default_coeff_tables();
  const bool sw = opts.monotone_switch;
  if (side == ReconSide::plus) return reconstruct_plus(k, scheme, window.data(), stats, tables, sw);
  std::array<double, 5> mirrored{};
  std::reverse_copy(window.begin(), window.end(), mirrored.begin());
  return reconstruct_plus(k, scheme, mirrored.data(), stats, tables, sw);
}

}  // namespace rbfweno
