// One PASS / FAIL line per acceptance criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "rbfweno/harness.hpp"

using namespace rbfweno;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [x]");
  }
};

std::string fmt(const char* f, double a) {
  char b[64];
  std::snprintf(b, sizeof b, f, a);
  return b;
}

bool in(double v, double lo, double hi) { return v >= lo && v <= hi; }

RunConfig smooth(ProblemId id, Scheme s, int k, double cfl = 0.1) {
  RunConfig c;
  c.problem = id;
  c.scheme = s;
  c.k = k;
  c.cfl = cfl;
  return c;
}

// Finest-pair L1 order and finest L1 of a default 10..320 sweep.
struct Sweep {
  double order, l1, l1_mean;
};

Sweep sweep(const RunConfig& cfg) {
  const auto t = convergence_study(cfg);
  const auto& last = t.rows.back();
  return {last.order ? last.order->l1 : 0.0, last.error.l1, last.l1_mean};
}

std::string describe(const char* name, const Sweep& s) {
  return std::string(name) + " order " + fmt("%.3f", s.order) + ", L1 " + format_sci3(s.l1) + " (mean " +
         format_sci3(s.l1_mean) + ")";
}

Outcome criterion1() {
  Outcome o;
  const Sweep rbf = sweep(smooth(ProblemId::advect_smooth, Scheme::rbf_eno, 2));
  const Sweep eno = sweep(smooth(ProblemId::advect_smooth, Scheme::eno, 2));
  const Sweep rw = sweep(smooth(ProblemId::advect_smooth, Scheme::rbf_weno_js, 2));
  o.require(rbf.l1 <= 3 * 6.51e-7 && rbf.l1 >= 6.51e-7 / 3, "RBF-ENO L1 " + format_sci3(rbf.l1) + " vs 6.51E-7");
  o.require(in(rbf.order, 2.8, 3.1), describe("RBF-ENO", rbf));
  o.require(in(eno.order, 1.7, 2.1), describe("ENO", eno));
  o.require(in(rw.order, 2.8, 3.1), describe("RBF-WENO-JS", rw));
  return o;
}

// WENO orders sit near the RK3 temporal floor; C = 0.05 is allowed when C = 0.1 misses.
void weno_k3(Outcome& o, Scheme s, const char* name, double lo, double hi, double ref) {
  std::string trail;
  for (double cfl : {0.1, 0.05}) {
    const Sweep w = sweep(smooth(ProblemId::advect_smooth, s, 3, cfl));
    const bool ok = in(w.order, lo, hi) && w.l1 <= 5 * ref && w.l1 >= ref / 5;
    trail += (trail.empty() ? "" : ", then ") + describe(name, w) + fmt(" at C=%.2f", cfl);
    if (ok) break;
    if (cfl == 0.05) {
      o.require(false, trail);
      return;
    }
  }
  o.require(true, trail);
}

Outcome criterion2() {
  Outcome o;
  weno_k3(o, Scheme::weno_js, "WENO-JS", 4.7, 5.2, 3.80e-10);
  weno_k3(o, Scheme::rbf_weno_js, "RBF-WENO-JS", 4.8, 5.3, 7.39e-11);
  const Sweep rbf = sweep(smooth(ProblemId::advect_smooth, Scheme::rbf_eno, 3));
  const Sweep eno = sweep(smooth(ProblemId::advect_smooth, Scheme::eno, 3));
  o.require(in(rbf.order, 3.8, 4.3), describe("RBF-ENO", rbf));
  o.require(in(eno.order, 2.9, 3.1), describe("ENO", eno));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const Sweep rbf = sweep(smooth(ProblemId::burgers_sine, Scheme::rbf_eno, 2));
  const Sweep rw = sweep(smooth(ProblemId::burgers_sine, Scheme::rbf_weno_js, 3));
  o.require(in(rbf.order, 2.9, 3.3), describe("RBF-ENO k=2", rbf));
  o.require(in(rw.order, 4.8, 5.3) && rw.l1 <= 5 * 1.46e-8 && rw.l1 >= 1.46e-8 / 5, describe("RBF-WENO-JS k=3", rw));
  return o;
}

RunConfig shock_tube(ProblemId id, Scheme s, int k, int n) {
  RunConfig c;
  c.problem = id;
  c.scheme = s;
  c.k = k;
  c.n = n;
  return c;
}

std::pair<double, double> range_of(const Field1D& u, int n, const std::function<double(std::span<const double>)>& f) {
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < n; ++i) {
    const double v = f(u.cell(i));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

Outcome criterion4() {
  Outcome o;
  // Exact density range is [0.125, 1]; allow 2% of that range as overshoot.
  const double lo = 0.125, hi = 1.0, slack = 0.02 * (hi - lo);
  // Figure setups: N = 400 for k = 2 (gated on L1 as well) and N = 600 for k = 3.
  for (const auto& [k, n] : {std::pair{2, 400}, std::pair{3, 600}}) {
    double l1_eno = 0.0, l1_rbfw = 0.0;
    for (Scheme s : {Scheme::eno, Scheme::rbf_eno, Scheme::weno_js, Scheme::rbf_weno_js}) {
      const Solution1D sol = solve_1d(shock_tube(ProblemId::sod, s, k, n), n);
      const auto [rmin, rmax] = range_of(sol.u, sol.grid.n, [](std::span<const double> U) { return U[0]; });
      const double l1 = riemann_density_error(sol, ProblemId::sod).l1;
      if (s == Scheme::eno) l1_eno = l1;
      if (s == Scheme::rbf_weno_js) l1_rbfw = l1;
      std::ostringstream d;
      d << to_string(s) << " k=" << k << " N=" << n << " rho [" << fmt("%.4f", rmin) << ", " << fmt("%.4f", rmax)
        << "], L1 " << format_sci3(l1);
      o.require(sol.stats.t_final == 0.2 && in(rmin, 0.1, 1.05) && in(rmax, 0.1, 1.05) && rmin >= lo - slack &&
                    rmax <= hi + slack,
                d.str());
    }
    if (k == 2) o.require(l1_rbfw <= l1_eno, "k=2 RBF-WENO-JS L1 <= ENO L1");
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Eos eos{};
  for (int k : {2, 3}) {
    for (Scheme s : {Scheme::eno, Scheme::rbf_eno, Scheme::weno_js, Scheme::rbf_weno_js}) {
      try {
        const Solution1D sol = solve_1d(shock_tube(ProblemId::lax, s, k, 200), 200);
        const auto [rmin, rmax] = range_of(sol.u, sol.grid.n, [](std::span<const double> U) { return U[0]; });
        const auto [pmin, pmax] =
            range_of(sol.u, sol.grid.n, [&](std::span<const double> U) { return pressure(U, eos); });
        std::ostringstream d;
        d << to_string(s) << " k=" << k << " rho [" << fmt("%.3f", rmin) << ", " << fmt("%.3f", rmax) << "], p_min "
          << fmt("%.3f", pmin);
        o.require(sol.stats.t_final == 0.13 && in(rmin, 0.3, 1.4) && in(rmax, 0.3, 1.4) && pmin > 0.0 &&
                      std::isfinite(pmax),
                  d.str());
      } catch (const std::exception& e) {
        o.require(false, std::string(to_string(s)) + " k=" + std::to_string(k) + ": " + e.what());
      }
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const Eos eos{};
  const auto dir = std::filesystem::current_path() / "acceptance_out";
  for (Scheme s : {Scheme::weno_js, Scheme::rbf_weno_js}) {
    RunConfig c;
    c.problem = ProblemId::dmr;
    c.scheme = s;
    c.k = 3;
    c.n = 160;
    c.m = 40;
    c.euler_mode = EulerMode::characteristic;
    c.out = dir;
    try {
      const auto t0 = Clock::now();
      const Solution2D sol = solve_dmr(c);
      double rmin = 1e300, pmin = 1e300;
      bool finite = true;
      for (int j = 0; j < sol.grid.ny; ++j) {
        for (int i = 0; i < sol.grid.nx; ++i) {
          for (int v = 0; v < 4; ++v) finite = finite && std::isfinite(sol.u(i, j, v));
          rmin = std::min(rmin, sol.u(i, j, 0));
          pmin = std::min(pmin, pressure(sol.u.cell(i, j), eos));
        }
      }
      const auto files = write_solution(c, sol);
      const bool slice = files.size() == 2 && std::filesystem::file_size(files[1]) > 0;
      std::ostringstream d;
      d << to_string(s) << " " << sol.stats.steps << " steps, rho_min " << fmt("%.4f", rmin) << ", p_min "
        << fmt("%.4f", pmin) << ", " << fmt("%.0f s", std::chrono::duration<double>(Clock::now() - t0).count());
      o.require(finite && rmin > 0.0 && pmin > 0.0 && sol.stats.t_final == 0.2 && slice, d.str());
    } catch (const std::exception& e) {
      o.require(false, std::string(to_string(s)) + ": " + e.what());
    }
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto results = run_verification();
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass) {
      ++failed;
      o.require(false, r.name);
    }
  }
  o.require(results.size() >= 20 && failed == 0, std::to_string(results.size()) + " checks, " +
                                                      std::to_string(failed) + " failed");
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"1 advection k=2 orders and error", criterion1},
      {"2 advection k=3 orders and errors", criterion2},
      {"3 burgers pre-shock orders", criterion3},
      {"4 sod N=400 k=2 / N=600 k=3 non-oscillatory", criterion4},
      {"5 lax N=200 k=2,3 positivity", criterion5},
      {"6 double Mach 160x40 k=3", criterion6},
      {"7 property suite", criterion7},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name << " (" << fmt("%.1f s", secs) << ") | "
              << o.detail << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures;
}
