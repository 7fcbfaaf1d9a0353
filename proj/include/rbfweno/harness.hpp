#pragma once

// Driver layer shared by the CLI, the acceptance test and the benchmark: run
// configuration, single runs, convergence sweeps and CSV / JSON export.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rbfweno/oracle.hpp"
#include "rbfweno/problems.hpp"
#include "rbfweno/solver.hpp"

namespace rbfweno {

/// auto picks the switch per problem and order (see default_monotone_switch).
enum class MonotonePolicy { automatic, on, off };

EulerMode parse_euler_mode(std::string_view name);
std::string_view to_string(EulerMode m);
MonotonePolicy parse_monotone(std::string_view name);
std::string_view to_string(MonotonePolicy m);

struct RunConfig {
  ProblemId problem = ProblemId::advect_smooth;
  Scheme scheme = Scheme::rbf_weno_js;
  int k = 3;
  int n = 0;  // 0 selects the problem default
  int m = 0;  // 2D rows; 0 selects n / 4
  double cfl = 0.1;
  std::optional<double> t_end;
  EulerMode euler_mode = EulerMode::characteristic;
  MonotonePolicy monotone = MonotonePolicy::automatic;
  std::filesystem::path out = "out";
  std::vector<int> resolutions{10, 20, 40, 80, 160, 320};
  Exec exec = Exec::parallel;

  /// Throws ConfigError on anything the solver would reject.
  void validate() const;
  int resolved_n() const;
  int resolved_m() const;
  double resolved_t_end() const;
  SchemeConfig scheme_config() const;
  TimeConfig time_config() const;
};

/// Applies one `key = value` setting. Keys match the long CLI flags without dashes
/// (problem, scheme, k, n, m, cfl, t-end, euler-mode, monotone, out, resolutions).
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);
/// Reads `key = value` lines, `#` starts a comment. Throws ConfigError on bad lines.
void load_config_file(const std::filesystem::path& path, RunConfig& cfg);

struct Solution1D {
  Grid1D grid;
  Field1D u;
  RunStats stats;
  double seconds = 0.0;
};

struct Solution2D {
  Grid2D grid;
  Field2D u;
  RunStats stats;
  double seconds = 0.0;
};

/// Runs a 1D problem at resolution n (cfg.n is ignored). SolverError / StateError propagate.
Solution1D solve_1d(const RunConfig& cfg, int n);
/// Runs the double Mach reflection at cfg.resolved_n() x cfg.resolved_m().
Solution2D solve_dmr(const RunConfig& cfg);

/// Nodal errors against the exact solution at the final time.
Norms exact_error(const Solution1D& sol, ProblemId id);
/// (1/N) sum |e|, the unweighted mean absolute nodal error.
double mean_abs_error(const Solution1D& sol, ProblemId id);
/// Density errors against the exact Riemann solution (sod, lax).
Norms riemann_density_error(const Solution1D& sol, ProblemId id);

struct ConvergenceRow {
  int n = 0;
  Norms error;
  double l1_mean = 0.0;
  std::optional<Norms> order;
  std::optional<double> l1_mean_order;
  int steps = 0;
  double seconds = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
};

/// One run per cfg.resolutions. Throws ConfigError if the problem has no exact solution.
ConvergenceTable convergence_study(const RunConfig& cfg);

/// Scientific notation, 3 significant digits, uppercase E, no exponent padding: 6.51E-7.
std::string format_sci3(double v);
/// Observed orders with four decimals: 2.9897.
std::string format_order(double v);

/// Writes `text` to `path` through a temporary file and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& text);

/// Write the snapshot CSVs of a finished run into cfg.out and return their paths:
/// 1D gives one CSV, dmr a contour grid and the y = 0.5 slice.
std::vector<std::filesystem::path> write_solution(const RunConfig& cfg, const Solution1D& sol);
std::vector<std::filesystem::path> write_solution(const RunConfig& cfg, const Solution2D& sol);

/// Each command returns its process exit code: 0 success, 1 run or check failure.
/// Configuration problems surface as ConfigError for the caller to map to 2.
int cmd_run(const RunConfig& cfg, std::ostream& log);
int cmd_converge(const RunConfig& cfg, std::ostream& log);
int cmd_verify(const VerifyOptions& opts, std::ostream& log);

}  // namespace rbfweno
