#include "rbfweno/harness.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace rbfweno {

namespace {

using Clock = std::chrono::steady_clock;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(std::string_view key, std::string_view text) {
  T v{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("invalid value '" + std::string(text) + "' for " + std::string(key));
  }
  return v;
}

std::vector<int> parse_resolutions(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    if (!item.empty()) out.push_back(parse_number<int>("resolutions", item));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

int default_n(ProblemId id) {
  switch (id) {
    case ProblemId::sod: return 400;
    case ProblemId::lax: return 200;
    case ProblemId::dmr: return 160;
    default: return 160;
  }
}

std::string csv_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

nlohmann::json run_metadata(const RunConfig& cfg, const RunStats& st, double seconds) {
  const SchemeConfig sc = cfg.scheme_config();
  return {
      {"problem", problem_spec(cfg.problem).name},
      {"scheme", to_string(cfg.scheme)},
      {"k", cfg.k},
      {"n", cfg.resolved_n()},
      {"cfl", cfg.cfl},
      {"t_end", cfg.resolved_t_end()},
      {"euler_mode", to_string(cfg.euler_mode)},
      {"monotone_policy", to_string(cfg.monotone)},
      {"monotone_switch", sc.monotone_switch},
      {"steps", st.steps},
      {"t_final", st.t_final},
      {"dt_min", st.dt_min},
      {"dt_max", st.dt_max},
      {"eta_evaluations", st.recon.eta_evaluations},
      {"eta_limited", st.recon.eta_limited},
      {"eta_clamped", st.recon.eta_clamped},
      {"wall_time_s", seconds},
  };
}

std::string solution_csv_1d(const Solution1D& sol, ProblemId id) {
  const ProblemSpec& spec = problem_spec(id);
  std::ostringstream os;
  if (spec.equation == Equation::euler) {
    os << "x,rho,u,p\n";
    for (int i = 0; i < sol.grid.n; ++i) {
      const Primitive w = to_primitive(sol.u.cell(i), Eos{});
      os << csv_number(sol.grid.x(i)) << ',' << csv_number(w.rho) << ',' << csv_number(w.u) << ','
         << csv_number(w.p) << '\n';
    }
    return os.str();
  }
  const bool exact = spec.has_exact;
  os << (exact ? "x,u,exact\n" : "x,u\n");
  for (int i = 0; i < sol.grid.n; ++i) {
    os << csv_number(sol.grid.x(i)) << ',' << csv_number(sol.u(i));
    if (exact) os << ',' << csv_number(exact_solution(id, sol.grid.x(i), sol.stats.t_final));
    os << '\n';
  }
  return os.str();
}

// (i, j, x, y, rho) per cell; the index columns carry the grid dimensions.
std::string contour_csv(const Solution2D& sol) {
  std::ostringstream os;
  os << "i,j,x,y,rho\n";
  for (int j = 0; j < sol.grid.ny; ++j) {
    for (int i = 0; i < sol.grid.nx; ++i) {
      os << i << ',' << j << ',' << csv_number(sol.grid.x(i)) << ',' << csv_number(sol.grid.y(j)) << ','
         << csv_number(sol.u(i, j, 0)) << '\n';
    }
  }
  return os.str();
}

// Linear interpolation between the two rows bracketing y = 0.5.
std::string slice_csv(const Solution2D& sol, double y) {
  const Grid2D& g = sol.grid;
  const double s = (y - g.y0) / g.dy() - 0.5;
  const int j0 = std::clamp(static_cast<int>(std::floor(s)), 0, g.ny - 2);
  const double t = std::clamp(s - j0, 0.0, 1.0);
  std::ostringstream os;
  os << "x,rho,u,v,p\n";
  for (int i = 0; i < g.nx; ++i) {
    std::array<double, 4> U{};
    for (int v = 0; v < 4; ++v) U[static_cast<size_t>(v)] = (1.0 - t) * sol.u(i, j0, v) + t * sol.u(i, j0 + 1, v);
    const Primitive w = to_primitive(U, Eos{});
    os << csv_number(g.x(i)) << ',' << csv_number(w.rho) << ',' << csv_number(w.u) << ',' << csv_number(w.v) << ','
       << csv_number(w.p) << '\n';
  }
  return os.str();
}

std::string stem(const RunConfig& cfg) {
  std::string s = std::string(problem_spec(cfg.problem).name) + "_" + std::string(to_string(cfg.scheme)) + "_k" +
                  std::to_string(cfg.k) + "_n" + std::to_string(cfg.resolved_n());
  if (problem_spec(cfg.problem).dims == 2) s += "_m" + std::to_string(cfg.resolved_m());
  return s;
}

}  // namespace

EulerMode parse_euler_mode(std::string_view name) {
  if (name == "characteristic") return EulerMode::characteristic;
  if (name == "componentwise") return EulerMode::componentwise;
  throw ConfigError("unknown euler mode '" + std::string(name) + "' (characteristic | componentwise)");
}

std::string_view to_string(EulerMode m) { return m == EulerMode::characteristic ? "characteristic" : "componentwise"; }

MonotonePolicy parse_monotone(std::string_view name) {
  if (name == "auto") return MonotonePolicy::automatic;
  if (name == "on") return MonotonePolicy::on;
  if (name == "off") return MonotonePolicy::off;
  throw ConfigError("unknown monotone policy '" + std::string(name) + "' (auto | on | off)");
}

std::string_view to_string(MonotonePolicy m) {
  switch (m) {
    case MonotonePolicy::automatic: return "auto";
    case MonotonePolicy::on: return "on";
    case MonotonePolicy::off: return "off";
  }
  return "auto";
}

void RunConfig::validate() const {
  scheme_config().validate();
  time_config().validate();
  const ProblemSpec& spec = problem_spec(problem);
  if (resolved_n() < 2 * k) throw ConfigError("n must be at least 2k");
  if (spec.dims == 2) {
    if (resolved_m() < 2 * k) throw ConfigError("m must be at least 2k");
    if (resolved_n() != 4 * resolved_m()) throw ConfigError("dmr needs n == 4 m");
  }
  if (t_end && !(*t_end > 0.0)) throw ConfigError("t-end must be positive");
  for (int r : resolutions) {
    if (r < 2 * k) throw ConfigError("every resolution must be at least 2k");
  }
}

int RunConfig::resolved_n() const { return n > 0 ? n : default_n(problem); }
int RunConfig::resolved_m() const { return m > 0 ? m : resolved_n() / 4; }
double RunConfig::resolved_t_end() const { return t_end ? *t_end : problem_spec(problem).t_end; }

SchemeConfig RunConfig::scheme_config() const {
  bool sw = true;
  if (monotone == MonotonePolicy::off) sw = false;
  if (monotone == MonotonePolicy::automatic) sw = default_monotone_switch(problem, k);
  return {k, scheme, euler_mode, sw};
}

TimeConfig RunConfig::time_config() const { return {cfl, resolved_t_end(), std::nullopt}; }

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "problem") {
    cfg.problem = parse_problem(value);
  } else if (key == "scheme") {
    cfg.scheme = parse_scheme(value);
  } else if (key == "k") {
    cfg.k = parse_number<int>(key, value);
  } else if (key == "n") {
    cfg.n = parse_number<int>(key, value);
  } else if (key == "m") {
    cfg.m = parse_number<int>(key, value);
  } else if (key == "cfl") {
    cfg.cfl = parse_number<double>(key, value);
  } else if (key == "t-end" || key == "t_end") {
    cfg.t_end = parse_number<double>(key, value);
  } else if (key == "euler-mode" || key == "euler_mode") {
    cfg.euler_mode = parse_euler_mode(value);
  } else if (key == "monotone") {
    cfg.monotone = parse_monotone(value);
  } else if (key == "out") {
    cfg.out = std::string(value);
  } else if (key == "resolutions") {
    cfg.resolutions = parse_resolutions(value);
  } else {
    throw ConfigError("unknown setting '" + std::string(key) + "'");
  }
}

void load_config_file(const std::filesystem::path& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
    }
    apply_setting(cfg, s.substr(0, eq), s.substr(eq + 1));
  }
}

Solution1D solve_1d(const RunConfig& cfg, int n) {
  const ProblemSpec& spec = problem_spec(cfg.problem);
  Solution1D sol{problem_grid(cfg.problem, n), {}, {}, 0.0};
  sol.u = init_1d(cfg.problem, sol.grid);
  const auto t0 = Clock::now();
  sol.stats = advance(sol.u, sol.grid, Physics{spec.equation, {}}, boundary_1d(cfg.problem), cfg.scheme_config(),
                      cfg.time_config(), cfg.exec);
  sol.seconds = seconds_since(t0);
  return sol;
}

Solution2D solve_dmr(const RunConfig& cfg) {
  const ProblemSpec& spec = problem_spec(ProblemId::dmr);
  const Grid2D grid(spec.x0, spec.x1, cfg.resolved_n(), spec.y0, spec.y1, cfg.resolved_m());
  DmrSetup setup = dmr_setup(grid);
  Solution2D sol{grid, std::move(setup.field), {}, 0.0};
  const auto t0 = Clock::now();
  sol.stats = advance(sol.u, grid, Physics{Equation::euler, {}}, setup.boundary, cfg.scheme_config(),
                      cfg.time_config(), cfg.exec);
  sol.seconds = seconds_since(t0);
  return sol;
}

Norms exact_error(const Solution1D& sol, ProblemId id) {
  std::vector<double> ex(static_cast<size_t>(sol.grid.n));
  for (int i = 0; i < sol.grid.n; ++i) ex[static_cast<size_t>(i)] = exact_solution(id, sol.grid.x(i), sol.stats.t_final);
  return error_norms(sol.u.interior(0), ex, sol.grid.dx());
}

double mean_abs_error(const Solution1D& sol, ProblemId id) {
  double s = 0.0;
  for (int i = 0; i < sol.grid.n; ++i) s += std::abs(sol.u(i) - exact_solution(id, sol.grid.x(i), sol.stats.t_final));
  return s / sol.grid.n;
}

Norms riemann_density_error(const Solution1D& sol, ProblemId id) {
  const RiemannSolution rs = riemann_reference(id);
  const double t = sol.stats.t_final;
  std::vector<double> ex(static_cast<size_t>(sol.grid.n));
  for (int i = 0; i < sol.grid.n; ++i) ex[static_cast<size_t>(i)] = rs.sample(sol.grid.x(i) / t).rho;
  return error_norms(sol.u.interior(0), ex, sol.grid.dx());
}

ConvergenceTable convergence_study(const RunConfig& cfg) {
  const ProblemSpec& spec = problem_spec(cfg.problem);
  if (!spec.has_exact) throw ConfigError(std::string(spec.name) + " has no exact solution for an error table");
  if (cfg.problem == ProblemId::burgers_sine && cfg.resolved_t_end() > kBurgersShockTime) {
    throw ConfigError("burgers-sine error tables need t-end <= 1/pi (before the shock forms)");
  }
  if (cfg.resolutions.empty()) throw ConfigError("no resolutions given");
  ConvergenceTable table;
  for (int n : cfg.resolutions) {
    const Solution1D sol = solve_1d(cfg, n);
    ConvergenceRow row{n, exact_error(sol, cfg.problem), mean_abs_error(sol, cfg.problem), {}, {}, sol.stats.steps,
                       sol.seconds};
    if (!table.rows.empty() && table.rows.back().n * 2 == n) {
      const ConvergenceRow& c = table.rows.back();
      row.order = Norms{observed_order(c.error.l1, row.error.l1), observed_order(c.error.l2, row.error.l2),
                        observed_order(c.error.linf, row.error.linf)};
      row.l1_mean_order = observed_order(c.l1_mean, row.l1_mean);
    }
    table.rows.push_back(row);
  }
  return table;
}

std::string format_sci3(double v) {
  if (!std::isfinite(v)) return v != v ? "NaN" : (v > 0 ? "Inf" : "-Inf");
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2E", v);
  std::string s = buf;
  const auto e = s.find('E');
  std::string mant = s.substr(0, e);
  const char sign = s[e + 1];
  std::string digits = s.substr(e + 2);
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  return mant + "E" + (sign == '-' ? "-" : "") + digits;
}

std::string format_order(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << text;
    if (!f.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::vector<std::filesystem::path> write_solution(const RunConfig& cfg, const Solution1D& sol) {
  const auto csv = cfg.out / (stem(cfg) + ".csv");
  write_atomic(csv, solution_csv_1d(sol, cfg.problem));
  return {csv};
}

std::vector<std::filesystem::path> write_solution(const RunConfig& cfg, const Solution2D& sol) {
  const auto contour = cfg.out / (stem(cfg) + "_contour.csv");
  const auto slice = cfg.out / (stem(cfg) + "_slice_y0.5.csv");
  write_atomic(contour, contour_csv(sol));
  write_atomic(slice, slice_csv(sol, 0.5));
  return {contour, slice};
}

int cmd_run(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const ProblemSpec& spec = problem_spec(cfg.problem);
  const std::string base = stem(cfg);
  nlohmann::json meta;
  int code = 0;
  const auto t0 = Clock::now();
  try {
    if (spec.dims == 1) {
      const Solution1D sol = solve_1d(cfg, cfg.resolved_n());
      const auto files = write_solution(cfg, sol);
      meta = run_metadata(cfg, sol.stats, sol.seconds);
      meta["files"] = {files[0].filename().string()};
      if (spec.has_exact) {
        const Norms e = exact_error(sol, cfg.problem);
        meta["error"] = {{"l1", e.l1}, {"l2", e.l2}, {"linf", e.linf}, {"l1_mean", mean_abs_error(sol, cfg.problem)}};
      }
      log << "wrote " << files[0].string() << " (" << sol.stats.steps << " steps)\n";
    } else {
      const Solution2D sol = solve_dmr(cfg);
      const auto files = write_solution(cfg, sol);
      meta = run_metadata(cfg, sol.stats, sol.seconds);
      meta["m"] = cfg.resolved_m();
      meta["files"] = {files[0].filename().string(), files[1].filename().string()};
      log << "wrote " << files[0].string() << " and " << files[1].string() << " (" << sol.stats.steps << " steps)\n";
    }
    meta["status"] = "ok";
  } catch (const SolverError& e) {
    meta = run_metadata(cfg, RunStats{}, seconds_since(t0));
    meta["status"] = "aborted";
    meta["message"] = e.what();
    code = 1;
  } catch (const StateError& e) {
    meta = run_metadata(cfg, RunStats{}, seconds_since(t0));
    meta["status"] = "aborted";
    meta["message"] = e.what();
    code = 1;
  }
  write_atomic(cfg.out / (base + ".json"), meta.dump(2) + "\n");
  if (code != 0) log << "run aborted: " << meta["message"].get<std::string>() << "\n";
  return code;
}

int cmd_converge(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  const ConvergenceTable table = convergence_study(cfg);
  std::ostringstream csv;
  csv << "N,L1,L1_order,L2,L2_order,Linf,Linf_order,L1_mean,L1_mean_order\n";
  char line[160];
  std::snprintf(line, sizeof line, "%6s %10s %8s %10s %8s %10s %8s %10s %8s\n", "N", "L1", "order", "L2", "order",
                "Linf", "order", "L1 mean", "order");
  log << line;
  for (const auto& r : table.rows) {
    auto ord = [](const std::optional<double>& o) { return o ? format_order(*o) : std::string(); };
    const std::optional<double> o1 = r.order ? std::optional(r.order->l1) : std::nullopt;
    const std::optional<double> o2 = r.order ? std::optional(r.order->l2) : std::nullopt;
    const std::optional<double> oi = r.order ? std::optional(r.order->linf) : std::nullopt;
    csv << r.n << ',' << format_sci3(r.error.l1) << ',' << ord(o1) << ',' << format_sci3(r.error.l2) << ',' << ord(o2)
        << ',' << format_sci3(r.error.linf) << ',' << ord(oi) << ',' << format_sci3(r.l1_mean) << ','
        << ord(r.l1_mean_order) << '\n';
    std::snprintf(line, sizeof line, "%6d %10s %8s %10s %8s %10s %8s %10s %8s\n", r.n, format_sci3(r.error.l1).c_str(),
                  ord(o1).c_str(), format_sci3(r.error.l2).c_str(), ord(o2).c_str(), format_sci3(r.error.linf).c_str(),
                  ord(oi).c_str(), format_sci3(r.l1_mean).c_str(), ord(r.l1_mean_order).c_str());
    log << line;
  }
  const std::string base = std::string(problem_spec(cfg.problem).name) + "_" + std::string(to_string(cfg.scheme)) +
                           "_k" + std::to_string(cfg.k) + "_convergence";
  write_atomic(cfg.out / (base + ".csv"), csv.str());
  nlohmann::json meta = {
      {"problem", problem_spec(cfg.problem).name},
      {"scheme", to_string(cfg.scheme)},
      {"k", cfg.k},
      {"cfl", cfg.cfl},
      {"t_end", cfg.resolved_t_end()},
      {"monotone_switch", cfg.scheme_config().monotone_switch},
      {"resolutions", cfg.resolutions},
  };
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : table.rows) rows.push_back({{"n", r.n}, {"steps", r.steps}, {"wall_time_s", r.seconds}});
  meta["runs"] = rows;
  write_atomic(cfg.out / (base + ".json"), meta.dump(2) + "\n");
  log << "wrote " << (cfg.out / (base + ".csv")).string() << "\n";
  return 0;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& log) {
  const auto results = run_verification(opts);
  int failed = 0;
  for (const auto& r : results) {
    log << (r.pass ? "PASS" : "FAIL") << " | " << r.name << " | " << r.detail << "\n";
    failed += r.pass ? 0 : 1;
  }
  log << "checks: " << results.size() << ", passed: " << results.size() - static_cast<size_t>(failed)
      << ", failed: " << failed << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace rbfweno
