#include "app.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_out.hpp"
#include "reactlin/dynamics.hpp"
#include "reactlin/error.hpp"
#include "report.hpp"

namespace reactlin::cli {

namespace {

bool use_color(const std::ostream& err) {
  if (std::getenv("REACTLIN_NO_COLOR") != nullptr) return false;
  return &err == &std::cerr && ::isatty(STDERR_FILENO) != 0;
}

int fail(std::ostream& err, int code, const std::string& msg) {
  if (use_color(err)) {
    err << "\033[31merror:\033[0m " << msg << '\n';
  } else {
    err << "error: " << msg << '\n';
  }
  return code;
}

Mat2 to_matrix(const std::vector<double>& v) { return {v[0], v[1], v[2], v[3]}; }

void add_matrix(CLI::App* cmd, std::vector<double>& storage) {
  cmd->add_option("matrix", storage, "a11 a12 a21 a22, row-major (put -- first if any is negative)")
      ->expected(4)
      ->required();
}

struct Format {
  bool json = false;
  bool csv = false;
};

void add_format(CLI::App* cmd, Format& f) {
  auto* j = cmd->add_flag("--json", f.json, "emit JSON");
  auto* c = cmd->add_flag("--csv", f.csv, "emit CSV (default)");
  j->excludes(c);
}

void write_trajectory(std::ostream& out, const Trajectory& tr, bool json) {
  if (json) {
    Json samples = Json::array();
    for (const Sample& s : tr.samples) {
      samples.push_back(Json::array({s.t, s.x1, s.x2, s.r(), s.theta}));
    }
    write_json(out, Json{{"schema_version", kSchemaVersion},
                         {"command", "trajectory"},
                         {"method", to_string(tr.method)},
                         {"step", tr.step},
                         {"columns", Json::array({"t", "x1", "x2", "r", "theta_unwrapped"})},
                         {"samples", samples}});
    return;
  }
  write_csv_header(out, {"t", "x1", "x2", "r", "theta_unwrapped"});
  for (const Sample& s : tr.samples) write_csv_row(out, {s.t, s.x1, s.x2, s.r(), s.theta});
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Radial/tangential analysis of planar linear systems X' = A X", "reactlin"};
  app.require_subcommand(1);

  // analyze
  std::vector<double> m_analyze;
  AnalyzeOptions analyze_opts;
  bool analyze_json = true;
  auto* analyze = app.add_subcommand("analyze", "full JSON report for one matrix");
  add_matrix(analyze, m_analyze);
  analyze->add_flag("--strict", analyze_opts.strict,
                    "complex eigenvalues: report needs_numeric instead of using the sweep");
  analyze->add_flag("--experimental-complex", analyze_opts.experimental_complex,
                    "complex eigenvalues: principal-branch closed form, checked against the sweep");
  analyze->add_option("--step", analyze_opts.step, "numeric sweep step (0 = automatic)");
  analyze->add_flag("--json", analyze_json, "JSON output (the only format)");

  // portrait
  std::vector<double> m_portrait;
  int portrait_n = 360;
  Format portrait_fmt;
  auto* portrait_cmd = app.add_subcommand("portrait", "R, T and the unit-circle field on [0, pi)");
  add_matrix(portrait_cmd, m_portrait);
  portrait_cmd->add_option("--n", portrait_n, "number of angles")->capture_default_str();
  add_format(portrait_cmd, portrait_fmt);

  // trajectory
  std::vector<double> m_traj;
  std::vector<double> traj_x0{1.0, 0.0};
  double traj_step = 1e-3;
  double traj_t_end = 10.0;
  std::optional<double> traj_k;
  Format traj_fmt;
  auto* traj = app.add_subcommand("trajectory", "RK4 trajectory, optionally in the rotating frame");
  add_matrix(traj, m_traj);
  traj->add_option("--x0", traj_x0, "initial point")->expected(2)->capture_default_str();
  traj->add_option("--step", traj_step)->capture_default_str();
  traj->add_option("--t-end", traj_t_end)->capture_default_str();
  traj->add_option("--k", traj_k, "rotation rate; integrates M_{kt}^-1 A M_{kt}");
  add_format(traj, traj_fmt);

  // sweep-k
  std::vector<double> m_sweep;
  SweepOptions sweep_opts;
  std::optional<double> k_min;
  std::optional<double> k_max;
  std::vector<double> sweep_x0{1.0, 0.0};
  std::string summary_path;
  Format sweep_fmt;
  auto* sweep = app.add_subcommand("sweep-k", "growth/decay of the rotating system over a k grid");
  add_matrix(sweep, m_sweep);
  sweep->add_option("--k-min", k_min, "default: window lower end minus its width");
  sweep->add_option("--k-max", k_max, "default: window upper end plus its width");
  sweep->add_option("--n", sweep_opts.n, "grid points")->capture_default_str();
  sweep->add_option("--step", sweep_opts.step)->capture_default_str();
  sweep->add_option("--t-end", sweep_opts.t_end)->capture_default_str();
  sweep->add_option("--x0", sweep_x0)->expected(2)->capture_default_str();
  sweep->add_option("--threads", sweep_opts.threads, "0 = all cores")->capture_default_str();
  sweep->add_option("--summary", summary_path,
                    "write the JSON summary here (default: standard error)");
  add_format(sweep, sweep_fmt);

  // synthesize
  SynthesisRequest synth_req;
  double synth_delta_r_override = 0.0;
  auto* synth = app.add_subcommand("synthesize", "build a matrix with prescribed features");
  synth->require_subcommand(1);
  auto* s_deltas = synth->add_subcommand("deltas", "from reactivity radius, eigen separation, rho");
  s_deltas->add_option("--delta-r", synth_req.delta_R)->required();
  s_deltas->add_option("--delta-t", synth_req.delta_T)->required();
  s_deltas->add_option("--rho", synth_req.rho)->required();
  auto* s_eigval = synth->add_subcommand("eigenvalues", "reactive attractor with given eigenvalues");
  s_eigval->add_option("--lambda1", synth_req.lambda1)->required();
  s_eigval->add_option("--lambda2", synth_req.lambda2)->required();
  s_eigval->add_option("--rho", synth_req.rho)->required();
  auto* s_eigvec =
      synth->add_subcommand("eigenvectors", "reactive attractor with given eigendirections");
  s_eigvec->add_option("--theta1", synth_req.theta1)->required();
  s_eigvec->add_option("--theta2", synth_req.theta2)->required();
  s_eigvec->add_option("--rho", synth_req.rho)->required();
  auto* dr_opt = s_eigvec->add_option("--delta-r", synth_delta_r_override,
                                      "override the reactivity radius");

  // selftest
  std::uint64_t seed = 1;
  int count = 1000;
  auto* self = app.add_subcommand("selftest", "seeded randomized identity checks");
  self->add_option("--seed", seed)->capture_default_str();
  self->add_option("--count", count)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    return fail(err, kExitUsage, e.what());
  }

  try {
    if (*analyze) {
      write_json(out, analyze_report(to_matrix(m_analyze), analyze_opts));
    } else if (*portrait_cmd) {
      const auto rows = portrait(to_matrix(m_portrait), portrait_n);
      if (portrait_fmt.json) {
        Json samples = Json::array();
        for (const auto& r : rows) samples.push_back(Json::array({r.theta, r.R, r.T, r.vx, r.vy}));
        write_json(out, Json{{"schema_version", kSchemaVersion},
                             {"command", "portrait"},
                             {"matrix", matrix_json(to_matrix(m_portrait))},
                             {"columns", Json::array({"theta", "R", "T", "vx", "vy"})},
                             {"samples", samples}});
      } else {
        write_csv_header(out, {"theta", "R", "T", "vx", "vy"});
        for (const auto& r : rows) write_csv_row(out, {r.theta, r.R, r.T, r.vx, r.vy});
      }
    } else if (*traj) {
      const Mat2 a = to_matrix(m_traj);
      const Vec2 x0{traj_x0[0], traj_x0[1]};
      const Trajectory tr = traj_k ? integrate_nonaut({a, *traj_k}, x0, traj_step, traj_t_end)
                                   : integrate_linear(a, x0, traj_step, traj_t_end);
      write_trajectory(out, tr, traj_fmt.json);
    } else if (*sweep) {
      const Mat2 a = to_matrix(m_sweep);
      const KWindow w = repulsion_window(a);
      const double width = w.upper - w.lower;
      sweep_opts.k_min = k_min.value_or(w.lower - width);
      sweep_opts.k_max = k_max.value_or(w.upper + width);
      sweep_opts.x0 = {sweep_x0[0], sweep_x0[1]};
      const SweepResult res = sweep_k(a, sweep_opts);
      Json summary = sweep_summary(res, sweep_opts);
      if (sweep_fmt.json) {
        summary["rows"] = sweep_rows(res);
        write_json(out, summary);
      } else {
        out << "k,log_slope,classification\n";
        for (const SweepRow& r : res.rows) {
          out << format_number(r.k) << ',' << format_number(r.log_slope) << ','
              << to_string(r.growth) << '\n';
        }
        if (!summary_path.empty()) {
          std::ofstream f(summary_path, std::ios::binary);
          if (!f) return fail(err, kExitUsage, "cannot open " + summary_path);
          write_json(f, summary);
        } else {
          write_json(err, summary);
        }
      }
    } else if (*synth) {
      if (*s_deltas) synth_req.mode = SynthesisMode::Deltas;
      if (*s_eigval) synth_req.mode = SynthesisMode::Eigenvalues;
      if (*s_eigvec) {
        synth_req.mode = SynthesisMode::Eigenvectors;
        if (dr_opt->count() > 0) synth_req.delta_R_override = synth_delta_r_override;
      }
      write_json(out, synthesis_report(synth_req));
    } else if (*self) {
      const SelftestResult r = selftest(seed, count);
      write_json(out, r.report);
      if (!r.passed) return fail(err, kExitNumeric, "selftest found a check over tolerance");
    }
  } catch (const InvalidInput& e) {
    return fail(err, kExitUsage, e.what());
  } catch (const Inapplicable& e) {
    return fail(err, kExitInapplicable, e.what());
  } catch (const NeedsNumeric& e) {
    return fail(err, kExitInapplicable, e.what());
  } catch (const NumericFailure& e) {
    return fail(err, kExitNumeric, e.what());
  } catch (const std::exception& e) {
    return fail(err, kExitNumeric, e.what());
  }
  out.flush();
  return kExitOk;
}

}  // namespace reactlin::cli
