#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json_out.hpp"
#include "reactlin/dynamics.hpp"
#include "reactlin/rt_core.hpp"

namespace reactlin::cli {

inline constexpr const char* kSchemaVersion = "1";

struct AnalyzeOptions {
  bool strict = false;
  bool experimental_complex = false;
  double step = 0.0;  // numeric sweep step, 0 = automatic
};

Json matrix_json(const Mat2& a);
Json analyze_report(const Mat2& a, const AnalyzeOptions& opts);

struct PortraitRow {
  double theta, R, T, vx, vy;
};
std::vector<PortraitRow> portrait(const Mat2& a, int n_theta);

struct SweepOptions {
  double k_min = 0.0;
  double k_max = 0.0;
  int n = 161;
  double step = 1e-3;
  double t_end = 50.0;
  Vec2 x0{1.0, 0.0};
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SweepRow {
  double k = 0.0;
  double log_slope = 0.0;
  Growth growth = Growth::Marginal;
};

struct SweepResult {
  KWindow analytic;
  std::vector<SweepRow> rows;  // ascending k
  std::optional<KWindow> empirical;
  std::optional<double> max_abs_boundary_error;
};

/// Throws Inapplicable unless `a` is a reactive attractor.
SweepResult sweep_k(const Mat2& a, const SweepOptions& opts);
Json sweep_summary(const SweepResult& r, const SweepOptions& opts);
Json sweep_rows(const SweepResult& r);

enum class SynthesisMode { Deltas, Eigenvalues, Eigenvectors };

struct SynthesisRequest {
  SynthesisMode mode = SynthesisMode::Deltas;
  double delta_R = 0.0;
  double delta_T = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double rho = 1.0;
  std::optional<double> delta_R_override;
};

Json synthesis_report(const SynthesisRequest& req);

/// Seeded randomized spot checks of the core identities. `passed` is false
/// if any check exceeded its tolerance.
struct SelftestResult {
  Json report;
  bool passed = true;
};
SelftestResult selftest(std::uint64_t seed, int count);

}  // namespace reactlin::cli
