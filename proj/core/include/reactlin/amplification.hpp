#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "reactlin/rt_core.hpp"

namespace reactlin {

enum class AmplificationMethod { ClosedLambdaMu, ClosedMs, ClosedDeltas, NumericSweep };

std::string_view to_string(AmplificationMethod m);

struct AmplificationResult {
  double rho_max = 1.0;
  std::optional<double> t_max;             // numeric only
  std::optional<AngleModPi> theta_entry;   // numeric only
  AmplificationMethod method = AmplificationMethod::ClosedLambdaMu;
};

struct ClosedFormOptions {
  /// Complex eigenvalues: throw NeedsNumeric instead of falling back to the
  /// numeric sweep.
  bool strict = false;
  /// Complex eigenvalues: evaluate the (m, p) formula in complex arithmetic
  /// with principal-branch powers, then insist it agrees with the numeric
  /// sweep to 1e-3. Ignored under strict.
  bool experimental_complex = false;
  /// Relative agreement demanded between the closed forms.
  double concordance_tolerance = 1e-9;
};

struct NumericOptions {
  /// 0 selects 1e-4 / max(|rho1|, |rho2|, |tau1|, |tau2|).
  double step = 0.0;
  /// Hard cap on RK4 steps per trajectory; NumericFailure past it.
  std::size_t max_steps = 50'000'000;
  /// Initial angles tried by the complex-case safety sweep.
  int sweep_angles = 360;
};

/// Exact maximal amplification of a reactive attractor. Real eigenvalues use
/// the lambda/mu formula, checked against the m/p form and (distinct case)
/// the delta form. Throws Inapplicable for anything but a reactive attractor,
/// NumericFailure if the forms disagree.
AmplificationResult rho_max_closed(const Mat2& a, const ClosedFormOptions& opts = {});

/// The three closed forms on their own. Each expects a reactive attractor
/// with real eigenvalues and canonicalizes m_T >= 0 itself. Repeated
/// eigenvalues go through the lambda1 -> lambda2 limit in the first two.
double rho_max_lambda_mu(const Mat2& a);
double rho_max_ms(const Mat2& a);
double rho_max_deltas(const Mat2& a);  // distinct real eigenvalues only

/// Principal-branch complex evaluation of the m/p form; complex pair only.
double rho_max_ms_complex(const Mat2& a);

/// -p / m_R. Strict upper bound for reactive attractors.
double rho_max_bound_ortho(const Mat2& a);
/// p / p_R. Needs distinct real eigenvalues.
double rho_max_bound_eigen(const Mat2& a);

/// Integrates the polar system from the entrance orthovector with r = 1 and
/// reads off the radius where the trajectory leaves the reactive arc (exit
/// located by bisection). Spirals get repeated passes and a sweep over
/// initial angles.
AmplificationResult rho_max_numeric(const Mat2& a, const NumericOptions& opts = {});

/// Step size shared by the integrators: 1e-4 / max(|rho1|, |rho2|, |tau1|, |tau2|).
double default_step(const RTParams& rt);

}  // namespace reactlin
