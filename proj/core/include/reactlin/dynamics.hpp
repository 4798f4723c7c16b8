#pragma once

#include <string_view>
#include <vector>

#include "reactlin/rt_core.hpp"

namespace reactlin {

struct Sample {
  double t = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double theta = 0.0;  // unwrapped: accumulates across revolutions
  double r() const;
};

enum class IntegratorKind { LinearRk4, PolarRk4, NonautonomousRk4 };

std::string_view to_string(IntegratorKind k);

/// Samples at t = 0, step, 2 step, ... and a last (shorter) step landing on
/// t_end.
struct Trajectory {
  std::vector<Sample> samples;
  double step = 0.0;
  IntegratorKind method = IntegratorKind::LinearRk4;
};

/// Classical RK4 on X' = A X.
Trajectory integrate_linear(const Mat2& a, Vec2 x0, double step, double t_end);

/// e^{A t} in closed form (cosh/sinh, cos/sin or series branch on the sign
/// and size of the discriminant).
Mat2 matrix_exponential(const Mat2& a, double t);

/// RK4 on (ln r)' = R(theta), theta' = T(theta).
Trajectory integrate_polar(const RTParams& rt, double r0, double theta0, double step,
                           double t_end);

/// X' = M_{kt}^{-1} A M_{kt} X: the frozen matrix A seen from a frame turning
/// at rate k.
struct NonautConfig {
  Mat2 base;
  double k = 0.0;
};

Mat2 nonaut_matrix(const NonautConfig& cfg, double t);
/// A + k J, the autonomous system for Y = M_{kt} X.
Mat2 corotating_matrix(const NonautConfig& cfg);

/// Open interval of k for which the rotating system is asymptotically
/// repelling: (-mu1, -mu2). Throws Inapplicable unless A is a reactive
/// attractor.
struct KWindow {
  double lower = 0.0;
  double upper = 0.0;
};
KWindow repulsion_window(const Mat2& a);

enum class WindowPosition { Inside, Outside, Marginal };
std::string_view to_string(WindowPosition w);
/// Marginal within tol of either end, where the co-rotating matrix has a
/// zero eigenvalue.
WindowPosition window_position(const KWindow& w, double k, double tol = 1e-9);

Trajectory integrate_nonaut(const NonautConfig& cfg, Vec2 x0, double step, double t_end);

enum class Growth { Growing, Decaying, Marginal };
std::string_view to_string(Growth g);
/// |slope| <= threshold is Marginal.
Growth classify_growth(double slope, double threshold = 1e-3);

/// Least-squares slope of ln |X| over samples with t >= t_end / 2.
double log_slope(const Trajectory& tr);

/// Same slope for the rotating system without storing the trajectory; the
/// state is renormalized on the fly so long horizons do not overflow.
double nonaut_log_slope(const NonautConfig& cfg, Vec2 x0, double step, double t_end);

/// Mean time for theta to advance by 2 pi, from the first and last full
/// revolution crossings (linear interpolation between samples). Throws
/// NumericFailure if the trajectory does not complete a revolution.
double revolution_period(const Trajectory& tr);

}  // namespace reactlin
