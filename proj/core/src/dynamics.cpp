#include "reactlin/dynamics.hpp"

#include <cmath>
#include <string>
#include <variant>

#include "reactlin/error.hpp"
#include "reactlin/spectra.hpp"

namespace reactlin {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr double kMaxSamples = 2e8;

void check_horizon(double step, double t_end) {
  if (!std::isfinite(step) || !(step > 0.0)) throw InvalidInput("step must be positive");
  if (!std::isfinite(t_end) || !(t_end > 0.0)) throw InvalidInput("t_end must be positive");
  if (t_end / step > kMaxSamples) throw InvalidInput("t_end / step is too large");
}

void check_start(Vec2 x0) {
  if (!std::isfinite(x0.x) || !std::isfinite(x0.y)) throw InvalidInput("x0 must be finite");
  if (x0.x == 0.0 && x0.y == 0.0) throw InvalidInput("x0 must be nonzero");
}

// Sample times i*step for i < n_full, then t_end.
struct TimeGrid {
  std::size_t n_full;
  bool partial;

  TimeGrid(double step, double t_end) {
    n_full = static_cast<std::size_t>(std::floor(t_end / step));
    const double rest = t_end - static_cast<double>(n_full) * step;
    partial = rest > 1e-9 * step;
    if (!partial && n_full == 0) n_full = 1;
  }
  std::size_t steps() const { return n_full + (partial ? 1 : 0); }
  double time(std::size_t i, double step, double t_end) const {
    return i == steps() ? t_end : static_cast<double>(i) * step;
  }
};

Vec2 rk4_linear(const Mat2& a, Vec2 x, double h) {
  const Vec2 k1 = a * x;
  const Vec2 k2 = a * (x + 0.5 * h * k1);
  const Vec2 k3 = a * (x + 0.5 * h * k2);
  const Vec2 k4 = a * (x + h * k3);
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Vec2 rk4_nonaut(const NonautConfig& cfg, double t, Vec2 x, double h) {
  const Mat2 b0 = nonaut_matrix(cfg, t);
  const Mat2 bh = nonaut_matrix(cfg, t + 0.5 * h);
  const Mat2 b1 = nonaut_matrix(cfg, t + h);
  const Vec2 k1 = b0 * x;
  const Vec2 k2 = bh * (x + 0.5 * h * k1);
  const Vec2 k3 = bh * (x + 0.5 * h * k2);
  const Vec2 k4 = b1 * (x + h * k3);
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double unwrap(double previous, double wrapped) {
  return previous + std::remainder(wrapped - previous, kTwoPi);
}

Sample cartesian_sample(double t, Vec2 x, double previous_theta) {
  return {t, x.x, x.y, unwrap(previous_theta, std::atan2(x.y, x.x))};
}

// Running least-squares fit y = a + b t.
class SlopeFit {
 public:
  void add(double t, double y) {
    ++n_;
    const double dt = t - mean_t_;
    mean_t_ += dt / n_;
    const double dy = y - mean_y_;
    mean_y_ += dy / n_;
    stt_ += dt * (t - mean_t_);
    sty_ += dt * (y - mean_y_);
  }
  double slope() const {
    if (n_ < 2 || stt_ <= 0.0) throw NumericFailure("too few samples for a slope");
    return sty_ / stt_;
  }

 private:
  double n_ = 0.0;
  double mean_t_ = 0.0;
  double mean_y_ = 0.0;
  double stt_ = 0.0;
  double sty_ = 0.0;
};

}  // namespace

double Sample::r() const { return std::hypot(x1, x2); }

std::string_view to_string(IntegratorKind k) {
  switch (k) {
    case IntegratorKind::LinearRk4: return "rk4_linear";
    case IntegratorKind::PolarRk4: return "rk4_polar";
    case IntegratorKind::NonautonomousRk4: return "rk4_nonautonomous";
  }
  return "unknown";
}

std::string_view to_string(WindowPosition w) {
  switch (w) {
    case WindowPosition::Inside: return "inside";
    case WindowPosition::Outside: return "outside";
    case WindowPosition::Marginal: return "marginal";
  }
  return "unknown";
}

std::string_view to_string(Growth g) {
  switch (g) {
    case Growth::Growing: return "growing";
    case Growth::Decaying: return "decaying";
    case Growth::Marginal: return "marginal";
  }
  return "unknown";
}

Trajectory integrate_linear(const Mat2& a, Vec2 x0, double step, double t_end) {
  check_horizon(step, t_end);
  check_start(x0);
  if (!a.is_finite()) throw InvalidInput("matrix has a non-finite entry");
  const TimeGrid grid(step, t_end);
  Trajectory tr;
  tr.step = step;
  tr.method = IntegratorKind::LinearRk4;
  tr.samples.reserve(grid.steps() + 1);
  Vec2 x = x0;
  tr.samples.push_back(cartesian_sample(0.0, x, std::atan2(x.y, x.x)));
  for (std::size_t i = 1; i <= grid.steps(); ++i) {
    const double t = grid.time(i, step, t_end);
    x = rk4_linear(a, x, t - tr.samples.back().t);
    tr.samples.push_back(cartesian_sample(t, x, tr.samples.back().theta));
  }
  return tr;
}

Mat2 matrix_exponential(const Mat2& a, double t) {
  if (!a.is_finite() || !std::isfinite(t)) throw InvalidInput("non-finite input");
  const double m = 0.5 * a.trace();
  const Mat2 n = a - Mat2::scalar(m);  // traceless, n^2 = q2 I
  const double half_gap = 0.5 * (a.a11 - a.a22);
  const double q2 = half_gap * half_gap + a.a12 * a.a21;
  const double z = q2 * t * t;
  double c = 0.0;
  double s = 0.0;
  if (std::abs(z) < 1e-4) {
    c = 1.0 + z / 2.0 + z * z / 24.0 + z * z * z / 720.0;
    s = t * (1.0 + z / 6.0 + z * z / 120.0 + z * z * z / 5040.0);
  } else if (q2 > 0.0) {
    const double q = std::sqrt(q2);
    c = std::cosh(q * t);
    s = std::sinh(q * t) / q;
  } else {
    const double w = std::sqrt(-q2);
    c = std::cos(w * t);
    s = std::sin(w * t) / w;
  }
  return std::exp(m * t) * (Mat2::scalar(c) + s * n);
}

Trajectory integrate_polar(const RTParams& rt, double r0, double theta0, double step,
                           double t_end) {
  check_horizon(step, t_end);
  if (!rt.valid()) throw InvalidInput("RTParams violates its invariants");
  if (!std::isfinite(r0) || !(r0 > 0.0)) throw InvalidInput("r0 must be positive");
  if (!std::isfinite(theta0)) throw InvalidInput("theta0 must be finite");
  const TimeGrid grid(step, t_end);
  Trajectory tr;
  tr.step = step;
  tr.method = IntegratorKind::PolarRk4;
  tr.samples.reserve(grid.steps() + 1);

  double u = std::log(r0);
  double th = theta0;
  auto push = [&](double t) {
    const double r = std::exp(u);
    tr.samples.push_back({t, r * std::cos(th), r * std::sin(th), th});
  };
  push(0.0);
  double t_prev = 0.0;
  for (std::size_t i = 1; i <= grid.steps(); ++i) {
    const double t = grid.time(i, step, t_end);
    const double h = t - t_prev;
    const double k1u = eval_radial(rt, th);
    const double k1t = eval_tangential(rt, th);
    const double k2u = eval_radial(rt, th + 0.5 * h * k1t);
    const double k2t = eval_tangential(rt, th + 0.5 * h * k1t);
    const double k3u = eval_radial(rt, th + 0.5 * h * k2t);
    const double k3t = eval_tangential(rt, th + 0.5 * h * k2t);
    const double k4u = eval_radial(rt, th + h * k3t);
    const double k4t = eval_tangential(rt, th + h * k3t);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    th += h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
    push(t);
    t_prev = t;
  }
  return tr;
}

Mat2 nonaut_matrix(const NonautConfig& cfg, double t) {
  return rotate_conjugate(cfg.base, cfg.k * t);
}

Mat2 corotating_matrix(const NonautConfig& cfg) {
  return cfg.base + cfg.k * Mat2::rotation_j();
}

KWindow repulsion_window(const Mat2& a) {
  const RTParams rt = decompose(a);
  const TransientSummary s = transient_summary(rt);
  if (s.classification != Classification::ReactiveAttractor) {
    throw Inapplicable("repulsion window needs a reactive attractor, got " +
                       std::string(to_string(s.classification)));
  }
  const auto o = std::get<ortho::DistinctReal>(ortho_structure(rt));
  return {-o.mu1, -o.mu2};
}

WindowPosition window_position(const KWindow& w, double k, double tol) {
  const double scale = 1.0 + std::abs(w.lower) + std::abs(w.upper);
  if (std::abs(k - w.lower) <= tol * scale || std::abs(k - w.upper) <= tol * scale) {
    return WindowPosition::Marginal;
  }
  return (k > w.lower && k < w.upper) ? WindowPosition::Inside : WindowPosition::Outside;
}

Trajectory integrate_nonaut(const NonautConfig& cfg, Vec2 x0, double step, double t_end) {
  check_horizon(step, t_end);
  check_start(x0);
  if (!cfg.base.is_finite() || !std::isfinite(cfg.k)) throw InvalidInput("non-finite config");
  const TimeGrid grid(step, t_end);
  Trajectory tr;
  tr.step = step;
  tr.method = IntegratorKind::NonautonomousRk4;
  tr.samples.reserve(grid.steps() + 1);
  Vec2 x = x0;
  tr.samples.push_back(cartesian_sample(0.0, x, std::atan2(x.y, x.x)));
  for (std::size_t i = 1; i <= grid.steps(); ++i) {
    const double t_prev = tr.samples.back().t;
    const double t = grid.time(i, step, t_end);
    x = rk4_nonaut(cfg, t_prev, x, t - t_prev);
    tr.samples.push_back(cartesian_sample(t, x, tr.samples.back().theta));
  }
  return tr;
}

Growth classify_growth(double slope, double threshold) {
  if (slope > threshold) return Growth::Growing;
  if (slope < -threshold) return Growth::Decaying;
  return Growth::Marginal;
}

double log_slope(const Trajectory& tr) {
  if (tr.samples.size() < 3) throw NumericFailure("trajectory too short for a slope");
  const double half = 0.5 * tr.samples.back().t;
  SlopeFit fit;
  for (const Sample& s : tr.samples) {
    if (s.t >= half) fit.add(s.t, std::log(s.r()));
  }
  return fit.slope();
}

double nonaut_log_slope(const NonautConfig& cfg, Vec2 x0, double step, double t_end) {
  check_horizon(step, t_end);
  check_start(x0);
  const TimeGrid grid(step, t_end);
  const double half = 0.5 * t_end;
  SlopeFit fit;
  Vec2 x = x0;
  double log_scale = 0.0;
  double t_prev = 0.0;
  if (half <= 0.0) fit.add(0.0, std::log(x.norm()));
  for (std::size_t i = 1; i <= grid.steps(); ++i) {
    const double t = grid.time(i, step, t_end);
    x = rk4_nonaut(cfg, t_prev, x, t - t_prev);
    t_prev = t;
    const double n = x.norm();
    if (!std::isfinite(n) || n == 0.0) throw NumericFailure("state left the representable range");
    if (n > 1e100 || n < 1e-100) {
      log_scale += std::log(n);
      x = (1.0 / n) * x;
    }
    if (t >= half) fit.add(t, log_scale + std::log(x.norm()));
  }
  return fit.slope();
}

double revolution_period(const Trajectory& tr) {
  if (tr.samples.size() < 2) throw NumericFailure("trajectory too short");
  const double theta0 = tr.samples.front().theta;
  const double turned = tr.samples.back().theta - theta0;
  const double dir = turned >= 0.0 ? 1.0 : -1.0;
  const auto revolutions = static_cast<long>(std::floor(std::abs(turned) / kTwoPi));
  if (revolutions < 1) throw NumericFailure("trajectory does not complete a revolution");

  // time of the last full-revolution crossing, theta0 + dir * 2 pi * revolutions
  const double level = theta0 + dir * kTwoPi * static_cast<double>(revolutions);
  for (std::size_t i = 1; i < tr.samples.size(); ++i) {
    const Sample& a = tr.samples[i - 1];
    const Sample& b = tr.samples[i];
    if (dir * (b.theta - level) >= 0.0 && dir * (a.theta - level) < 0.0) {
      const double f = (level - a.theta) / (b.theta - a.theta);
      const double t_cross = a.t + f * (b.t - a.t);
      return (t_cross - tr.samples.front().t) / static_cast<double>(revolutions);
    }
  }
  throw NumericFailure("revolution crossing not found");
}

}  // namespace reactlin
