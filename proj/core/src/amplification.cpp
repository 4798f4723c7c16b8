#include "reactlin/amplification.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <variant>

#include "reactlin/error.hpp"
#include "reactlin/spectra.hpp"

namespace reactlin {

namespace {

struct Canonical {
  Mat2 a;
  RTParams rt;
};

// Reactive attractor with m_T > 0 (reflection keeps every solution norm).
// Then mu2 = m_T - p_T > 0 because mu1 mu2 = det A > 0.
Canonical canonical_attractor(const Mat2& a) {
  RTParams rt = decompose(a);
  const TransientSummary s = transient_summary(rt);
  if (s.classification != Classification::ReactiveAttractor) {
    throw Inapplicable("maximal amplification needs a reactive attractor, got " +
                       std::string(to_string(s.classification)));
  }
  if (rt.m_T >= 0.0) return {a, rt};
  const Mat2 b = reflect_conjugate(a);
  return {b, decompose(b)};
}

// log1p(x) / x, finite through x = 0. Lets the exponent (which blows up as
// the eigenvalues merge) be folded into the log argument.
double log1p_ratio(double x) {
  if (std::abs(x) < 1e-300) return 1.0;
  return std::log1p(x) / x;
}

double real_eigen_gap(const RTParams& rt) {
  const EigenStructure es = eigen_structure(rt);
  if (const auto* d = std::get_if<eigen::DistinctReal>(&es)) return d->p_R;
  if (std::holds_alternative<eigen::RepeatedDefective>(es)) return 0.0;
  throw Inapplicable("closed form needs real eigenvalues");
}

ortho::DistinctReal ortho_of(const RTParams& rt) {
  const OrthoStructure os = ortho_structure(rt);
  // a reactive attractor always has p > |m_R|
  return std::get<ortho::DistinctReal>(os);
}

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

struct PolarState {
  double t = 0.0;
  double u = 0.0;  // ln r
  double theta = 0.0;
};

PolarState rk4_polar(const RTParams& rt, const PolarState& s, double h) {
  const double k1u = eval_radial(rt, s.theta);
  const double k1t = eval_tangential(rt, s.theta);
  const double th2 = s.theta + 0.5 * h * k1t;
  const double k2u = eval_radial(rt, th2);
  const double k2t = eval_tangential(rt, th2);
  const double th3 = s.theta + 0.5 * h * k2t;
  const double k3u = eval_radial(rt, th3);
  const double k3t = eval_tangential(rt, th3);
  const double th4 = s.theta + h * k3t;
  const double k4u = eval_radial(rt, th4);
  const double k4t = eval_tangential(rt, th4);
  return {s.t + h, s.u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u),
          s.theta + h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t)};
}

class PassIntegrator {
 public:
  PassIntegrator(const RTParams& rt, double step, std::size_t max_steps)
      : rt_(rt), h_(step), max_steps_(max_steps) {}

  // Advance until theta crosses `target` in direction `dir`; the crossing is
  // bisected on the sub-step length down to 1e-12 in theta.
  PolarState run_to(PolarState s, double target, double dir) {
    for (;;) {
      if (++steps_ > max_steps_) {
        throw NumericFailure("amplification sweep hit the step cap before leaving the reactive arc");
      }
      const PolarState next = rk4_polar(rt_, s, h_);
      if (dir * (next.theta - target) < 0.0) {
        s = next;
        continue;
      }
      double lo = 0.0;
      double hi = h_;
      PolarState best = next;
      for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const PolarState m = rk4_polar(rt_, s, mid);
        best = m;
        if (std::abs(m.theta - target) <= 1e-12) break;
        if (dir * (m.theta - target) >= 0.0) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      return best;
    }
  }

  std::size_t steps() const { return steps_; }

 private:
  const RTParams& rt_;
  double h_;
  std::size_t max_steps_;
  std::size_t steps_ = 0;
};

}  // namespace

std::string_view to_string(AmplificationMethod m) {
  switch (m) {
    case AmplificationMethod::ClosedLambdaMu: return "closed_lambda_mu";
    case AmplificationMethod::ClosedMs: return "closed_ms";
    case AmplificationMethod::ClosedDeltas: return "closed_deltas";
    case AmplificationMethod::NumericSweep: return "numeric";
  }
  return "unknown";
}

double default_step(const RTParams& rt) {
  const double speed = std::max({std::abs(rt.rho1()), std::abs(rt.rho2()),
                                 std::abs(rt.tau1()), std::abs(rt.tau2())});
  return speed > 0.0 ? 1e-4 / speed : 1e-4;
}

double rho_max_lambda_mu(const Mat2& a) {
  const Canonical c = canonical_attractor(a);
  const double p_R = real_eigen_gap(c.rt);
  const double l1 = c.rt.m_R + p_R;
  const double l2 = c.rt.m_R - p_R;
  const ortho::DistinctReal o = ortho_of(c.rt);
  const double denom = l1 * o.mu1 + l2 * o.mu2;
  // base - 1 = (l1 - l2)(mu2 - mu1) / denom, exponent (l1 + l2)/(l1 - l2)
  const double x = (l1 - l2) * (o.mu2 - o.mu1) / denom;
  const double log_sq = (l1 + l2) * (o.mu2 - o.mu1) / denom * log1p_ratio(x) +
                        std::log(o.mu1 / o.mu2);
  return std::exp(0.5 * log_sq);
}

double rho_max_ms(const Mat2& a) {
  const Canonical c = canonical_attractor(a);
  const double p_R = real_eigen_gap(c.rt);
  const double m_R = c.rt.m_R;
  const double m_T = c.rt.m_T;
  const double p_T = ortho_of(c.rt).p_T;
  const double denom = m_R * m_T + p_R * p_T;
  const double x = -2.0 * p_R * p_T / denom;
  const double log_sq = m_R * (-2.0 * p_T / denom) * log1p_ratio(x) +
                        std::log((m_T + p_T) / (m_T - p_T));
  return std::exp(0.5 * log_sq);
}

double rho_max_deltas(const Mat2& a) {
  const Canonical c = canonical_attractor(a);
  const EigenStructure es = eigen_structure(c.rt);
  const auto* e = std::get_if<eigen::DistinctReal>(&es);
  if (!e) throw Inapplicable("delta form needs distinct real eigenvalues");
  const double dR2 = 2.0 * ortho_of(c.rt).delta_R;
  const double dT2 = 2.0 * e->delta_T;
  const double base_den = std::cos(dR2 - dT2);
  // cos(a+b)/cos(a-b) - 1
  const double x = -2.0 * std::sin(dR2) * std::sin(dT2) / base_den;
  const double exponent_times_x = 2.0 * std::cos(dR2) * std::sin(dR2) / base_den;
  const double log_sq = exponent_times_x * log1p_ratio(x) +
                        std::log((std::cos(dT2) - std::sin(dR2)) /
                                 (std::cos(dT2) + std::sin(dR2)));
  return std::exp(0.5 * log_sq);
}

double rho_max_ms_complex(const Mat2& a) {
  const Canonical c = canonical_attractor(a);
  const EigenStructure es = eigen_structure(c.rt);
  const auto* z = std::get_if<eigen::ComplexPair>(&es);
  if (!z) throw Inapplicable("complex evaluation needs a complex eigenvalue pair");
  using cd = std::complex<double>;
  const double m_R = c.rt.m_R;
  const double m_T = c.rt.m_T;
  const double p_T = ortho_of(c.rt).p_T;
  const cd p_R(0.0, z->im);
  const cd base = (m_R * m_T - p_R * p_T) / (m_R * m_T + p_R * p_T);
  const cd sq = std::pow(base, cd(m_R) / p_R) * ((m_T + p_T) / (m_T - p_T));
  if (std::abs(sq.imag()) > 1e-9 * std::abs(sq.real())) {
    throw NumericFailure("complex evaluation left a non-negligible imaginary part");
  }
  return std::sqrt(sq.real());
}

double rho_max_bound_ortho(const Mat2& a) {
  const Canonical c = canonical_attractor(a);
  return -c.rt.p / c.rt.m_R;
}

double rho_max_bound_eigen(const Mat2& a) {
  const Canonical c = canonical_attractor(a);
  const EigenStructure es = eigen_structure(c.rt);
  const auto* e = std::get_if<eigen::DistinctReal>(&es);
  if (!e) throw Inapplicable("eigen bound needs distinct real eigenvalues");
  return c.rt.p / e->p_R;
}

AmplificationResult rho_max_closed(const Mat2& a, const ClosedFormOptions& opts) {
  const Canonical c = canonical_attractor(a);
  const EigenStructure es = eigen_structure(c.rt);

  if (std::holds_alternative<eigen::ComplexPair>(es)) {
    if (opts.strict) {
      throw NeedsNumeric("complex eigenvalues: no closed form is asserted, use the numeric sweep");
    }
    const AmplificationResult numeric = rho_max_numeric(a);
    if (!opts.experimental_complex) return numeric;
    const double v = rho_max_ms_complex(a);
    if (relative_gap(v, numeric.rho_max) > 1e-3) {
      throw NumericFailure("complex closed form " + std::to_string(v) +
                           " disagrees with the numeric sweep " +
                           std::to_string(numeric.rho_max));
    }
    AmplificationResult r;
    r.rho_max = v;
    r.method = AmplificationMethod::ClosedMs;
    return r;
  }

  const double v19 = rho_max_lambda_mu(c.a);
  const double v20 = rho_max_ms(c.a);
  if (relative_gap(v19, v20) > opts.concordance_tolerance) {
    throw NumericFailure("lambda/mu and m/p forms disagree");
  }
  if (std::holds_alternative<eigen::DistinctReal>(es)) {
    const double v21 = rho_max_deltas(c.a);
    if (relative_gap(v19, v21) > opts.concordance_tolerance) {
      throw NumericFailure("lambda/mu and delta forms disagree");
    }
  }
  AmplificationResult r;
  r.rho_max = v19;
  r.method = AmplificationMethod::ClosedLambdaMu;
  return r;
}

AmplificationResult rho_max_numeric(const Mat2& a, const NumericOptions& opts) {
  const RTParams rt = decompose(a);
  const TransientSummary s = transient_summary(rt);
  if (s.classification != Classification::ReactiveAttractor) {
    throw Inapplicable("maximal amplification needs a reactive attractor, got " +
                       std::string(to_string(s.classification)));
  }
  const ortho::DistinctReal o = ortho_of(rt);
  const double h = opts.step > 0.0 ? opts.step : default_step(rt);
  if (!std::isfinite(h)) throw InvalidInput("step must be finite");

  // T keeps the sign of m_T = T(theta_R) across the arc, so the arc is
  // entered at phi1 going up when m_T > 0 and at phi2 going down otherwise.
  const double dir = rt.m_T > 0.0 ? 1.0 : -1.0;
  const double arc = 2.0 * o.delta_R;
  const double entry = dir > 0.0 ? o.phi1.value() : o.phi1.value() + arc;

  PassIntegrator pass(rt, h, opts.max_steps);
  PolarState state{0.0, 0.0, entry};
  double target = entry + dir * arc;
  PolarState best = pass.run_to(state, target, dir);

  AmplificationResult r;
  r.method = AmplificationMethod::NumericSweep;
  r.theta_entry = AngleModPi(entry);

  const EigenStructure es = eigen_structure(rt);
  const auto* z = std::get_if<eigen::ComplexPair>(&es);
  if (z) {
    // later passes start from wherever the previous one left r
    double last_peak = best.u;
    state = best;
    for (;;) {
      target += dir * kPi;
      state = pass.run_to(state, target, dir);
      if (state.u > best.u) best = state;
      if (state.u < last_peak) break;
      last_peak = state.u;
    }
  }
  r.rho_max = std::exp(best.u);
  r.t_max = best.t;

  if (z && opts.sweep_angles > 0) {
    // safety net: half a revolution from many starting angles, coarse step
    const double half_turn = kPi / z->im;
    const double hc = 10.0 * h;
    const auto n_steps = static_cast<std::size_t>(std::ceil(half_turn / hc)) + 1;
    for (int i = 0; i < opts.sweep_angles; ++i) {
      PolarState p{0.0, 0.0, kPi * i / opts.sweep_angles};
      const double start = p.theta;
      for (std::size_t k = 0; k < n_steps; ++k) {
        p = rk4_polar(rt, p, hc);
        // margin so integration noise cannot displace the bisected answer
        if (p.u > std::log(r.rho_max) + 1e-9) {
          r.rho_max = std::exp(p.u);
          r.t_max = p.t;
          r.theta_entry = AngleModPi(start);
        }
      }
    }
  }
  return r;
}

}  // namespace reactlin
