#include "reactlin/spectra.hpp"

#include <cmath>

namespace reactlin {

namespace {

// Case boundaries (p vs |m_T|, p vs |m_R|, eigenvalue vs 0) share one
// relative band so classification is deterministic.
constexpr double kCaseTolerance = 1e-10;

double eigen_tolerance(const RTParams& rt) {
  return kCaseTolerance * (1.0 + rt.p + std::abs(rt.m_T));
}

double ortho_tolerance(const RTParams& rt) {
  return kCaseTolerance * (1.0 + rt.p + std::abs(rt.m_R));
}

double zero_eigenvalue_tolerance(const RTParams& rt) {
  return kCaseTolerance * (1.0 + std::abs(rt.m_R) + rt.p + std::abs(rt.m_T));
}

// sqrt(p^2 - m^2) without squaring.
double half_separation(double p, double m) {
  const double am = std::abs(m);
  return std::sqrt((p - am) * (p + am));
}

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::ReactiveAttractor: return "reactive_attractor";
    case Classification::NonreactiveAttractor: return "nonreactive_attractor";
    case Classification::AttenuatingRepeller: return "attenuating_repeller";
    case Classification::NonattenuatingRepeller: return "nonattenuating_repeller";
    case Classification::Saddle: return "saddle";
    case Classification::Center: return "center";
    case Classification::CircularCenter: return "circular_center";
    case Classification::Degenerate: return "degenerate";
  }
  return "unknown";
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Attracting: return "attracting";
    case Stability::Repelling: return "repelling";
    case Stability::SemiStable: return "semi_stable";
  }
  return "unknown";
}

bool ReactiveSet::contains(double theta) const {
  switch (kind) {
    case Kind::Empty: return false;
    case Kind::Full: return true;
    case Kind::Arc: {
      double t = AngleModPi::normalize(theta);
      if (t <= lower) t += kPi;
      return t > lower && t < upper;
    }
  }
  return false;
}

EigenStructure eigen_structure(const RTParams& rt) {
  const double tol = eigen_tolerance(rt);
  const double gap = rt.p - std::abs(rt.m_T);
  if (gap > tol) {
    eigen::DistinctReal d;
    d.p_R = half_separation(rt.p, rt.m_T);
    d.lambda1 = rt.m_R + d.p_R;
    d.lambda2 = rt.m_R - d.p_R;
    // cos(2 delta_T) = -m_T / p, sin(2 delta_T) = p_R / p
    d.delta_T = 0.5 * std::atan2(d.p_R, -rt.m_T);
    const double theta_t = rt.theta_R->value() - kPi / 4.0;
    d.theta1 = AngleModPi(theta_t + d.delta_T);
    d.theta2 = AngleModPi(theta_t - d.delta_T);
    return d;
  }
  if (gap < -tol) {
    return eigen::ComplexPair{rt.m_R, half_separation(rt.m_T, rt.p)};
  }
  if (rt.p <= tol || !rt.theta_R) return eigen::RepeatedFull{rt.m_R};
  // Single zero of T: at theta_T when m_T = -p, at theta_T + pi/2 when m_T = p.
  const double theta_t = rt.theta_R->value() - kPi / 4.0;
  return eigen::RepeatedDefective{rt.m_R,
                                  AngleModPi(rt.m_T < 0.0 ? theta_t : theta_t + kPi / 2.0)};
}

OrthoStructure ortho_structure(const RTParams& rt) {
  const double tol = ortho_tolerance(rt);
  const double gap = rt.p - std::abs(rt.m_R);
  if (gap > tol) {
    ortho::DistinctReal d;
    d.p_T = half_separation(rt.p, rt.m_R);
    d.mu1 = rt.m_T + d.p_T;
    d.mu2 = rt.m_T - d.p_T;
    // cos(2 delta_R) = -m_R / p, sin(2 delta_R) = p_T / p
    d.delta_R = 0.5 * std::atan2(d.p_T, -rt.m_R);
    d.phi1 = AngleModPi(rt.theta_R->value() - d.delta_R);
    d.phi2 = AngleModPi(rt.theta_R->value() + d.delta_R);
    return d;
  }
  if (gap < -tol) return ortho::NoReal{};
  if (rt.p <= tol || !rt.theta_R) return ortho::AllOrtho{rt.m_T};
  // Single zero of R: at theta_R when m_R = -p, at theta_R + pi/2 when m_R = p.
  return ortho::RepeatedOrtho{
      rt.m_T, AngleModPi(rt.m_R < 0.0 ? rt.theta_R->value() : rt.theta_R->value() + kPi / 2.0)};
}

EigenvaluePair eigenvalues(const EigenStructure& es) {
  EigenvaluePair out;
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, eigen::DistinctReal>) {
          out.re1 = v.lambda1;
          out.re2 = v.lambda2;
        } else if constexpr (std::is_same_v<V, eigen::ComplexPair>) {
          out.re1 = out.re2 = v.re;
          out.im1 = v.im;
          out.im2 = -v.im;
        } else {
          out.re1 = out.re2 = v.lambda;
        }
      },
      es);
  return out;
}

TransientSummary transient_summary(const RTParams& rt) {
  TransientSummary s;
  s.rho1 = rt.rho1();
  s.rho2 = rt.rho2();
  const double tol = ortho_tolerance(rt);
  s.is_reactive = s.rho1 > tol;
  s.is_attenuating = s.rho2 < -tol;

  const OrthoStructure os = ortho_structure(rt);
  if (const auto* d = std::get_if<ortho::DistinctReal>(&os)) {
    s.reactive_set.kind = ReactiveSet::Kind::Arc;
    s.reactive_set.lower = d->phi1.value();
    s.reactive_set.upper = d->phi1.value() + 2.0 * d->delta_R;
  } else if (std::holds_alternative<ortho::AllOrtho>(os)) {
    s.reactive_set.kind = ReactiveSet::Kind::Empty;
  } else {
    // single-signed R, or R touching zero once: the sign of m_R decides
    s.reactive_set.kind = rt.m_R > 0.0 ? ReactiveSet::Kind::Full : ReactiveSet::Kind::Empty;
  }

  if (std::holds_alternative<ortho::AllOrtho>(os)) {
    s.classification = std::abs(rt.m_T) > eigen_tolerance(rt) ? Classification::CircularCenter
                                                                : Classification::Degenerate;
    return s;
  }

  const EigenStructure es = eigen_structure(rt);
  const double zero_tol = zero_eigenvalue_tolerance(rt);
  const EigenvaluePair ev = eigenvalues(es);

  bool attractor = false;
  bool repeller = false;
  if (std::holds_alternative<eigen::ComplexPair>(es)) {
    if (std::abs(ev.re1) <= zero_tol) {
      s.classification = Classification::Center;
      return s;
    }
    attractor = ev.re1 < 0.0;
    repeller = ev.re1 > 0.0;
  } else {
    if (std::abs(ev.re1) <= zero_tol || std::abs(ev.re2) <= zero_tol) {
      s.classification = Classification::Degenerate;
      return s;
    }
    attractor = ev.re1 < 0.0;
    repeller = ev.re2 > 0.0;
  }

  if (attractor) {
    s.classification = s.is_reactive ? Classification::ReactiveAttractor
                                     : Classification::NonreactiveAttractor;
  } else if (repeller) {
    s.classification = s.is_attenuating ? Classification::AttenuatingRepeller
                                        : Classification::NonattenuatingRepeller;
  } else {
    s.classification = Classification::Saddle;
  }
  return s;
}

PhaseLine angular_phase_line(const RTParams& rt) {
  PhaseLine line;
  const EigenStructure es = eigen_structure(rt);
  if (const auto* d = std::get_if<eigen::DistinctReal>(&es)) {
    // T'(theta_i) = -2 (lambda_i - m_R): negative at theta1, positive at theta2
    line.equilibria.push_back({d->theta1, Stability::Attracting});
    line.equilibria.push_back({d->theta2, Stability::Repelling});
  } else if (const auto* r = std::get_if<eigen::RepeatedDefective>(&es)) {
    line.equilibria.push_back({r->theta0, Stability::SemiStable});
  } else if (std::holds_alternative<eigen::RepeatedFull>(es)) {
    line.every_angle_equilibrium = true;
  }
  return line;
}

}  // namespace reactlin
