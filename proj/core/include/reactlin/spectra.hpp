#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "reactlin/rt_core.hpp"

namespace reactlin {

namespace eigen {

/// Two real eigendirections at theta_T +- delta_T.
struct DistinctReal {
  double lambda1 = 0.0;  // m_R + p_R
  double lambda2 = 0.0;  // m_R - p_R
  AngleModPi theta1;
  AngleModPi theta2;
  double delta_T = 0.0;  // in (0, pi/2)
  double p_R = 0.0;
};

struct ComplexPair {
  double re = 0.0;
  double im = 0.0;  // sqrt(tau1 tau2) > 0
};

/// T identically zero: every direction is an eigendirection.
struct RepeatedFull {
  double lambda = 0.0;
};

/// T touches zero once: a single eigendirection.
struct RepeatedDefective {
  double lambda = 0.0;
  AngleModPi theta0;
};

}  // namespace eigen

using EigenStructure = std::variant<eigen::DistinctReal, eigen::ComplexPair,
                                    eigen::RepeatedFull, eigen::RepeatedDefective>;

namespace ortho {

/// Two orthovectors at theta_R -+ delta_R, bounding the reactive arc.
struct DistinctReal {
  double mu1 = 0.0;  // m_T + p_T
  double mu2 = 0.0;  // m_T - p_T
  AngleModPi phi1;   // theta_R - delta_R
  AngleModPi phi2;   // theta_R + delta_R
  double delta_R = 0.0;  // in (0, pi/2)
  double p_T = 0.0;
};

/// R is single-signed.
struct NoReal {};

/// R identically zero.
struct AllOrtho {
  double mu = 0.0;
};

/// R touches zero once.
struct RepeatedOrtho {
  double mu = 0.0;
  AngleModPi phi0;
};

}  // namespace ortho

using OrthoStructure = std::variant<ortho::DistinctReal, ortho::NoReal, ortho::AllOrtho,
                                    ortho::RepeatedOrtho>;

enum class Classification {
  ReactiveAttractor,
  NonreactiveAttractor,
  AttenuatingRepeller,
  NonattenuatingRepeller,
  Saddle,
  Center,
  CircularCenter,
  Degenerate,
};

std::string_view to_string(Classification c);

/// Reactive part of the unit circle, {theta : R(theta) > 0}, up to the
/// pi-periodicity. For an Arc, `upper` may exceed pi so the interval stays
/// contiguous: (lower, upper) with lower in [0, pi).
struct ReactiveSet {
  enum class Kind { Empty, Arc, Full };
  Kind kind = Kind::Empty;
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double theta) const;
};

struct TransientSummary {
  double rho1 = 0.0;  // reactivity
  double rho2 = 0.0;  // attenuation
  ReactiveSet reactive_set;
  Classification classification = Classification::Degenerate;
  bool is_reactive = false;     // rho1 > 0
  bool is_attenuating = false;  // rho2 < 0
};

EigenStructure eigen_structure(const RTParams& rt);
OrthoStructure ortho_structure(const RTParams& rt);
TransientSummary transient_summary(const RTParams& rt);

/// Eigenvalues as (real, imag) pairs, larger real part first. Convenience
/// over the variant.
struct EigenvaluePair {
  double re1 = 0.0, im1 = 0.0;
  double re2 = 0.0, im2 = 0.0;
};
EigenvaluePair eigenvalues(const EigenStructure& es);

enum class Stability { Attracting, Repelling, SemiStable };

std::string_view to_string(Stability s);

struct AngularEquilibrium {
  AngleModPi angle;
  Stability stability = Stability::SemiStable;
};

/// Equilibria of dtheta/dt = T(theta) on [0, pi).
struct PhaseLine {
  std::vector<AngularEquilibrium> equilibria;
  /// T identically zero; every angle is an equilibrium and `equilibria` is empty.
  bool every_angle_equilibrium = false;
};

PhaseLine angular_phase_line(const RTParams& rt);

}  // namespace reactlin
