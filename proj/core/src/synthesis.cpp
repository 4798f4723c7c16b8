#include "reactlin/synthesis.hpp"

#include <cmath>
#include <utility>

#include "reactlin/error.hpp"

namespace reactlin {

namespace {
bool finite(double x) { return std::isfinite(x); }
}  // namespace

Mat2 from_deltas(double delta_R, double delta_T, double rho) {
  if (!finite(delta_R) || !(delta_R > 0.0 && delta_R < kPi / 2.0)) {
    throw InvalidInput("delta_R must lie in (0, pi/2)");
  }
  if (!finite(delta_T) || !(delta_T >= 0.0 && delta_T < kPi / 2.0)) {
    throw InvalidInput("delta_T must lie in [0, pi/2)");
  }
  if (!finite(rho) || !(rho > 0.0)) throw InvalidInput("rho must be positive");

  // 1 -+ cos 2x written as 2 sin^2 x / 2 cos^2 x; no cancellation near 0
  const double sr = std::sin(delta_R);
  const double st = std::sin(delta_T);
  const double ct = std::cos(delta_T);
  const double k = rho / (2.0 * sr * sr);
  const double diag = -k * std::cos(2.0 * delta_R);
  return {diag, k * 2.0 * ct * ct, k * 2.0 * st * st, diag};
}

Mat2 attractor_with_eigenvalues(double lambda1, double lambda2, double rho) {
  if (!finite(lambda1) || !finite(lambda2)) throw InvalidInput("eigenvalues must be finite");
  if (lambda1 < lambda2) std::swap(lambda1, lambda2);
  if (!(lambda1 < 0.0)) throw InvalidInput("both eigenvalues must be negative");
  if (!finite(rho) || !(rho > 0.0)) throw InvalidInput("rho must be positive");

  const double m_R = 0.5 * (lambda1 + lambda2);
  const double p_R = 0.5 * (lambda1 - lambda2);
  // with p = rho - m_R:
  // p^2 - m_R^2 = rho (rho - 2 m_R),  p^2 - p_R^2 = (rho - lambda1)(rho - lambda2)
  const double p_T = std::sqrt(rho * (rho - 2.0 * m_R));
  const double abs_m_T = std::sqrt((rho - lambda1) * (rho - lambda2));
  const double delta_R = 0.5 * std::atan2(p_T, -m_R);
  const double delta_T = 0.5 * std::atan2(p_R, abs_m_T);
  return from_deltas(delta_R, delta_T, rho);
}

Mat2 attractor_with_eigenvectors(double theta1, double theta2, double rho,
                                 std::optional<double> delta_R) {
  if (!finite(theta1) || !finite(theta2)) throw InvalidInput("angles must be finite");
  if (!finite(rho) || !(rho > 0.0)) throw InvalidInput("rho must be positive");

  constexpr double kAngleTol = 1e-12;
  const double d = AngleModPi::normalize(theta1 - theta2);
  if (d <= kAngleTol || kPi - d <= kAngleTol) {
    throw InvalidInput("eigendirections are parallel");
  }
  if (std::abs(d - kPi / 2.0) <= kAngleTol) {
    throw InvalidInput("eigendirections are orthogonal; a reactive attractor cannot have them");
  }
  const double delta_T = 0.5 * d;
  const double room = std::abs(delta_T - kPi / 4.0);
  double dR = 0.5 * room;
  if (delta_R) {
    if (!finite(*delta_R) || !(*delta_R > 0.0 && *delta_R < room)) {
      throw InvalidInput("delta_R override must lie in (0, |delta_T - pi/4|)");
    }
    dR = *delta_R;
  }
  // from_deltas puts the eigenlines at +-delta_T; shift them onto theta1 and
  // theta1 - d (same line as theta2).
  const Mat2 centered = from_deltas(dR, delta_T, rho);
  const double theta2_rep = theta1 - d;
  return rotate_conjugate(centered, -0.5 * (theta1 + theta2_rep));
}

}  // namespace reactlin
