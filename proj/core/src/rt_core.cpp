#include "reactlin/rt_core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "reactlin/error.hpp"

namespace reactlin {

double Vec2::norm() const { return std::hypot(x, y); }

Vec2 unit_vector(double theta) { return {std::cos(theta), std::sin(theta)}; }

Mat2 Mat2::rotation(double gamma) {
  const double c = std::cos(gamma);
  const double s = std::sin(gamma);
  return {c, -s, s, c};
}

double Mat2::max_abs() const {
  return std::max({std::abs(a11), std::abs(a12), std::abs(a21), std::abs(a22)});
}

double Mat2::frobenius() const {
  return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22);
}

bool Mat2::is_finite() const {
  return std::isfinite(a11) && std::isfinite(a12) && std::isfinite(a21) &&
         std::isfinite(a22);
}

double max_abs_diff(const Mat2& a, const Mat2& b) { return (a - b).max_abs(); }

double AngleModPi::normalize(double radians) {
  double v = std::fmod(radians, kPi);
  if (v < 0.0) v += kPi;
  // -tiny + pi rounds to pi
  if (v >= kPi) v = 0.0;
  return v;
}

double AngleModPi::distance(double a, double b) {
  const double d = normalize(a - b);
  return std::min(d, kPi - d);
}

std::optional<AngleModPi> RTParams::theta_T() const {
  if (!theta_R) return std::nullopt;
  return AngleModPi(theta_R->value() - kPi / 4.0);
}

double RTParams::zero_p_tolerance() const {
  return 1e-12 * (1.0 + std::abs(m_R) + std::abs(m_T));
}

bool RTParams::valid() const {
  if (!std::isfinite(m_R) || !std::isfinite(m_T) || !std::isfinite(p)) return false;
  if (p < 0.0) return false;
  return theta_R.has_value() == (p > 0.0);
}

RTParams decompose(const Mat2& a) {
  if (!a.is_finite()) throw InvalidInput("matrix has a non-finite entry");
  RTParams rt;
  rt.m_R = 0.5 * (a.a11 + a.a22);
  rt.m_T = 0.5 * (a.a21 - a.a12);
  const double sine_like = a.a12 + a.a21;
  const double cosine_like = a.a11 - a.a22;
  rt.p = 0.5 * std::hypot(cosine_like, sine_like);
  if (rt.p <= rt.zero_p_tolerance()) {
    rt.p = 0.0;
  } else {
    rt.theta_R = AngleModPi(0.5 * std::atan2(sine_like, cosine_like));
  }
  return rt;
}

Mat2 reconstruct(const RTParams& rt) {
  if (!rt.valid()) throw InvalidInput("RTParams violates its invariants");
  double c = 0.0;
  double s = 0.0;
  if (rt.theta_R) {
    c = rt.p * std::cos(2.0 * rt.theta_R->value());
    s = rt.p * std::sin(2.0 * rt.theta_R->value());
  }
  // [[R(0), -T(pi/2)], [T(0), R(pi/2)]]
  return {rt.m_R + c, -rt.m_T + s, rt.m_T + s, rt.m_R - c};
}

namespace {
double phase(const RTParams& rt, double theta) {
  return 2.0 * (theta - rt.theta_R->value());
}
}  // namespace

double eval_radial(const RTParams& rt, double theta) {
  if (!rt.theta_R) return rt.m_R;
  return rt.m_R + rt.p * std::cos(phase(rt, theta));
}

double eval_tangential(const RTParams& rt, double theta) {
  if (!rt.theta_R) return rt.m_T;
  return rt.m_T - rt.p * std::sin(phase(rt, theta));
}

double eval_radial_derivative(const RTParams& rt, double theta) {
  if (!rt.theta_R) return 0.0;
  return -2.0 * rt.p * std::sin(phase(rt, theta));
}

double eval_tangential_derivative(const RTParams& rt, double theta) {
  if (!rt.theta_R) return 0.0;
  return -2.0 * rt.p * std::cos(phase(rt, theta));
}

Mat2 rotate_conjugate(const Mat2& a, double gamma) {
  if (!std::isfinite(gamma)) throw InvalidInput("rotation angle is not finite");
  return Mat2::rotation(-gamma) * a * Mat2::rotation(gamma);
}

Mat2 reflect_conjugate(const Mat2& a) { return {a.a11, -a.a12, -a.a21, a.a22}; }

double symmetric_part_reactivity(const Mat2& a) {
  Eigen::Matrix2d h;
  const double off = 0.5 * (a.a12 + a.a21);
  h << a.a11, off, off, a.a22;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

}  // namespace reactlin
