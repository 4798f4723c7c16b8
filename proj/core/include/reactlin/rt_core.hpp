#pragma once

#include <array>
#include <optional>

namespace reactlin {

inline constexpr double kPi = 3.14159265358979323846;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  double norm() const;
  /// Counter-clockwise quarter turn, J*v.
  Vec2 perp() const { return {-y, x}; }

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
};

/// Unit vector at angle theta.
Vec2 unit_vector(double theta);

/// Real 2x2 coefficient matrix, row-major.
struct Mat2 {
  double a11 = 0.0;
  double a12 = 0.0;
  double a21 = 0.0;
  double a22 = 0.0;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 scalar(double c) { return {c, 0.0, 0.0, c}; }
  /// Quarter-turn rotation [[0,-1],[1,0]].
  static Mat2 rotation_j() { return {0.0, -1.0, 1.0, 0.0}; }
  /// Counter-clockwise rotation by gamma.
  static Mat2 rotation(double gamma);

  double trace() const { return a11 + a22; }
  double det() const { return a11 * a22 - a12 * a21; }
  Mat2 transpose() const { return {a11, a21, a12, a22}; }
  /// Largest absolute entry.
  double max_abs() const;
  double frobenius() const;
  bool is_finite() const;

  Vec2 operator*(Vec2 v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
            a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
  }
  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
  }
  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
  }
  friend Mat2 operator*(double s, const Mat2& a) {
    return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;

  std::array<double, 4> entries() const { return {a11, a12, a21, a22}; }
};

/// Largest entrywise absolute difference.
double max_abs_diff(const Mat2& a, const Mat2& b);

/// Angle in [0, pi). Directions of lines through the origin live here.
class AngleModPi {
 public:
  AngleModPi() = default;
  explicit AngleModPi(double radians) : value_(normalize(radians)) {}

  double value() const { return value_; }

  /// Maps any real into [0, pi). normalize(normalize(x)) == normalize(x).
  static double normalize(double radians);
  /// Shortest distance between two directions, in [0, pi/2].
  static double distance(double a, double b);

  friend bool operator==(AngleModPi, AngleModPi) = default;

 private:
  double value_ = 0.0;
};

/// The radial/tangential parameters of a 2x2 matrix:
///
///   R(theta) = m_R + p cos(2(theta - theta_R))   radial velocity on S^1
///   T(theta) = m_T - p sin(2(theta - theta_R))   angular velocity on S^1
///
/// with A X = R(theta) X + T(theta) X_perp for X = r (cos theta, sin theta).
/// theta_R is only defined when the amplitude p is nonzero.
struct RTParams {
  double m_R = 0.0;
  double m_T = 0.0;
  double p = 0.0;
  std::optional<AngleModPi> theta_R;

  /// Location of the maximum of T; theta_R - pi/4.
  std::optional<AngleModPi> theta_T() const;
  double rho1() const { return m_R + p; }
  double rho2() const { return m_R - p; }
  double tau1() const { return m_T + p; }
  double tau2() const { return m_T - p; }

  /// Threshold below which p counts as zero: 1e-12 (1 + |m_R| + |m_T|).
  double zero_p_tolerance() const;
  /// p >= 0 and theta_R present iff p > 0, all fields finite.
  bool valid() const;
};

/// Splits A into its radial and tangential sinusoids. Throws InvalidInput on
/// non-finite entries.
RTParams decompose(const Mat2& a);

/// Inverse of decompose.
Mat2 reconstruct(const RTParams& rt);

double eval_radial(const RTParams& rt, double theta);
double eval_tangential(const RTParams& rt, double theta);
/// dR/dtheta and dT/dtheta.
double eval_radial_derivative(const RTParams& rt, double theta);
double eval_tangential_derivative(const RTParams& rt, double theta);

/// B = M_gamma^-1 A M_gamma. R_B(theta) = R_A(theta + gamma), same for T.
Mat2 rotate_conjugate(const Mat2& a, double gamma);

/// S A S with S = diag(1, -1). Negates m_T and keeps m_R, p and every
/// solution norm.
Mat2 reflect_conjugate(const Mat2& a);

/// Largest eigenvalue of the symmetric part (A + A^T)/2, computed with a
/// general symmetric eigensolver. Equals m_R + p.
double symmetric_part_reactivity(const Mat2& a);

}  // namespace reactlin
