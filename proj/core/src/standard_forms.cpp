#include "reactlin/standard_forms.hpp"

#include <cmath>
#include <variant>

#include "reactlin/error.hpp"
#include "reactlin/spectra.hpp"

namespace reactlin {

namespace {

// gamma and gamma + pi give the same conjugate; keep the one nearest zero.
double minimal_gamma(double gamma) {
  double g = AngleModPi::normalize(gamma);
  if (g > kPi / 2.0) g -= kPi;
  return g;
}

StandardFormResult make(const Mat2& a, FormKind kind, double gamma) {
  const double g = minimal_gamma(gamma);
  return {kind, rotate_conjugate(a, g), g};
}

RTParams require_amplitude(const Mat2& a, std::string_view what) {
  RTParams rt = decompose(a);
  if (!rt.theta_R) {
    throw Inapplicable(std::string(what) + ": p = 0, R and T are constant and have no maximum");
  }
  return rt;
}

ortho::DistinctReal require_ortho(const RTParams& rt) {
  const OrthoStructure os = ortho_structure(rt);
  const auto* d = std::get_if<ortho::DistinctReal>(&os);
  if (!d) throw Inapplicable("R-zeroed form needs two distinct real orthovalues");
  return *d;
}

eigen::DistinctReal require_eigen(const RTParams& rt) {
  const EigenStructure es = eigen_structure(rt);
  const auto* d = std::get_if<eigen::DistinctReal>(&es);
  if (!d) throw Inapplicable("T-zeroed form needs two distinct real eigenvalues");
  return *d;
}

}  // namespace

std::string_view to_string(FormKind k) {
  switch (k) {
    case FormKind::RCentered: return "r_centered";
    case FormKind::TCentered: return "t_centered";
    case FormKind::RZeroed: return "r_zeroed";
    case FormKind::TZeroed: return "t_zeroed";
  }
  return "unknown";
}

StandardFormResult to_r_centered(const Mat2& a) {
  const RTParams rt = require_amplitude(a, "R-centered form");
  return make(a, FormKind::RCentered, rt.theta_R->value());
}

StandardFormResult to_t_centered(const Mat2& a) {
  const RTParams rt = require_amplitude(a, "T-centered form");
  return make(a, FormKind::TCentered, rt.theta_T()->value());
}

StandardFormResult to_r_zeroed(const Mat2& a) {
  const RTParams rt = decompose(a);
  const ortho::DistinctReal d = require_ortho(rt);
  // phi1 is where R crosses zero upwards
  return make(a, FormKind::RZeroed, rt.theta_R->value() - d.delta_R);
}

StandardFormResult to_t_zeroed(const Mat2& a) {
  const RTParams rt = decompose(a);
  const eigen::DistinctReal d = require_eigen(rt);
  // theta2 is where T crosses zero upwards
  return make(a, FormKind::TZeroed, rt.theta_R->value() - kPi / 4.0 - d.delta_T);
}

StandardFormResult to_form(const Mat2& a, FormKind kind) {
  switch (kind) {
    case FormKind::RCentered: return to_r_centered(a);
    case FormKind::TCentered: return to_t_centered(a);
    case FormKind::RZeroed: return to_r_zeroed(a);
    case FormKind::TZeroed: return to_t_zeroed(a);
  }
  throw InvalidInput("unknown form kind");
}

Mat2 form_template(const Mat2& a, FormKind kind) {
  switch (kind) {
    case FormKind::RCentered: {
      const RTParams rt = require_amplitude(a, "R-centered form");
      return {rt.rho1(), -rt.m_T, rt.m_T, rt.rho2()};
    }
    case FormKind::TCentered: {
      const RTParams rt = require_amplitude(a, "T-centered form");
      return {rt.m_R, -rt.tau2(), rt.tau1(), rt.m_R};
    }
    case FormKind::RZeroed: {
      const RTParams rt = decompose(a);
      const ortho::DistinctReal d = require_ortho(rt);
      return {0.0, -d.mu2, d.mu1, 2.0 * rt.m_R};
    }
    case FormKind::TZeroed: {
      const RTParams rt = decompose(a);
      const eigen::DistinctReal d = require_eigen(rt);
      return {d.lambda2, -2.0 * rt.m_T, 0.0, d.lambda1};
    }
  }
  throw InvalidInput("unknown form kind");
}

bool verify_form(const Mat2& a, FormKind kind) {
  if (!a.is_finite()) return false;
  const double tol = 1e-9 * (1.0 + a.max_abs());
  switch (kind) {
    case FormKind::RCentered:
      // R(0) = a11 must be the maximum m_R + p
      return std::abs(a.a11 - decompose(a).rho1()) <= tol;
    case FormKind::TCentered:
      return std::abs(a.a21 - decompose(a).tau1()) <= tol;
    case FormKind::RZeroed:
      // R(0) = a11, R'(0) = a12 + a21
      return std::abs(a.a11) <= tol && a.a12 + a.a21 >= -tol;
    case FormKind::TZeroed:
      // T(0) = a21, T'(0) = a22 - a11
      return std::abs(a.a21) <= tol && a.a22 - a.a11 >= -tol;
  }
  return false;
}

}  // namespace reactlin
