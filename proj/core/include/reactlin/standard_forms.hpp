#pragma once

#include <string_view>

#include "reactlin/rt_core.hpp"

namespace reactlin {

enum class FormKind { RCentered, TCentered, RZeroed, TZeroed };

std::string_view to_string(FormKind k);

/// A rotation conjugate of some matrix. matrix == rotate_conjugate(original, gamma).
struct StandardFormResult {
  FormKind kind = FormKind::RCentered;
  Mat2 matrix;
  double gamma = 0.0;  // smallest-magnitude representative mod pi
};

/// Max of R moved to theta = 0. Throws Inapplicable when p == 0.
StandardFormResult to_r_centered(const Mat2& a);
/// Max of T moved to theta = 0. Throws Inapplicable when p == 0.
StandardFormResult to_t_centered(const Mat2& a);
/// Entrance orthovector (R = 0, R' > 0) moved to theta = 0. Needs two real
/// orthovalues, otherwise Inapplicable.
StandardFormResult to_r_zeroed(const Mat2& a);
/// Repelling eigendirection (T = 0, T' > 0) moved to theta = 0. Needs two
/// distinct real eigenvalues, otherwise Inapplicable.
StandardFormResult to_t_zeroed(const Mat2& a);

StandardFormResult to_form(const Mat2& a, FormKind kind);

/// The form's matrix assembled from invariants alone (no rotation):
///   RC [[rho1, -m_T], [m_T, rho2]]     TC [[m_R, -tau2], [tau1, m_R]]
///   R0 [[0, -mu2], [mu1, 2 m_R]]       T0 [[lambda2, -2 m_T], [0, lambda1]]
/// Same applicability rules as to_form.
Mat2 form_template(const Mat2& a, FormKind kind);

/// Whether `a` already satisfies the defining condition of `kind`,
/// including the derivative sign for the zeroed forms. Tolerance 1e-9,
/// relative to the entry scale.
bool verify_form(const Mat2& a, FormKind kind);

}  // namespace reactlin
