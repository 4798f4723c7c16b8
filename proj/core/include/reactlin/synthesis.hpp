#pragma once

#include <optional>

#include "reactlin/rt_core.hpp"

namespace reactlin {

/// T-centered matrix with reactivity radius delta_R in (0, pi/2),
/// eigenvector separation delta_T in [0, pi/2) and reactivity rho > 0:
///
///   rho / (1 - cos 2dR) * [[-cos 2dR, 1 + cos 2dT], [1 - cos 2dT, -cos 2dR]]
///
/// Throws InvalidInput outside those ranges.
Mat2 from_deltas(double delta_R, double delta_T, double rho);

/// Reactive attractor with eigenvalues lambda1, lambda2 < 0 (any order) and
/// reactivity rho > 0. rho can be arbitrarily large.
Mat2 attractor_with_eigenvalues(double lambda1, double lambda2, double rho);

/// Reactive attractor whose eigendirections are the lines at theta1 and
/// theta2 (the one at theta1 carries the larger eigenvalue after the pair is
/// relabelled so that theta1 - theta2 lies in (0, pi) mod pi). The lines must
/// be neither parallel nor orthogonal. delta_R defaults to the midpoint of
/// the admissible range (0, |delta_T - pi/4|); an override must lie inside it.
Mat2 attractor_with_eigenvectors(double theta1, double theta2, double rho,
                                 std::optional<double> delta_R = std::nullopt);

}  // namespace reactlin
