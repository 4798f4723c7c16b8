#include <cmath>
#include <variant>

#include "doctest.h"
#include "oracle.hpp"
#include "reactlin/error.hpp"
#include "reactlin/spectra.hpp"
#include "reactlin/standard_forms.hpp"
#include "reactlin/synthesis.hpp"

using namespace reactlin;

namespace {
double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
}  // namespace

TEST_CASE("from_deltas examples") {
  const Mat2 a = from_deltas(kPi / 8, kPi / 8, 1.0);
  const double r2 = std::sqrt(2.0);
  CHECK(max_abs_diff(a, {-(1 + r2), 3 + 2 * r2, 1.0, -(1 + r2)}) < 1e-13);
  CHECK(verify_form(a, FormKind::TCentered));

  // delta_R near pi/2: prefactor tends to rho / 2
  const Mat2 b = from_deltas(kPi / 2 - 1e-9, 0.3, 4.0);
  CHECK(b.max_abs() < 4.0);
  CHECK(b.a11 == doctest::Approx(2.0).epsilon(1e-8));

  const Mat2 c = from_deltas(kPi / 8, 0.0, 1.0);
  CHECK(std::holds_alternative<eigen::RepeatedDefective>(eigen_structure(decompose(c))));
}

TEST_CASE("from_deltas rejects out-of-range parameters") {
  CHECK_THROWS_AS(from_deltas(0.0, 0.1, 1.0), InvalidInput);
  CHECK_THROWS_AS(from_deltas(kPi / 2, 0.1, 1.0), InvalidInput);
  CHECK_THROWS_AS(from_deltas(0.1, -0.1, 1.0), InvalidInput);
  CHECK_THROWS_AS(from_deltas(0.1, kPi / 2, 1.0), InvalidInput);
  CHECK_THROWS_AS(from_deltas(0.1, 0.1, 0.0), InvalidInput);
  CHECK_THROWS_AS(from_deltas(NAN, 0.1, 1.0), InvalidInput);
}

TEST_CASE("from_deltas round trip on 10^3 draws") {
  oracle::Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const double dR = rng.uniform(1e-2, kPi / 2 - 1e-2);
    const double dT = rng.uniform(1e-2, kPi / 2 - 1e-2);
    const double rho = rng.uniform(0.1, 10.0);
    const Mat2 a = from_deltas(dR, dT, rho);
    const RTParams rt = decompose(a);
    const auto o = std::get<ortho::DistinctReal>(ortho_structure(rt));
    const auto e = std::get<eigen::DistinctReal>(eigen_structure(rt));
    CHECK(rel(o.delta_R, dR) <= 1e-9);
    CHECK(rel(e.delta_T, dT) <= 1e-9);
    CHECK(rel(rt.rho1(), rho) <= 1e-9);
    CHECK(verify_form(a, FormKind::TCentered));
  }
}

TEST_CASE("from_deltas near the edges is limited by conditioning, not by the formula") {
  // cos 2 delta carries delta only to ~1e-16 / delta^2 relative, so that is
  // the best any measurement from the matrix entries can do.
  for (double d : {1e-3, 3e-4, 1e-4}) {
    const Mat2 a = from_deltas(d, d, 1.0);
    const RTParams rt = decompose(a);
    const auto o = std::get<ortho::DistinctReal>(ortho_structure(rt));
    const auto e = std::get<eigen::DistinctReal>(eigen_structure(rt));
    const double bound = 1e-15 / (d * d);
    CHECK(rel(o.delta_R, d) <= bound);
    CHECK(rel(e.delta_T, d) <= bound);
    CHECK(rel(rt.rho1(), 1.0) <= bound);
  }
}

TEST_CASE("attractor_with_eigenvalues") {
  const Mat2 a = attractor_with_eigenvalues(-1, -3, 2.1231056256176605);
  const RTParams rt = decompose(a);
  const auto e = std::get<eigen::DistinctReal>(eigen_structure(rt));
  CHECK(e.lambda1 == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(e.lambda2 == doctest::Approx(-3.0).epsilon(1e-12));
  CHECK(rt.rho1() == doctest::Approx(2.1231056256176605).epsilon(1e-12));
  // same invariants as [[-1,-8],[0,-3]], so a rotation of it (up to reflection)
  const RTParams a1 = decompose({-1, -8, 0, -3});
  CHECK(rt.p == doctest::Approx(a1.p).epsilon(1e-12));
  CHECK(std::abs(rt.m_T) == doctest::Approx(std::abs(a1.m_T)).epsilon(1e-12));

  const RTParams rep = decompose(attractor_with_eigenvalues(-1, -1, 0.5));
  const EigenStructure rep_es = eigen_structure(rep);
  const auto* d = std::get_if<eigen::RepeatedDefective>(&rep_es);
  REQUIRE(d);
  CHECK(d->lambda == doctest::Approx(-1.0));
  CHECK(rep.rho1() == doctest::Approx(0.5));

  const RTParams big = decompose(attractor_with_eigenvalues(-1, -3, 1000));
  const auto eb = std::get<eigen::DistinctReal>(eigen_structure(big));
  CHECK(std::abs(eb.lambda1 + 1) <= 1e-9 * 4);
  CHECK(std::abs(eb.lambda2 + 3) <= 1e-9 * 4);
  CHECK(rel(big.rho1(), 1000) <= 1e-9);
  CHECK(transient_summary(big).classification == Classification::ReactiveAttractor);

  // either order is accepted
  CHECK(max_abs_diff(attractor_with_eigenvalues(-3, -1, 2), attractor_with_eigenvalues(-1, -3, 2)) ==
        0.0);
  CHECK_THROWS_AS(attractor_with_eigenvalues(0.0, -1, 1), InvalidInput);
  CHECK_THROWS_AS(attractor_with_eigenvalues(-1, -2, 0.0), InvalidInput);
}

TEST_CASE("attractor_with_eigenvalues population") {
  oracle::Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const double l1 = rng.uniform(-5, -1e-2);
    const double l2 = l1 - rng.uniform(1e-2, 5);
    const double rho = rng.uniform(1e-2, 100);
    const RTParams rt = decompose(attractor_with_eigenvalues(l1, l2, rho));
    CHECK(transient_summary(rt).classification == Classification::ReactiveAttractor);
    const EigenvaluePair ev = eigenvalues(eigen_structure(rt));
    CHECK(std::abs(ev.re1 - l1) <= 1e-9 * (1 + std::abs(l2)));
    CHECK(std::abs(ev.re2 - l2) <= 1e-9 * (1 + std::abs(l2)));
    CHECK(rel(rt.rho1(), rho) <= 1e-9);
  }
}

TEST_CASE("attractor_with_eigenvectors") {
  const Mat2 a = attractor_with_eigenvectors(kPi / 3, kPi / 6, 5.0);
  const RTParams rt = decompose(a);
  CHECK(transient_summary(rt).classification == Classification::ReactiveAttractor);
  CHECK(rt.rho1() == doctest::Approx(5.0).epsilon(1e-12));
  const auto e = std::get<eigen::DistinctReal>(eigen_structure(rt));
  CHECK(AngleModPi::distance(e.theta1.value(), kPi / 3) < 1e-12);
  CHECK(AngleModPi::distance(e.theta2.value(), kPi / 6) < 1e-12);

  CHECK_THROWS_AS(attractor_with_eigenvectors(kPi / 2, 0.0, 1.0), InvalidInput);
  CHECK_THROWS_AS(attractor_with_eigenvectors(0.4, 0.4, 1.0), InvalidInput);
  CHECK_THROWS_AS(attractor_with_eigenvectors(0.4, 0.4 + kPi, 1.0), InvalidInput);
  CHECK_THROWS_AS(attractor_with_eigenvectors(0.4, 0.1, -1.0), InvalidInput);
  CHECK_THROWS_AS(attractor_with_eigenvectors(kPi / 3, kPi / 6, 1.0, 0.53), InvalidInput);
  const Mat2 o = attractor_with_eigenvectors(kPi / 3, kPi / 6, 1.0, 0.1);
  const auto oo = std::get<ortho::DistinctReal>(ortho_structure(decompose(o)));
  CHECK(oo.delta_R == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("attractor_with_eigenvectors population") {
  oracle::Rng rng(43);
  int tested = 0;
  for (int i = 0; i < 1000; ++i) {
    const double t1 = rng.uniform(-4, 4);
    const double t2 = rng.uniform(-4, 4);
    const double rho = rng.uniform(0.1, 10);
    const double d = AngleModPi::normalize(t1 - t2);
    // stay clear of the excluded parallel / orthogonal pairs
    if (d < 1e-2 || kPi - d < 1e-2 || std::abs(d - kPi / 2) < 1e-2) continue;
    ++tested;
    const RTParams rt = decompose(attractor_with_eigenvectors(t1, t2, rho));
    CHECK(transient_summary(rt).classification == Classification::ReactiveAttractor);
    const auto e = std::get<eigen::DistinctReal>(eigen_structure(rt));
    CHECK(e.lambda1 < 0.0);
    CHECK(e.lambda2 < 0.0);
    CHECK(AngleModPi::distance(e.theta1.value(), t1) <= 1e-9);
    CHECK(AngleModPi::distance(e.theta2.value(), t2) <= 1e-9);
    CHECK(rel(rt.rho1(), rho) <= 1e-9);
  }
  CHECK(tested > 900);
}
