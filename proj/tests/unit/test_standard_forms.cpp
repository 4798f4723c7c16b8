#include <cmath>
#include <variant>

#include "doctest.h"
#include "oracle.hpp"
#include "reactlin/error.hpp"
#include "reactlin/spectra.hpp"
#include "reactlin/standard_forms.hpp"

using namespace reactlin;

namespace {

constexpr FormKind kAll[] = {FormKind::RCentered, FormKind::TCentered, FormKind::RZeroed,
                             FormKind::TZeroed};

bool applicable(const Mat2& a, FormKind k) {
  try {
    (void)to_form(a, k);
    return true;
  } catch (const Inapplicable&) {
    return false;
  }
}

}  // namespace

TEST_CASE("R-centered examples") {
  const StandardFormResult r = to_r_centered({-1, -5, 0, -3});
  const double rho1 = -2 + std::sqrt(29.0) / 2;
  const double rho2 = -2 - std::sqrt(29.0) / 2;
  CHECK(max_abs_diff(r.matrix, {rho1, -2.5, 2.5, rho2}) < 1e-12);
  CHECK(r.kind == FormKind::RCentered);
  CHECK(r.gamma > -kPi);
  CHECK(r.gamma <= kPi);
  CHECK(max_abs_diff(r.matrix, rotate_conjugate({-1, -5, 0, -3}, r.gamma)) == 0.0);

  const StandardFormResult s = to_r_centered({2, 1, 1, -3});
  CHECK(std::abs(s.matrix.a12) < 1e-12);
  CHECK(std::abs(s.matrix.a21) < 1e-12);

  CHECK_THROWS_AS(to_r_centered(Mat2::scalar(2.0)), Inapplicable);
}

TEST_CASE("T-centered examples") {
  const Mat2 lemma{-2.414213562373095, 5.82842712474619, 1.0, -2.414213562373095};
  CHECK(verify_form(lemma, FormKind::TCentered));
  const StandardFormResult t = to_t_centered(lemma);
  CHECK(max_abs_diff(t.matrix, lemma) < 1e-12);

  const StandardFormResult s = to_t_centered({1, 3, 3, -2});
  const RTParams rt = decompose({1, 3, 3, -2});
  CHECK(max_abs_diff(s.matrix, {rt.m_R, rt.p, rt.p, rt.m_R}) < 1e-12);
  CHECK_THROWS_AS(to_t_centered(Mat2::scalar(-1.0)), Inapplicable);
}

TEST_CASE("R-zeroed examples") {
  const StandardFormResult r = to_r_zeroed({-1, -8, 0, -3});
  CHECK(max_abs_diff(r.matrix, {0, -(4 - std::sqrt(13.0)), 4 + std::sqrt(13.0), -4}) < 1e-12);
  CHECK_THROWS_AS(to_r_zeroed({-3, 0.1, 0, -3}), Inapplicable);
  const StandardFormResult z = to_r_zeroed({1, 2, -3, -1});
  CHECK(std::abs(z.matrix.a11) < 1e-12);
  CHECK(std::abs(z.matrix.a22) < 1e-12);
}

TEST_CASE("T-zeroed examples") {
  const StandardFormResult t = to_t_zeroed({-1, -8, 0, -3});
  CHECK(max_abs_diff(t.matrix, {-3, -8, 0, -1}) < 1e-12);
  const double s17 = std::sqrt(17.0);
  const StandardFormResult f = to_t_zeroed({-2, 1, 2, 1});
  CHECK(max_abs_diff(f.matrix, {(-1 - s17) / 2, -1, 0, (-1 + s17) / 2}) < 1e-12);
  CHECK_THROWS_AS(to_t_zeroed({0.7, -4, 4, -4.7}), Inapplicable);
}

TEST_CASE("verify_form") {
  CHECK(verify_form({-3, -8, 0, -1}, FormKind::TZeroed));
  CHECK_FALSE(verify_form({-1, -8, 0, -3}, FormKind::TZeroed));
  CHECK_FALSE(verify_form({-1, -8, 0, -3}, FormKind::RCentered));
  CHECK(verify_form({0, -1, 2, 3}, FormKind::RZeroed));
  CHECK_FALSE(verify_form({0, -3, 2, 3}, FormKind::RZeroed));  // R'(0) < 0
  CHECK_FALSE(verify_form({NAN, 0, 0, 0}, FormKind::RZeroed));
  oracle::Rng rng(31);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 a = rng.matrix();
    for (FormKind k : kAll) {
      if (applicable(a, k)) CHECK(verify_form(to_form(a, k).matrix, k));
    }
  }
}

TEST_CASE("forms match templates and keep every invariant on 10^3 matrices") {
  oracle::Rng rng(32);
  int zeroed = 0;
  for (int i = 0; i < 1000; ++i) {
    const Mat2 a = rng.matrix();
    const RTParams ra = decompose(a);
    const EigenStructure ea = eigen_structure(ra);
    const OrthoStructure oa = ortho_structure(ra);
    for (FormKind k : kAll) {
      if (!applicable(a, k)) continue;
      zeroed += (k == FormKind::RZeroed || k == FormKind::TZeroed);
      const StandardFormResult f = to_form(a, k);
      CHECK(max_abs_diff(f.matrix, form_template(a, k)) <= 1e-10);
      CHECK(f.gamma > -kPi);
      CHECK(f.gamma <= kPi);

      const RTParams rb = decompose(f.matrix);
      const double tol = 1e-10;
      CHECK(std::abs(rb.m_R - ra.m_R) <= tol);
      CHECK(std::abs(rb.m_T - ra.m_T) <= tol);
      CHECK(std::abs(rb.p - ra.p) <= tol);
      CHECK(std::abs(rb.rho1() - ra.rho1()) <= tol);
      CHECK(std::abs(rb.rho2() - ra.rho2()) <= tol);
      CHECK(std::abs(rb.tau1() - ra.tau1()) <= tol);
      CHECK(std::abs(rb.tau2() - ra.tau2()) <= tol);

      const EigenStructure eb = eigen_structure(rb);
      CHECK(ea.index() == eb.index());
      const EigenvaluePair va = eigenvalues(ea), vb = eigenvalues(eb);
      CHECK(std::abs(va.re1 - vb.re1) <= tol);
      CHECK(std::abs(va.re2 - vb.re2) <= tol);
      CHECK(std::abs(std::abs(va.im1) - std::abs(vb.im1)) <= tol);
      if (const auto* da = std::get_if<eigen::DistinctReal>(&ea)) {
        const auto& db = std::get<eigen::DistinctReal>(eb);
        CHECK(std::abs(da->delta_T - db.delta_T) <= 1e-10);
        // eigen angles move back by gamma
        CHECK(AngleModPi::distance(db.theta1.value(), da->theta1.value() - f.gamma) <= 1e-10);
        CHECK(AngleModPi::distance(db.theta2.value(), da->theta2.value() - f.gamma) <= 1e-10);
      }
      const OrthoStructure ob = ortho_structure(rb);
      CHECK(oa.index() == ob.index());
      if (const auto* qa = std::get_if<ortho::DistinctReal>(&oa)) {
        const auto& qb = std::get<ortho::DistinctReal>(ob);
        CHECK(std::abs(qa->mu1 - qb.mu1) <= tol);
        CHECK(std::abs(qa->mu2 - qb.mu2) <= tol);
        CHECK(std::abs(qa->delta_R - qb.delta_R) <= 1e-10);
        CHECK(AngleModPi::distance(qb.phi1.value(), qa->phi1.value() - f.gamma) <= 1e-10);
        CHECK(AngleModPi::distance(qb.phi2.value(), qa->phi2.value() - f.gamma) <= 1e-10);
      }
    }
  }
  CHECK(zeroed > 500);
}

TEST_CASE("T-centering an R-centered matrix gives the same T-centered matrix") {
  oracle::Rng rng(33);
  for (int i = 0; i < 1000; ++i) {
    const Mat2 a = rng.matrix();
    const Mat2 direct = to_t_centered(a).matrix;
    const Mat2 via = to_t_centered(to_r_centered(a).matrix).matrix;
    CHECK(max_abs_diff(direct, via) <= 1e-10);
  }
}
