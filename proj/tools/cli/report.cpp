#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <random>
#include <thread>
#include <variant>

#include "reactlin/amplification.hpp"
#include "reactlin/error.hpp"
#include "reactlin/spectra.hpp"
#include "reactlin/standard_forms.hpp"
#include "reactlin/synthesis.hpp"

namespace reactlin::cli {

namespace {

template <class... F>
struct Overload : F... {
  using F::operator()...;
};
template <class... F>
Overload(F...) -> Overload<F...>;

Json rt_json(const RTParams& rt) {
  Json j;
  j["m_R"] = rt.m_R;
  j["m_T"] = rt.m_T;
  j["p"] = rt.p;
  if (rt.theta_R) {
    j["theta_R"] = rt.theta_R->value();
    j["theta_T"] = rt.theta_T()->value();
  }
  j["rho1"] = rt.rho1();
  j["rho2"] = rt.rho2();
  j["tau1"] = rt.tau1();
  j["tau2"] = rt.tau2();
  return j;
}

Json eigen_json(const EigenStructure& es) {
  return std::visit(
      Overload{
          [](const eigen::DistinctReal& d) {
            return Json{{"kind", "distinct_real"}, {"lambda1", d.lambda1},
                        {"lambda2", d.lambda2},    {"theta1", d.theta1.value()},
                        {"theta2", d.theta2.value()}, {"delta_T", d.delta_T},
                        {"p_R", d.p_R}};
          },
          [](const eigen::ComplexPair& c) {
            return Json{{"kind", "complex_pair"}, {"re", c.re}, {"im", c.im}};
          },
          [](const eigen::RepeatedFull& r) {
            return Json{{"kind", "repeated_full"}, {"lambda", r.lambda}};
          },
          [](const eigen::RepeatedDefective& r) {
            return Json{{"kind", "repeated_defective"}, {"lambda", r.lambda},
                        {"theta0", r.theta0.value()}};
          }},
      es);
}

Json ortho_json(const OrthoStructure& os) {
  return std::visit(
      Overload{
          [](const ortho::DistinctReal& d) {
            return Json{{"kind", "distinct_real"}, {"mu1", d.mu1},
                        {"mu2", d.mu2},            {"phi1", d.phi1.value()},
                        {"phi2", d.phi2.value()},  {"delta_R", d.delta_R},
                        {"p_T", d.p_T}};
          },
          [](const ortho::NoReal&) { return Json{{"kind", "no_real"}}; },
          [](const ortho::AllOrtho& a) { return Json{{"kind", "all_ortho"}, {"mu", a.mu}}; },
          [](const ortho::RepeatedOrtho& r) {
            return Json{{"kind", "repeated_ortho"}, {"mu", r.mu}, {"phi0", r.phi0.value()}};
          }},
      os);
}

Json reactive_set_json(const ReactiveSet& s) {
  switch (s.kind) {
    case ReactiveSet::Kind::Arc:
      return Json{{"kind", "arc"}, {"lower", s.lower}, {"upper", s.upper}};
    case ReactiveSet::Kind::Full: return Json{{"kind", "full"}};
    case ReactiveSet::Kind::Empty: break;
  }
  return Json{{"kind", "empty"}};
}

Json phase_line_json(const PhaseLine& line) {
  Json eq = Json::array();
  for (const auto& e : line.equilibria) {
    eq.push_back(Json{{"angle", e.angle.value()}, {"stability", to_string(e.stability)}});
  }
  return Json{{"equilibria", eq}, {"every_angle_equilibrium", line.every_angle_equilibrium}};
}

Json forms_json(const Mat2& a) {
  Json j;
  for (FormKind k : {FormKind::RCentered, FormKind::TCentered, FormKind::RZeroed,
                     FormKind::TZeroed}) {
    try {
      const StandardFormResult f = to_form(a, k);
      j[std::string(to_string(k))] = Json{{"gamma", f.gamma}, {"matrix", matrix_json(f.matrix)}};
    } catch (const Inapplicable& e) {
      j[std::string(to_string(k))] = Json{{"inapplicable", e.what()}};
    }
  }
  return j;
}

double relative_difference(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

Json numeric_json(const AmplificationResult& r) {
  Json j{{"rho_max", r.rho_max}};
  if (r.t_max) j["t_max"] = *r.t_max;
  if (r.theta_entry) j["theta_entry"] = r.theta_entry->value();
  return j;
}

Json amplification_json(const Mat2& a, const EigenStructure& es, const AnalyzeOptions& opts) {
  Json j;
  Json bounds{{"ortho", rho_max_bound_ortho(a)}};
  if (std::holds_alternative<eigen::DistinctReal>(es)) bounds["eigen"] = rho_max_bound_eigen(a);
  NumericOptions nopts;
  nopts.step = opts.step;
  try {
    ClosedFormOptions copts;
    copts.strict = opts.strict;
    copts.experimental_complex = opts.experimental_complex;
    const AmplificationResult r = rho_max_closed(a, copts);
    j["status"] = "ok";
    j["method"] = to_string(r.method);
    j["rho_max"] = r.rho_max;
    if (r.t_max) j["t_max"] = *r.t_max;
    if (r.theta_entry) j["theta_entry"] = r.theta_entry->value();
    if (r.method != AmplificationMethod::NumericSweep) {
      if (!std::holds_alternative<eigen::ComplexPair>(es)) {
        Json closed{{"lambda_mu", rho_max_lambda_mu(a)}, {"ms", rho_max_ms(a)}};
        if (std::holds_alternative<eigen::DistinctReal>(es)) closed["deltas"] = rho_max_deltas(a);
        j["closed_forms"] = closed;
      }
      const AmplificationResult n = rho_max_numeric(a, nopts);
      Json check = numeric_json(n);
      check["relative_difference"] = relative_difference(r.rho_max, n.rho_max);
      j["numeric_check"] = check;
    }
  } catch (const NeedsNumeric& e) {
    j["status"] = "needs_numeric";
    j["reason"] = e.what();
  }
  j["bounds"] = bounds;
  return j;
}

}  // namespace

Json matrix_json(const Mat2& a) {
  return Json::array({Json::array({a.a11, a.a12}), Json::array({a.a21, a.a22})});
}

Json analyze_report(const Mat2& a, const AnalyzeOptions& opts) {
  const RTParams rt = decompose(a);
  const EigenStructure es = eigen_structure(rt);
  const OrthoStructure os = ortho_structure(rt);
  const TransientSummary s = transient_summary(rt);

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "analyze";
  j["matrix"] = matrix_json(a);
  j["rt"] = rt_json(rt);
  j["eigen"] = eigen_json(es);
  j["ortho"] = ortho_json(os);
  j["transient"] = Json{{"rho1", s.rho1},
                        {"rho2", s.rho2},
                        {"classification", to_string(s.classification)},
                        {"is_reactive", s.is_reactive},
                        {"is_attenuating", s.is_attenuating},
                        {"reactive_set", reactive_set_json(s.reactive_set)}};
  j["phase_line"] = phase_line_json(angular_phase_line(rt));
  j["standard_forms"] = forms_json(a);
  if (s.classification == Classification::ReactiveAttractor) {
    j["amplification"] = amplification_json(a, es, opts);
  }
  return j;
}

std::vector<PortraitRow> portrait(const Mat2& a, int n_theta) {
  if (n_theta < 4) throw InvalidInput("portrait needs at least 4 angles");
  const RTParams rt = decompose(a);
  std::vector<PortraitRow> rows;
  rows.reserve(static_cast<std::size_t>(n_theta));
  for (int i = 0; i < n_theta; ++i) {
    const double th = kPi * i / n_theta;
    const Vec2 v = a * unit_vector(th);
    rows.push_back({th, eval_radial(rt, th), eval_tangential(rt, th), v.x, v.y});
  }
  return rows;
}

SweepResult sweep_k(const Mat2& a, const SweepOptions& opts) {
  if (opts.n < 1) throw InvalidInput("sweep needs n >= 1");
  if (!(opts.k_max >= opts.k_min)) throw InvalidInput("k range is empty");
  SweepResult res;
  res.analytic = repulsion_window(a);

  const auto n = static_cast<std::size_t>(opts.n);
  res.rows.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    res.rows[i].k = n == 1 ? opts.k_min
                           : opts.k_min + (opts.k_max - opts.k_min) * static_cast<double>(i) /
                                              static_cast<double>(n - 1);
  }

  // k-points are independent; each worker takes a strided share and writes
  // only its own rows, so output order is the grid order regardless of timing.
  unsigned workers = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) {
          SweepRow& row = res.rows[i];
          row.log_slope = nonaut_log_slope({a, row.k}, opts.x0, opts.step, opts.t_end);
          row.growth = classify_growth(row.log_slope);
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }

  std::optional<std::size_t> first;
  std::size_t last = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (res.rows[i].growth == Growth::Growing) {
      if (!first) first = i;
      last = i;
    }
  }
  if (first) {
    // boundary estimate: halfway between the last decaying and first growing k
    const double lo = *first > 0 ? 0.5 * (res.rows[*first - 1].k + res.rows[*first].k)
                                 : res.rows[*first].k;
    const double hi = last + 1 < n ? 0.5 * (res.rows[last].k + res.rows[last + 1].k)
                                   : res.rows[last].k;
    res.empirical = KWindow{lo, hi};
    res.max_abs_boundary_error =
        std::max(std::abs(lo - res.analytic.lower), std::abs(hi - res.analytic.upper));
  }
  return res;
}

Json sweep_summary(const SweepResult& r, const SweepOptions& opts) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "sweep-k";
  j["analytic_window"] = Json::array({r.analytic.lower, r.analytic.upper});
  j["empirical_window"] =
      r.empirical ? Json::array({r.empirical->lower, r.empirical->upper}) : Json(nullptr);
  j["max_abs_boundary_error"] =
      r.max_abs_boundary_error ? Json(*r.max_abs_boundary_error) : Json(nullptr);
  j["k_range"] = Json::array({opts.k_min, opts.k_max});
  j["n"] = opts.n;
  j["step"] = opts.step;
  j["t_end"] = opts.t_end;
  return j;
}

Json sweep_rows(const SweepResult& r) {
  Json rows = Json::array();
  for (const SweepRow& row : r.rows) {
    rows.push_back(Json{{"k", row.k},
                        {"log_slope", row.log_slope},
                        {"classification", to_string(row.growth)}});
  }
  return rows;
}

namespace {

struct Measured {
  Json json;
  std::optional<double> delta_R, delta_T, lambda1, lambda2, theta1, theta2;
  double rho = 0.0;
  Classification cls = Classification::Degenerate;
};

Measured measure(const Mat2& m) {
  Measured out;
  const RTParams rt = decompose(m);
  const EigenStructure es = eigen_structure(rt);
  const OrthoStructure os = ortho_structure(rt);
  const TransientSummary s = transient_summary(rt);
  out.rho = s.rho1;
  out.cls = s.classification;
  out.json["rho"] = s.rho1;
  if (const auto* o = std::get_if<ortho::DistinctReal>(&os)) {
    out.delta_R = o->delta_R;
    out.json["delta_R"] = o->delta_R;
  }
  if (const auto* e = std::get_if<eigen::DistinctReal>(&es)) {
    out.delta_T = e->delta_T;
    out.lambda1 = e->lambda1;
    out.lambda2 = e->lambda2;
    out.theta1 = e->theta1.value();
    out.theta2 = e->theta2.value();
    out.json["delta_T"] = e->delta_T;
    out.json["lambda1"] = e->lambda1;
    out.json["lambda2"] = e->lambda2;
    out.json["theta1"] = e->theta1.value();
    out.json["theta2"] = e->theta2.value();
  } else if (const auto* r = std::get_if<eigen::RepeatedDefective>(&es)) {
    out.delta_T = 0.0;
    out.lambda1 = out.lambda2 = r->lambda;
    out.json["delta_T"] = 0.0;
    out.json["lambda1"] = r->lambda;
    out.json["lambda2"] = r->lambda;
  }
  out.json["eigen_kind"] = eigen_json(es)["kind"];
  out.json["classification"] = to_string(s.classification);
  return out;
}

double rel_err(std::optional<double> got, double want) {
  if (!got) return INFINITY;
  return std::abs(*got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

Json synthesis_report(const SynthesisRequest& req) {
  Mat2 m;
  Json requested;
  std::string mode;
  switch (req.mode) {
    case SynthesisMode::Deltas:
      mode = "deltas";
      m = from_deltas(req.delta_R, req.delta_T, req.rho);
      requested = Json{{"delta_R", req.delta_R}, {"delta_T", req.delta_T}, {"rho", req.rho}};
      break;
    case SynthesisMode::Eigenvalues:
      mode = "eigenvalues";
      m = attractor_with_eigenvalues(req.lambda1, req.lambda2, req.rho);
      requested = Json{{"lambda1", std::max(req.lambda1, req.lambda2)},
                       {"lambda2", std::min(req.lambda1, req.lambda2)},
                       {"rho", req.rho}};
      break;
    case SynthesisMode::Eigenvectors:
      mode = "eigenvectors";
      m = attractor_with_eigenvectors(req.theta1, req.theta2, req.rho, req.delta_R_override);
      requested = Json{{"theta1", AngleModPi::normalize(req.theta1)},
                       {"theta2", AngleModPi::normalize(req.theta2)},
                       {"rho", req.rho}};
      if (req.delta_R_override) requested["delta_R"] = *req.delta_R_override;
      break;
  }

  const Measured got = measure(m);
  double err = rel_err(got.rho, req.rho);
  switch (req.mode) {
    case SynthesisMode::Deltas:
      err = std::max({err, rel_err(got.delta_R, req.delta_R), rel_err(got.delta_T, req.delta_T)});
      break;
    case SynthesisMode::Eigenvalues:
      err = std::max({err, rel_err(got.lambda1, std::max(req.lambda1, req.lambda2)),
                      rel_err(got.lambda2, std::min(req.lambda1, req.lambda2))});
      break;
    case SynthesisMode::Eigenvectors:
      err = std::max(err, got.theta1 ? AngleModPi::distance(*got.theta1, req.theta1) : INFINITY);
      err = std::max(err, got.theta2 ? AngleModPi::distance(*got.theta2, req.theta2) : INFINITY);
      break;
  }

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "synthesize";
  j["mode"] = mode;
  j["matrix"] = matrix_json(m);
  j["requested"] = requested;
  j["measured"] = got.json;
  j["max_relative_error"] = err;
  return j;
}

SelftestResult selftest(std::uint64_t seed, int count) {
  if (count < 1) throw InvalidInput("selftest needs a positive count");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> entry(-10.0, 10.0);
  auto random_matrix = [&] { return Mat2{entry(rng), entry(rng), entry(rng), entry(rng)}; };

  struct Check {
    const char* name;
    double tolerance;
    double max_error = 0.0;
  };
  Check bijection{"decompose_reconstruct", 1e-12};
  Check reactivity{"symmetric_part_reactivity", 1e-10};
  Check charpoly{"eigenvalues_vs_characteristic_polynomial", 1e-9};
  Check duality{"orthovalues_vs_eigenvalues_of_Jinv_A", 1e-9};
  Check synth{"from_deltas_round_trip", 1e-9};

  for (int i = 0; i < count; ++i) {
    const Mat2 a = random_matrix();
    const RTParams rt = decompose(a);
    bijection.max_error =
        std::max(bijection.max_error, max_abs_diff(reconstruct(rt), a) / (1.0 + a.max_abs()));
    reactivity.max_error =
        std::max(reactivity.max_error, std::abs(symmetric_part_reactivity(a) - rt.rho1()) /
                                           (1.0 + std::abs(rt.m_R) + rt.p));

    // roots of x^2 - tr x + det, real part / modulus compared
    const EigenvaluePair ev = eigenvalues(eigen_structure(rt));
    const double half_tr = 0.5 * a.trace();
    const double disc = half_tr * half_tr - a.det();
    const double scale = 1.0 + a.max_abs();
    if (disc >= 0.0) {
      const double big = half_tr + std::copysign(std::sqrt(disc), half_tr);
      const double small = big != 0.0 ? a.det() / big : 0.0;
      const double hi = std::max(big, small), lo = std::min(big, small);
      charpoly.max_error = std::max(
          charpoly.max_error, std::max(std::abs(ev.re1 - hi), std::abs(ev.re2 - lo)) / scale);
    } else {
      charpoly.max_error =
          std::max(charpoly.max_error, std::max(std::abs(ev.re1 - half_tr),
                                                std::abs(ev.im1 - std::sqrt(-disc))) / scale);
    }

    const Mat2 jinv_a{a.a21, a.a22, -a.a11, -a.a12};
    const OrthoStructure os = ortho_structure(rt);
    const EigenStructure dual = eigen_structure(decompose(jinv_a));
    const auto* o = std::get_if<ortho::DistinctReal>(&os);
    const auto* d = std::get_if<eigen::DistinctReal>(&dual);
    if (o && d) {
      duality.max_error = std::max(
          duality.max_error,
          std::max({std::abs(o->mu1 - d->lambda1) / scale, std::abs(o->mu2 - d->lambda2) / scale,
                    AngleModPi::distance(o->phi1.value(), d->theta1.value()),
                    AngleModPi::distance(o->phi2.value(), d->theta2.value())}));
    } else if (static_cast<bool>(o) != static_cast<bool>(d)) {
      duality.max_error = INFINITY;
    }

    std::uniform_real_distribution<double> angle(1e-2, kPi / 2.0 - 1e-2);
    std::uniform_real_distribution<double> rho_d(0.1, 10.0);
    const double dR = angle(rng), dT = angle(rng), rho = rho_d(rng);
    const Measured got = measure(from_deltas(dR, dT, rho));
    synth.max_error = std::max({synth.max_error, rel_err(got.delta_R, dR), rel_err(got.delta_T, dT),
                                rel_err(got.rho, rho)});
  }

  SelftestResult out;
  Json checks = Json::array();
  for (const Check* c : {&bijection, &reactivity, &charpoly, &duality, &synth}) {
    const bool ok = c->max_error <= c->tolerance;
    out.passed = out.passed && ok;
    checks.push_back(Json{{"name", c->name},
                          {"cases", count},
                          {"max_error", c->max_error},
                          {"tolerance", c->tolerance},
                          {"passed", ok}});
  }
  out.report = Json{{"schema_version", kSchemaVersion},
                    {"command", "selftest"},
                    {"seed", seed},
                    {"passed", out.passed},
                    {"checks", checks}};
  return out;
}

}  // namespace reactlin::cli
