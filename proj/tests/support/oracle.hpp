// Independent reference computations for the tests. Nothing here calls the
// radial/tangential machinery: eigenvalues come from the characteristic
// polynomial, exponentials from Taylor scaling-and-squaring, amplification
// from brute-force maximisation of |e^{At} v|.
#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "reactlin/rt_core.hpp"

namespace oracle {

using reactlin::Mat2;
using reactlin::Vec2;

struct Roots {
  double re1 = 0.0, im1 = 0.0;  // larger real part first
  double re2 = 0.0, im2 = 0.0;
};

/// Roots of x^2 - tr x + det, the stable way round (no cancellation in the
/// smaller root).
inline Roots charpoly_roots(const Mat2& a) {
  const double h = 0.5 * a.trace();
  // discriminant without forming h^2 - det directly
  const double half_gap = 0.5 * (a.a11 - a.a22);
  const double disc = half_gap * half_gap + a.a12 * a.a21;
  Roots r;
  if (disc >= 0.0) {
    const double s = std::sqrt(disc);
    const double big = h + std::copysign(s, h == 0.0 ? 1.0 : h);
    const double small = big != 0.0 ? a.det() / big : h - s;
    r.re1 = std::max(big, small);
    r.re2 = std::min(big, small);
  } else {
    r.re1 = r.re2 = h;
    r.im1 = std::sqrt(-disc);
    r.im2 = -r.im1;
  }
  return r;
}

/// J^{-1} A with J the quarter turn.
inline Mat2 j_inverse_times(const Mat2& a) { return {a.a21, a.a22, -a.a11, -a.a12}; }

inline Mat2 expm_taylor(const Mat2& a, double t) {
  Mat2 m = t * a;
  int squarings = 0;
  const double norm = m.frobenius();
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  m = std::ldexp(1.0, -squarings) * m;
  Mat2 term = Mat2::identity();
  Mat2 sum = Mat2::identity();
  for (int k = 1; k <= 24; ++k) {
    term = (1.0 / k) * (term * m);
    sum = sum + term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

inline double golden_max(auto f, double lo, double hi, int iters = 100) {
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - g * (hi - lo);
  double d = lo + g * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - g * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + g * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

/// max over unit v and t in (0, t_end] of |e^{At} v|. For fixed t the inner
/// max is the spectral norm, so only t is searched: a grid, then golden
/// section around the best grid point.
inline double spectral_norm(const Mat2& m) {
  // sqrt of the largest eigenvalue of m^T m
  const Mat2 g = m.transpose() * m;
  const double h = 0.5 * g.trace();
  const double half_gap = 0.5 * (g.a11 - g.a22);
  return std::sqrt(h + std::sqrt(half_gap * half_gap + g.a12 * g.a21));
}

inline double amplification_bruteforce(const Mat2& a, double t_end, int n_t = 4000) {
  auto f = [&](double t) { return spectral_norm(expm_taylor(a, t)); };
  int best = 1;
  double best_v = 0.0;
  for (int i = 1; i <= n_t; ++i) {
    const double v = f(t_end * i / n_t);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  const double h = t_end / n_t;
  const double t = golden_max(f, std::max(1e-12, (best - 1) * h), (best + 1) * h);
  return std::max(best_v, f(t));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  Mat2 matrix(double bound = 10.0) {
    return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound),
            uniform(-bound, bound)};
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace oracle
