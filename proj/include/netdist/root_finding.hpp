#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "netdist/errors.hpp"

namespace netdist {

struct Bracket {
  double lo, hi;
};

// Bracket the sign change of a continuous, strictly decreasing f by growing
// (or shrinking) geometrically from x0 > 0.
template <class F>
Bracket bracket_decreasing(F&& f, double x0, int max_steps = 80) {
  double lo = x0;
  double hi = x0;
  double flo = f(lo);
  double fhi = flo;
  for (int step = 0; step < max_steps && flo <= 0.0; ++step) {
    hi = lo;
    lo *= 0.5;
    flo = f(lo);
  }
  if (flo <= 0.0) throw numeric_error("root bracket not found below start point");
  if (hi == lo) {
    fhi = flo;
    for (int step = 0; step < max_steps && fhi >= 0.0; ++step) {
      hi *= 2.0;
      fhi = f(hi);
    }
    if (fhi >= 0.0) throw numeric_error("root bracket not found above start point");
  }
  return {lo, hi};
}

// Brent's method on a sign-changing bracket. Iterates until |f| <= ftol;
// throws if the bracket collapses to machine precision first.
template <class F>
double brent(F&& f, double lo, double hi, double ftol, int max_iter = 200) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw contract_error("brent needs a sign-changing bracket");

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    if (std::abs(fb) <= ftol) return b;
    const double eps = std::numeric_limits<double>::epsilon();
    const double tol1 = 2.0 * eps * std::abs(b);
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1) {
      if (std::abs(fb) <= ftol) return b;
      throw numeric_error("brent bracket collapsed before reaching the residual target");
    }
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, falling back to secant.
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * xm * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  throw numeric_error("brent did not reach the residual target");
}

}  // namespace netdist
