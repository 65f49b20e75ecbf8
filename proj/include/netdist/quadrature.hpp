#pragma once

#include <cmath>

#include "netdist/errors.hpp"

namespace netdist {

namespace detail {

template <class F>
double adaptive_simpson_step(F& f, double a, double fa, double b, double fb,
                             double m, double fm, double whole, double tol,
                             int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson with Richardson correction; tol is an absolute target.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol, int max_depth = 48) {
  if (!(b >= a)) throw contract_error("integration bounds out of order");
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_step(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

// Integral of f over [cut, infinity) through the substitution w = cut / v,
// v in (0, 1]. tail_coefficient must be the limit of w^2 f(w) as w grows; it
// supplies the transformed integrand's value at v = 0.
template <class F>
double integrate_tail(F&& f, double cut, double tail_coefficient, double tol,
                      int max_depth = 48) {
  if (cut <= 0.0) throw contract_error("tail integration needs a positive cut");
  auto transformed = [&](double v) {
    if (v <= 0.0) return tail_coefficient / cut;
    const double w = cut / v;
    return f(w) * w / v;
  };
  return adaptive_simpson(transformed, 0.0, 1.0, tol, max_depth);
}

}  // namespace netdist
