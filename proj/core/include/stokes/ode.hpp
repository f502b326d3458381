#ifndef STOKES_ODE_HPP
#define STOKES_ODE_HPP

#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "stokes/error.hpp"
#include "stokes/precision.hpp"

namespace stokes {

/// Endpoint of an adaptive complex-ODE integration.
template <int N>
struct ode_endpoint {
  std::array<cplx, N> y{};
  double err_est = 0.0;  // accumulated local error estimates
  long steps = 0;        // accepted steps
};

/// Dormand-Prince 5(4) embedded pair over a real parameter interval with a
/// complex state vector.  `observer`, when set, sees every accepted step.
template <int N, class F>
ode_endpoint<N> integrate_rk45(F&& rhs, double s0, double s1, std::array<cplx, N> y0, double tol,
                               double max_step = std::numeric_limits<double>::infinity(),
                               const std::function<void(double, const std::array<cplx, N>&)>&
                                   observer = {}) {
  static const double c[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
  static const double a[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
      {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static const double b4[7] = {5179.0 / 57600, 0.0,           7571.0 / 16695, 393.0 / 640,
                               -92097.0 / 339200, 187.0 / 2100, 1.0 / 40};

  double dir = s1 >= s0 ? 1.0 : -1.0;
  double span = std::abs(s1 - s0);
  require(span > 0.0, errc::step_failure, "empty integration interval");
  double h = dir * std::min({span / 16.0, max_step, span});
  double s = s0;
  std::array<cplx, N> y = y0;
  ode_endpoint<N> out;
  if (observer) observer(s, y);

  std::array<std::array<cplx, N>, 7> kst;
  const double hmin = span * 1e-13 + 1e-300;
  while (dir * (s1 - s) > 0.0) {
    if (dir * (s + h - s1) > 0.0) h = s1 - s;
    kst[0] = rhs(s, y);
    for (int st = 1; st < 7; ++st) {
      std::array<cplx, N> yi = y;
      for (int j = 0; j < st; ++j)
        for (int q = 0; q < N; ++q) yi[size_t(q)] += h * a[st][j] * kst[size_t(j)][size_t(q)];
      kst[size_t(st)] = rhs(s + c[st] * h, yi);
    }
    std::array<cplx, N> y5 = y;
    std::array<cplx, N> y4 = y;
    for (int j = 0; j < 7; ++j)
      for (int q = 0; q < N; ++q) {
        if (j < 6) y5[size_t(q)] += h * a[6][j] * kst[size_t(j)][size_t(q)];
        y4[size_t(q)] += h * b4[j] * kst[size_t(j)][size_t(q)];
      }
    double err = 0.0;
    for (int q = 0; q < N; ++q) {
      double sc = tol * (1.0 + std::abs(y[size_t(q)]));
      err = std::max(err, std::abs(y5[size_t(q)] - y4[size_t(q)]) / sc);
    }
    if (err <= 1.0) {
      s += h;
      y = y5;
      ++out.steps;
      out.err_est += err * tol;
      if (observer) observer(s, y);
    }
    double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
    fac = std::min(5.0, std::max(0.2, fac));
    h *= fac;
    if (std::abs(h) > max_step) h = dir * max_step;
    if (std::abs(h) < hmin)
      fail(errc::step_failure, "step size underflow (near-singular right-hand side)");
  }
  out.y = y;
  return out;
}

}  // namespace stokes

#endif
