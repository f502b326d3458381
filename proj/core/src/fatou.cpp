#include "stokes/fatou.hpp"

#include <algorithm>
#include <cmath>

#include "stokes/error.hpp"
#include "stokes/formal.hpp"

namespace stokes {

namespace {

cplx pow_int(cplx z, int k) {
  cplx p = 1.0;
  for (int i = 0; i < k; ++i) p *= z;
  return p;
}

double continued_arg(cplx t, double anchor) {
  return anchor + std::remainder(std::arg(t) - anchor, 2.0 * pi);
}

/// k-th root of w whose argument lies closest to `hint`.
cplx kth_root_near(cplx w, int k, double hint) {
  double base = std::arg(w) / double(k);
  double m = std::round((hint - base) * double(k) / (2.0 * pi));
  double phi = base + 2.0 * pi * m / double(k);
  return std::polar(std::pow(std::abs(w), 1.0 / double(k)), phi);
}

}  // namespace

cplx model_time_anchored(int k, cplx lambda, cplx t, double anchor_arg) {
  require(t != cplx(0.0), errc::origin_pole, "model time has a pole at t = 0");
  cplx logt(std::log(std::abs(t)), continued_arg(t, anchor_arg));
  return -1.0 / (two_pi_i * double(k) * pow_int(t, k)) + lambda / two_pi_i * logt;
}

cplx model_time(int k, cplx lambda, cplx t, cplx branch_base) {
  return model_time_anchored(k, lambda, t, std::arg(branch_base));
}

cplx model_time_deriv(int k, cplx lambda, cplx t) {
  require(t != cplx(0.0), errc::origin_pole, "model time has a pole at t = 0");
  return (1.0 + lambda * pow_int(t, k)) / (two_pi_i * pow_int(t, k + 1));
}

// ---------------------------------------------------------------------------

ev_charts ev_charts::build(const germ_spec& germ, fatou_numerics num) {
  germ.validate();
  ev_charts ev;
  ev.germ_ = germ;
  int k = germ.k;
  if (num.jet_order < 0) num.jet_order = 2 * k + 6;
  double t_sample = std::pow(1.0 / (2.0 * pi * k * num.depth), 1.0 / double(k));
  if (num.radius < 0.0) num.radius = std::min(germ.radius_hint, 1.55 * t_sample);
  // If the radius is capped by the germ, sample deeper so the line stays inside.
  double need = std::pow(1.3, k) / (2.0 * pi * k * std::pow(num.radius, k));
  num.depth = std::max(num.depth, need);
  ev.num_ = num;

  auto fi = formal_invariant(germ.jet(num.jet_order), k, num.jet_order);
  ev.lambda_ = fi.lambda;
  ev.hjet_ = fi.conjugator;
  ev.hderiv_ = fi.conjugator.derivative();

  double opening = 1.5 * pi / double(k);
  for (int j = 0; j < 2 * k; ++j) {
    fatou_chart c;
    c.j = j;
    c.theta = pi * double(1 + 2 * j) / double(2 * k);
    c.sec = sector{ang_norm(c.theta), opening, num.radius};
    c.attracting = (j % 2 == 0);
    // Orientation gate: with the 2*pi*i normalization, petals on even rays
    // attract.  Probe |f| against |t| on the ray.
    cplx probe = std::polar(num.radius / 3.0, c.theta);
    bool contracts = std::abs(germ.eval(probe)) < std::abs(probe);
    require(contracts == c.attracting, errc::wrong_normalization,
            "petal orientation contradicts the 2*pi*i normalization");
    c.norm_constant = 0.0;
    ev.charts_.push_back(c);
  }

  // Match constants on consecutive overlaps; chart 0 is the gauge.
  double r_probe = num.radius / 2.0;
  double r_probe2 = num.radius / 3.0;
  ev.norm_stability_ = 0.0;
  for (int j = 0; j + 1 < 2 * k; ++j) {
    double mid = ev.charts_[size_t(j)].theta + pi / (2.0 * k);
    cplx p1 = std::polar(r_probe, mid);
    cplx p2 = std::polar(r_probe2, mid);
    cplx d1 = ev.fatou_eval(j, p1).tau - ev.fatou_eval(j + 1, p1).tau;
    cplx d2 = ev.fatou_eval(j, p2).tau - ev.fatou_eval(j + 1, p2).tau;
    ev.charts_[size_t(j + 1)].norm_constant = ev.charts_[size_t(j)].norm_constant + d1;
    ev.norm_stability_ = std::max(ev.norm_stability_, std::abs(d1 - d2));
  }
  // Wrap probe: tau_0 - tau_{2k-1} -> -lambda.
  double wrap_mid = ev.charts_.back().theta + pi / (2.0 * k);
  cplx pw = std::polar(r_probe, wrap_mid);
  ev.minus_lambda_probe_ = ev.fatou_eval(0, pw).tau - ev.fatou_eval(2 * k - 1, pw).tau;
  return ev;
}

ev_charts::eval_result ev_charts::orbit_limit(const fatou_chart& c, cplx t) const {
  int k = germ_.k;
  require(t != cplx(0.0), errc::outside_domain, "t = 0 is the parabolic point");
  require(c.sec.contains(t), errc::outside_domain, "t outside the chart sector");

  const double inner_tol = std::min(num_.tol / 20.0, 1e-10);
  const double floor_r = std::pow(1.0 / (2.0 * pi * k * 1e4), 1.0 / double(k));
  const double escape_r = 2.0 * c.sec.radius;
  const double drift_cap = pi / double(k) + 1.2;

  cplx u = t;
  double argc = continued_arg(t, c.theta);
  cplx dprod = 1.0;
  long n = 0;

  auto model_at = [&](cplx w, double argw) -> std::pair<cplx, cplx> {
    cplx h = hjet_.eval(w);
    double argh = argw + std::arg(h / w);
    cplx logh(std::log(std::abs(h)), argh);
    cplx hk = pow_int(h, k);
    cplx val = -1.0 / (two_pi_i * double(k) * hk) + lambda_ / two_pi_i * logh;
    cplx dval = (1.0 + lambda_ * hk) / (two_pi_i * hk * h) * hderiv_.eval(w);
    return {val, dval};
  };

  auto inverse_step = [&](cplx w) -> cplx {
    cplx x = w - (germ_.eval(w) - w);
    double scale = std::max(std::abs(w), 1e-30);
    for (int it = 0; it < 50; ++it) {
      cplx fx = germ_.eval(x);
      if (std::abs(fx - w) <= 8e-16 * scale) return x;
      cplx d = germ_.deriv(x);
      require(std::abs(d) > 0.0, errc::newton_failed, "f' vanished during inversion");
      x -= (fx - w) / d;
    }
    if (std::abs(germ_.eval(x) - w) <= 1e-12 * scale) return x;
    fail(errc::newton_failed, "backward orbit inversion diverged");
  };

  std::vector<cplx> ckpt;
  long next_ckpt = 1;
  long last_ckpt_n = -1;
  while (true) {
    if (std::abs(u) < floor_r) break;
    if (n >= num_.iter_cap)
      fail(errc::not_converged, "orbit cap reached before the time limit settled");
    cplx unext = c.attracting ? germ_.eval(u) : inverse_step(u);
    if (c.attracting)
      dprod *= germ_.deriv(u);
    else
      dprod /= germ_.deriv(unext);
    argc += std::arg(unext / u);
    u = unext;
    ++n;
    if (std::abs(u) > escape_r) fail(errc::not_converged, "orbit escaped the chart");
    if (std::abs(argc - c.theta) > drift_cap)
      fail(errc::not_converged, "orbit left the petal angularly");
    if (n == next_ckpt) {
      cplx s = model_at(u, argc).first + double(c.attracting ? -n : n);
      ckpt.push_back(s);
      last_ckpt_n = n;
      next_ckpt *= 2;
      size_t m = ckpt.size();
      if (m >= 2 && std::abs(ckpt[m - 1] - ckpt[m - 2]) < inner_tol) break;
    }
  }

  auto [val, dval] = model_at(u, argc);
  if (n != last_ckpt_n) ckpt.push_back(val + double(c.attracting ? -n : n));
  // Generalized Richardson step on the checkpoint tail.
  size_t m = ckpt.size();
  cplx s_star = ckpt.back();
  if (m >= 3) {
    cplx d1 = ckpt[m - 2] - ckpt[m - 3];
    cplx d2 = ckpt[m - 1] - ckpt[m - 2];
    if (std::abs(d1) > 0.0) {
      cplx rho = d2 / d1;
      if (std::abs(rho) < 0.75 && std::abs(rho) > 1e-8) s_star = ckpt.back() + d2 * rho / (1.0 - rho);
    }
  }
  return {s_star + c.norm_constant, dval * dprod, n};
}

ev_charts::eval_result ev_charts::fatou_eval(int j, cplx t) const {
  require(j >= 0 && j < int(charts_.size()), errc::outside_domain, "chart index out of range");
  return orbit_limit(charts_[size_t(j)], t);
}

double ev_charts::abel_residual(int j, cplx t) const {
  cplx a = fatou(j, t);
  cplx b = fatou(j, germ_.eval(t));
  return std::abs(b - a - 1.0);
}

cplx ev_charts::seed_from_model(cplx tau, double arg_hint) const {
  int k = germ_.k;
  cplx t = kth_root_near(-1.0 / (two_pi_i * double(k) * tau), k, arg_hint);
  for (int it = 0; it < 3; ++it) {
    cplx logt(std::log(std::abs(t)), continued_arg(t, arg_hint));
    cplx tau2 = tau - lambda_ / two_pi_i * logt;
    if (std::abs(tau2) < 1e-12) break;
    t = kth_root_near(-1.0 / (two_pi_i * double(k) * tau2), k, arg_hint);
  }
  return t;
}

cplx ev_charts::invert(int j, cplx tau, cplx seed) const {
  const fatou_chart& c = charts_[size_t(j)];
  cplx x = (seed == cplx(0.0)) ? seed_from_model(tau, c.theta + pi / (2.0 * germ_.k)) : seed;
  cplx good = x;
  for (int it = 0; it < 60; ++it) {
    eval_result er;
    try {
      er = fatou_eval(j, x);
    } catch (const error&) {
      x = (it == 0) ? 0.8 * x : 0.5 * (x + good);
      continue;
    }
    cplx diff = er.tau - tau;
    if (std::abs(diff) < 1e-11 * (1.0 + std::abs(tau))) return x;
    good = x;
    cplx step = diff / er.dtau;
    double cap = 0.4 * std::abs(x);
    if (std::abs(step) > cap) step *= cap / std::abs(step);
    x -= step;
  }
  fail(errc::newton_failed, "chart inversion did not converge");
}

// ---------------------------------------------------------------------------

ev_modulus ev_transitions(const ev_charts& ev, int fourier_range) {
  const auto& num = ev.numerics();
  int k = ev.k();
  ev_modulus mod;
  mod.k = k;
  mod.lambda = ev.lambda();

  for (int j = 0; j < 2 * k; ++j) {
    int side = (j % 2 == 0) ? -1 : +1;
    int jn = (j + 1) % (2 * k);
    bool wrap = (j == 2 * k - 1);
    double mid = ev.charts()[size_t(j)].theta + pi / (2.0 * k);

    transition_sample ts;
    ts.half_plane_sign = side;
    int M = num.samples;
    cplx t_prev = 0.0;
    for (int m = 0; m <= M; ++m) {
      cplx tau(double(m) / double(M), side * num.depth);
      cplx seed = (m == 0) ? ev.seed_from_model(tau, mid) : t_prev;
      cplx t = ev.invert(j, tau, seed);
      t_prev = t;
      cplx out = ev.fatou(jn, t);
      if (wrap) out += ev.lambda();
      ts.samples.emplace_back(tau, out);
    }
    fourier_extract(ts, fourier_range);
    mod.transitions.push_back(std::move(ts));
  }

  // Abel residual estimate on petal mid-rays.
  double resid = 0.0;
  for (int j = 0; j < 2 * k; ++j) {
    cplx t = std::polar(num.radius / 2.5, ev.charts()[size_t(j)].theta);
    resid = std::max(resid, ev.abel_residual(j, t));
  }
  mod.max_abel_residual = resid;
  return mod;
}

ev_modulus ev_transitions(const germ_spec& germ, int fourier_range, fatou_numerics num) {
  return ev_transitions(ev_charts::build(germ, num), fourier_range);
}

}  // namespace stokes
