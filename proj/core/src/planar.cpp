#include "stokes/planar.hpp"

#include <algorithm>
#include <cmath>

#include "stokes/error.hpp"
#include "stokes/ode.hpp"
#include "stokes/transition.hpp"

namespace stokes {

std::array<cplx, 4> planar_field::jacobian(cplx z, cplx t) const {
  double h = 1e-7 * (1.0 + std::max(std::abs(z), std::abs(t)));
  auto dz = [&](cplx f1, cplx f0) { return (f1 - f0) / (2.0 * h); };
  return {dz(zdot(z + h, t), zdot(z - h, t)), dz(zdot(z, t + h), zdot(z, t - h)),
          dz(tdot(z + h, t), tdot(z - h, t)), dz(tdot(z, t + h), tdot(z, t - h))};
}

cplx normal_form_field::tdot(cplx, cplx t) const {
  cplx tk = 1.0;
  for (int i = 0; i < k_; ++i) tk *= t;
  return tk * t / (1.0 + lambda_ * tk);
}

// ---------------------------------------------------------------------------

planar_field_at::planar_field_at(std::vector<cplx> roots, std::vector<std::vector<cplx>> q_zt,
                                 std::vector<cplx> g_t)
    : roots_(std::move(roots)), q_zt_(std::move(q_zt)), g_t_(std::move(g_t)) {}

cplx planar_field_at::q(cplx z, cplx t) const {
  cplx acc = 0.0;
  cplx zp = 1.0;
  for (const auto& row : q_zt_) {
    cplx tp = 1.0;
    cplx inner = 0.0;
    for (cplx c : row) {
      inner += c * tp;
      tp *= t;
    }
    acc += inner * zp;
    zp *= z;
  }
  return acc;
}

cplx planar_field_at::g(cplx t) const {
  cplx acc = 0.0;
  cplx tp = 1.0;
  for (cplx c : g_t_) {
    acc += c * tp;
    tp *= t;
  }
  return acc;
}

cplx planar_field_at::zdot(cplx z, cplx t) const {
  return z * (1.0 + q(z, t)) + g(t) * poly_from_roots(roots_, t);
}

cplx planar_field_at::tdot(cplx, cplx t) const { return poly_from_roots(roots_, t); }

std::array<cplx, 4> planar_field_at::jacobian(cplx z, cplx t) const {
  // dq/dz, dq/dt, dg/dt analytically from the tables.
  cplx dq_dz = 0.0, dq_dt = 0.0;
  cplx zp = 1.0;
  for (size_t a = 0; a < q_zt_.size(); ++a) {
    cplx tp = 1.0, dinner = 0.0;
    for (size_t b = 0; b + 1 < q_zt_[a].size(); ++b) {
      dinner += double(b + 1) * q_zt_[a][b + 1] * tp;
      tp *= t;
    }
    dq_dt += dinner * zp;
    zp *= z;
  }
  zp = 1.0;
  for (size_t a = 1; a < q_zt_.size(); ++a) {
    cplx tp = 1.0, inner = 0.0;
    for (size_t b = 0; b < q_zt_[a].size(); ++b) {
      inner += q_zt_[a][b] * tp;
      tp *= t;
    }
    dq_dz += double(a) * inner * zp;
    zp *= z;
  }
  cplx dg_dt = 0.0;
  {
    cplx tp = 1.0;
    for (size_t b = 1; b < g_t_.size(); ++b) {
      dg_dt += double(b) * g_t_[b] * tp;
      tp *= t;
    }
  }
  cplx p = poly_from_roots(roots_, t);
  cplx dp = poly_from_roots_derivative(roots_, t);
  cplx a11 = 1.0 + q(z, t) + z * dq_dz;
  cplx a12 = z * dq_dt + dg_dt * p + g(t) * dp;
  return {a11, a12, cplx(0.0), dp};
}

planar_family::planar_family(int k, roots_provider roots,
                             std::vector<std::vector<std::vector<cplx>>> q_zte,
                             std::vector<std::vector<cplx>> g_te)
    : k_(k), roots_(std::move(roots)), q_zte_(std::move(q_zte)), g_te_(std::move(g_te)) {
  require(roots_.k() == k_, errc::config_error, "roots provider k mismatch");
  // q(0,0,0) = 0 is the form constraint.
  if (!q_zte_.empty() && !q_zte_[0].empty() && !q_zte_[0][0].empty())
    require(std::abs(q_zte_[0][0][0]) <= 1e-12, errc::config_error, "q(0,0,0) must vanish");
}

planar_field_at planar_family::at(cplx eps) const {
  std::vector<std::vector<cplx>> q_zt;
  for (const auto& plane : q_zte_) {
    std::vector<cplx> row;
    for (const auto& epscol : plane) {
      cplx acc = 0.0, pw = 1.0;
      for (cplx c : epscol) {
        acc += c * pw;
        pw *= eps;
      }
      row.push_back(acc);
    }
    q_zt.push_back(std::move(row));
  }
  std::vector<cplx> g_t;
  for (const auto& epscol : g_te_) {
    cplx acc = 0.0, pw = 1.0;
    for (cplx c : epscol) {
      acc += c * pw;
      pw *= eps;
    }
    g_t.push_back(acc);
  }
  auto fr = roots_.at(eps);
  planar_field_at f(fr.roots, std::move(q_zt), std::move(g_t));
  // Singular points of the family are exactly (0, alpha_i).
  for (cplx a : fr.roots) {
    double scale = std::max(1.0, std::abs(a));
    require(std::abs(f.zdot(0.0, a)) <= 1e-12 * scale && std::abs(f.tdot(0.0, a)) <= 1e-12 * scale,
            errc::config_error, "field does not vanish at (0, alpha_i)");
  }
  return f;
}

// ---------------------------------------------------------------------------

path_endpoint integrate_phase_path(const planar_field& field, cplx z0, cplx t0, char drive,
                                   const std::vector<cplx>& waypoints, double tol) {
  require(drive == 'z' || drive == 't', errc::config_error, "drive must be 'z' or 't'");
  path_endpoint out;
  out.z = z0;
  out.t = t0;
  cplx cur = (drive == 'z') ? z0 : t0;
  for (cplx next : waypoints) {
    cplx delta = next - cur;
    if (std::abs(delta) == 0.0) continue;
    if (drive == 'z') {
      cplx a = cur;
      auto r = integrate_rk45<1>(
          [&](double s, const std::array<cplx, 1>& y) -> std::array<cplx, 1> {
            cplx z = a + s * delta;
            cplx zd = field.zdot(z, y[0]);
            require(std::abs(zd) > 1e-300, errc::step_failure, "zdot vanished on the path");
            return {delta * field.tdot(z, y[0]) / zd};
          },
          0.0, 1.0, {out.t}, tol);
      out.t = r.y[0];
      out.err_est += r.err_est;
      out.steps += r.steps;
    } else {
      cplx a = cur;
      auto r = integrate_rk45<1>(
          [&](double s, const std::array<cplx, 1>& y) -> std::array<cplx, 1> {
            cplx t = a + s * delta;
            cplx td = field.tdot(y[0], t);
            require(std::abs(td) > 1e-300, errc::step_failure, "tdot vanished on the path");
            return {delta * field.zdot(y[0], t) / td};
          },
          0.0, 1.0, {out.z}, tol);
      out.z = r.y[0];
      out.err_est += r.err_est;
      out.steps += r.steps;
    }
    cur = next;
  }
  if (drive == 'z')
    out.z = cur;
  else
    out.t = cur;
  return out;
}

cplx monodromy_eval(const planar_field& field, double delta, cplx t0, double tol,
                    double* err_est) {
  auto r = integrate_rk45<1>(
      [&](double s, const std::array<cplx, 1>& y) -> std::array<cplx, 1> {
        cplx z = delta * std::exp(two_pi_i * s);
        cplx zd = field.zdot(z, y[0]);
        require(std::abs(zd) > 1e-300, errc::step_failure, "zdot vanished on the loop");
        return {two_pi_i * z * field.tdot(z, y[0]) / zd};
      },
      0.0, 1.0, {t0}, tol, 1.0 / 64.0);
  if (err_est) *err_est = r.err_est;
  return r.y[0];
}

monodromy_result monodromy_germ(const planar_field& field, double delta,
                                const std::vector<cplx>& t_grid, double tol, int fit_degree,
                                bool fix_origin, double fit_threshold) {
  require(!t_grid.empty(), errc::config_error, "empty monodromy grid");
  monodromy_result out;
  out.delta = delta;
  std::vector<std::pair<cplx, cplx>> pts;
  for (cplx t0 : t_grid) {
    require(std::abs(t0) < delta, errc::off_domain, "grid point outside the transversal disc");
    double e = 0.0;
    cplx ft = monodromy_eval(field, delta, t0, tol, &e);
    out.t0.push_back(t0);
    out.ft.push_back(ft);
    out.err_est.push_back(e);
    pts.emplace_back(t0, ft);
  }
  int deg = std::min<int>(fit_degree, int(pts.size()) - 1);
  auto coeffs = polyfit(pts, deg, &out.fit_residual, fix_origin);
  truncated_series jet = truncated_series::zero(std::max(deg, 1));
  for (int m = 0; m <= jet.order() && m < int(coeffs.size()); ++m)
    jet.set_coeff(m, coeffs[size_t(m)]);
  out.fitted_jet = jet;
  require(out.fit_residual <= fit_threshold, errc::fit_bad,
          "monodromy jet fit residual above threshold");
  return out;
}

separatrix_trace_result separatrix_trace(const planar_field& field, cplx alpha,
                                         const std::vector<cplx>& other_sings,
                                         const std::vector<cplx>& targets, double tol) {
  separatrix_trace_result out;
  out.alpha = alpha;

  auto jac = field.jacobian(0.0, alpha);
  cplx a11 = jac[0], a12 = jac[1], a22 = jac[3];
  // Eigenvector of the small eigenvalue a22 (the column [a12; a22-a11] pattern):
  // (a11 - a22) v_z + a12 v_t = 0  =>  dz/dt = -a12 / (a11 - a22).
  require(std::abs(a11 - a22) > 1e-12, errc::degenerate_input,
          "linearization eigenvalues collide at the singularity");
  out.slope = -a12 / (a11 - a22);

  double sep = 1e300;
  for (cplx s : other_sings) sep = std::min(sep, std::abs(alpha - s));
  require(sep < 1e300 && sep > 0.0, errc::degenerate_input, "need a distinct second singularity");
  double h0 = 1e-6 * sep;

  for (cplx target : targets) {
    cplx dir = (target - alpha) / std::abs(target - alpha);
    cplx t_seed = alpha + h0 * dir;
    cplx z_seed = out.slope * (t_seed - alpha);
    // Straight path with a singularity-margin check.
    for (cplx s : other_sings) {
      cplx d = target - t_seed;
      double proj = std::clamp(((s - t_seed) / d).real(), 0.0, 1.0);
      double dist = std::abs(s - (t_seed + proj * d));
      require(dist > 0.05 * sep, errc::off_domain,
              "target path passes too close to another singularity");
    }
    cplx delta = target - t_seed;
    auto obs = [&](double s, const std::array<cplx, 1>& y) {
      cplx t = t_seed + s * delta;
      cplx td = field.tdot(y[0], t);
      cplx zd = field.zdot(y[0], t);
      double dq = std::abs(td) > 0.0 ? std::abs(zd / td) : 1e300;
      bool ok = dq < 1.0 && std::abs(y[0]) < std::abs(t - alpha) + 1e-300;
      out.samples.push_back({t, y[0], dq, ok});
      if (!ok) out.all_inequalities_ok = false;
    };
    integrate_rk45<1>(
        [&](double s, const std::array<cplx, 1>& y) -> std::array<cplx, 1> {
          cplx t = t_seed + s * delta;
          cplx td = field.tdot(y[0], t);
          require(std::abs(td) > 1e-300, errc::step_failure, "tdot vanished on the trace");
          return {delta * field.zdot(y[0], t) / td};
        },
        0.0, 1.0, {z_seed}, tol, std::numeric_limits<double>::infinity(), obs);
  }
  return out;
}

}  // namespace stokes
