#ifndef STOKES_PLANAR_HPP
#define STOKES_PLANAR_HPP

#include <array>
#include <vector>

#include "stokes/roots.hpp"
#include "stokes/series.hpp"

namespace stokes {

/// Planar holomorphic field (dz/ds, dt/ds) at one parameter value.
class planar_field {
public:
  virtual ~planar_field() = default;
  virtual cplx zdot(cplx z, cplx t) const = 0;
  virtual cplx tdot(cplx z, cplx t) const = 0;
  /// Jacobian [d zdot/dz, d zdot/dt; d tdot/dz, d tdot/dt]; the default is a
  /// central finite difference.
  virtual std::array<cplx, 4> jacobian(cplx z, cplx t) const;
};

/// dz/ds = nu z, dt/ds = mu t.
class linear_planar_field : public planar_field {
public:
  linear_planar_field(cplx nu, cplx mu) : nu_(nu), mu_(mu) {}
  cplx zdot(cplx z, cplx) const override { return nu_ * z; }
  cplx tdot(cplx, cplx t) const override { return mu_ * t; }
  std::array<cplx, 4> jacobian(cplx, cplx) const override { return {nu_, 0.0, 0.0, mu_}; }

private:
  cplx nu_, mu_;
};

/// The formal normal form: dz/ds = z, dt/ds = t^{k+1} (1 + lambda t^k)^{-1}.
class normal_form_field : public planar_field {
public:
  normal_form_field(int k, cplx lambda) : k_(k), lambda_(lambda) {}
  cplx zdot(cplx z, cplx) const override { return z; }
  cplx tdot(cplx, cplx t) const override;

private:
  int k_;
  cplx lambda_;
};

/// One parameter value of the family
///   dz/ds = z (1 + q(z,t,eps)) + g(t,eps) p(t,eps),  dt/ds = p(t,eps),
/// with q, g collapsed to polynomials in (z, t) and t respectively.
class planar_field_at : public planar_field {
public:
  planar_field_at(std::vector<cplx> roots, std::vector<std::vector<cplx>> q_zt,
                  std::vector<cplx> g_t);
  cplx zdot(cplx z, cplx t) const override;
  cplx tdot(cplx, cplx t) const override;
  std::array<cplx, 4> jacobian(cplx z, cplx t) const override;

  const std::vector<cplx>& roots() const { return roots_; }
  cplx q(cplx z, cplx t) const;
  cplx g(cplx t) const;

private:
  std::vector<cplx> roots_;
  std::vector<std::vector<cplx>> q_zt_;  // q[a][b] z^a t^b
  std::vector<cplx> g_t_;
};

/// The family (1)_eps: polynomial tables over (z, t, eps).
class planar_family {
public:
  planar_family(int k, roots_provider roots, std::vector<std::vector<std::vector<cplx>>> q_zte,
                std::vector<std::vector<cplx>> g_te);

  int k() const { return k_; }
  family_roots nominal_roots(cplx eps) const { return roots_.at(eps); }
  planar_field_at at(cplx eps) const;

private:
  int k_;
  roots_provider roots_;
  std::vector<std::vector<std::vector<cplx>>> q_zte_;
  std::vector<std::vector<cplx>> g_te_;
};

// ---------------------------------------------------------------------------

struct path_endpoint {
  cplx z{};
  cplx t{};
  double err_est = 0.0;
  long steps = 0;
};

/// Follows the phase curve through (z0, t0) while one coordinate runs along a
/// polyline; the other coordinate is integrated.  drive is 'z' or 't'.
path_endpoint integrate_phase_path(const planar_field& field, cplx z0, cplx t0, char drive,
                                   const std::vector<cplx>& waypoints, double tol);

struct monodromy_result {
  double delta = 0.0;
  std::vector<cplx> t0;
  std::vector<cplx> ft;
  std::vector<double> err_est;
  truncated_series fitted_jet;
  double fit_residual = 0.0;
};

/// Monodromy of the field on the transversal D = {z = delta}: the loop
/// z(s) = delta e^{2 pi i s} is lifted to the phase curve through (delta, t0).
cplx monodromy_eval(const planar_field& field, double delta, cplx t0, double tol,
                    double* err_est = nullptr);

/// Evaluates the monodromy on a grid and fits a polynomial jet.
/// fix_origin constrains the fit through f(0)=0, f'(0)=1 (separatrix at t=0).
monodromy_result monodromy_germ(const planar_field& field, double delta,
                                const std::vector<cplx>& t_grid, double tol, int fit_degree,
                                bool fix_origin, double fit_threshold = 1e-5);

struct separatrix_sample {
  cplx t{};
  cplx z{};
  double dq_abs = 0.0;
  bool ineq_ok = true;
};

struct separatrix_trace_result {
  cplx alpha{};
  cplx slope{};
  std::vector<separatrix_sample> samples;
  bool all_inequalities_ok = true;
};

/// Traces the horizontal separatrix through (0, alpha): eigenvector seed at
/// distance 1e-6 * |alpha - nearest_other|, then dz/dt continuation to each
/// target.  Inequality violations are recorded per sample, not fatal.
separatrix_trace_result separatrix_trace(const planar_field& field, cplx alpha,
                                         const std::vector<cplx>& other_sings,
                                         const std::vector<cplx>& targets, double tol);

}  // namespace stokes

#endif
