#ifndef STOKES_FATOU_HPP
#define STOKES_FATOU_HPP

#include <vector>

#include "stokes/germs.hpp"
#include "stokes/sectors.hpp"
#include "stokes/transition.hpp"

namespace stokes {

/// Model complex time of v_lambda: T(t) = -1/(2 pi i k t^k) + (lambda/2 pi i) log t,
/// the antiderivative of 1/v_lambda.  The log branch keeps arg t within pi of
/// the continued anchor angle.
cplx model_time_anchored(int k, cplx lambda, cplx t, double anchor_arg);
cplx model_time_deriv(int k, cplx lambda, cplx t);
/// Spec-facing overload: the branch is anchored at arg(branch_base).
cplx model_time(int k, cplx lambda, cplx t, cplx branch_base);

struct fatou_numerics {
  double tol = 1e-9;       // Abel-equation tolerance
  long iter_cap = 100000;  // orbit length cap
  double depth = 2.5;      // sampling-line distance into the half-plane
  int samples = 256;       // per unit period
  int jet_order = -1;      // conjugator jet order; default 2k+6
  double radius = -1.0;    // chart radius; default from k and depth
};

struct fatou_chart {
  int j = 0;            // sector / dividing-ray index
  sector sec;
  double theta = 0.0;   // continued anchor angle pi(1+2j)/(2k)
  bool attracting = true;
  cplx norm_constant{};
};

/// Sectorial complex times of a parabolic germ: 2k charts built on the good
/// sectors, orbit-limit evaluation against the conjugator-composed model
/// time, constants matched on overlaps (chart 0 gauged to 0).
class ev_charts {
public:
  static ev_charts build(const germ_spec& germ, fatou_numerics num = {});

  const germ_spec& germ() const { return germ_; }
  int k() const { return germ_.k; }
  cplx lambda() const { return lambda_; }
  const truncated_series& conjugator() const { return hjet_; }
  const std::vector<fatou_chart>& charts() const { return charts_; }
  const fatou_numerics& numerics() const { return num_; }

  struct eval_result {
    cplx tau{};
    cplx dtau{};
    long iters = 0;
  };

  /// tau_j(t) with the chart's normalization constant included.
  eval_result fatou_eval(int j, cplx t) const;
  cplx fatou(int j, cplx t) const { return fatou_eval(j, t).tau; }
  /// Abel defect |tau(f(t)) - tau(t) - 1|.
  double abel_residual(int j, cplx t) const;

  /// Newton inversion of tau_j; seed = 0 requests a model-time seed.
  cplx invert(int j, cplx tau, cplx seed = 0.0) const;
  cplx seed_from_model(cplx tau, double arg_hint) const;

  /// Diagnostics from the normalization pass.
  double norm_stability() const { return norm_stability_; }
  cplx measured_minus_lambda() const { return minus_lambda_probe_; }

private:
  eval_result orbit_limit(const fatou_chart& c, cplx t) const;

  germ_spec germ_;
  cplx lambda_{};
  truncated_series hjet_;
  truncated_series hderiv_;
  std::vector<fatou_chart> charts_;
  fatou_numerics num_;
  double norm_stability_ = 0.0;
  cplx minus_lambda_probe_{};
};

/// The full Ecalle-Voronin data: lambda and the 2k transition functions
/// psi_j = tau_{j+1} . tau_j^{-1} with Fourier coefficients.
struct ev_modulus {
  int k = 1;
  cplx lambda{};
  std::vector<transition_sample> transitions;
  double max_abel_residual = 0.0;
};

ev_modulus ev_transitions(const ev_charts& charts, int fourier_range);
ev_modulus ev_transitions(const germ_spec& germ, int fourier_range, fatou_numerics num = {});

/// normalize_charts of the spec: chart construction + constant matching.
inline ev_charts normalize_charts(const germ_spec& germ, fatou_numerics num = {}) {
  return ev_charts::build(germ, num);
}

}  // namespace stokes

#endif
