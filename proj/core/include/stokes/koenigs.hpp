#ifndef STOKES_KOENIGS_HPP
#define STOKES_KOENIGS_HPP

#include <optional>
#include <string>
#include <vector>

#include "stokes/fatou.hpp"
#include "stokes/germs.hpp"
#include "stokes/sectors.hpp"
#include "stokes/transition.hpp"

namespace stokes {

struct koenigs_numerics {
  double tol = 1e-9;
  long iter_cap = 200000;
  double depth = 2.5;          // sampling depth, shrunk automatically at large eps
  int samples = 256;
  int fourier_range = 3;
  double delta = 0.25;         // working disc radius in t
  double anchor_radius = 0.03; // |b_i| of the anchor base points
  bool anchored = true;        // model-field time anchoring (default mode)
  precision_mode precision = precision_mode::fast;
  bool auto_escalate = true;   // retry in double-double when residuals miss tol
  fatou_numerics fatou;        // settings for the unperturbed reference
};

struct fixed_point_info {
  cplx alpha{};
  cplx mu{};
  cplx log_mu{};  // branch with Im in (-pi/2, 3pi/2)
  bool attracting = false;
};

/// Multiplier data at the fixed point alpha_i(eps); DegenerateInput when
/// |mu| sits on the unit circle or mu falls on the excluded ray i R_-.
fixed_point_info fixed_point_data(const one_d_family& fam, cplx eps, int index);

struct model_field_info {
  cplx a_eps{};           // a(eps) = ln(1 + 2 pi i P) / P, P = prod_{s!=i}(alpha - alpha_s)
  int index = 0;
  std::vector<cplx> roots;
};

/// The degree-(k+1) polynomial field w_eps = a(eps) prod (t - alpha_s) whose
/// time-1 map matches f_eps to first order at alpha_i.
model_field_info model_field(const one_d_family& fam, cplx eps, int index);

/// Time of the model field: sum_s log(t - alpha_s) / w'(alpha_s), each log
/// branch anchored in the window centered at anchor_arg.
cplx model_field_time(const model_field_info& w, cplx t, double anchor_arg);

/// Per-singularity geometry shared by a sweep: assigned sector, anchor ray
/// and base point (on the limit overlap mid-direction, clamped so the
/// unperturbed charts can be evaluated there too).
struct chart_geometry {
  int index = 0;
  int ray_index = 0;
  double theta_limit = 0.0;  // continued limit argument of alpha_i
  double theta_base = 0.0;   // continued anchor direction
  cplx base_point{};
  sector sec;
};

std::vector<chart_geometry> build_geometry(const one_d_family& fam,
                                           const std::vector<cplx>& eps_list,
                                           const koenigs_numerics& num);

/// Koenigs linearizing chart at one fixed point: phi with phi(f) = mu phi,
/// phi'(alpha) = 1, and the complex time log(phi)/log(mu) continued from the
/// anchored base point through the slit complement.
class koenigs_chart {
public:
  koenigs_chart(const one_d_family& fam, cplx eps, chart_geometry geo, koenigs_numerics num,
                precision_mode prec);

  const fixed_point_info& fp() const { return fp_; }
  const chart_geometry& geometry() const { return geo_; }
  const model_field_info& model() const { return model_; }
  cplx base_point() const { return geo_.base_point; }
  cplx anchor_value() const { return anchor_value_; }
  const std::vector<cplx>& slit_ends() const { return slit_ends_; }
  long max_orbit() const { return max_orbit_; }

  struct phi_result {
    cplx phi{};
    cplx dphi{};
    long iters = 0;
  };
  /// Orbit-limit Koenigs value; OutsideDomain / NotConverged on failure.
  phi_result koenigs_eval(cplx t) const;

  /// Branch cursor for the continued complex time.
  struct cursor {
    cplx t{};
    cplx phi{};
    cplx dphi{};
    cplx logphi{};
  };
  cursor base_cursor() const;
  /// Continues the branch along the straight segment to target; BranchCut if
  /// it crosses a slit [0, alpha_s].
  void advance(cursor& c, cplx target) const;
  cplx time_at(const cursor& c) const;
  cplx dtau_at(const cursor& c) const;

  /// tau along an explicit polyline starting at the base point.
  cplx time_along_path(const std::vector<cplx>& path) const;

  /// Canonic generator value log(mu) phi / phi'.
  cplx generator(cplx t) const;

  bool in_domain(cplx t) const;

private:
  const one_d_family* fam_;
  cplx eps_;
  chart_geometry geo_;
  koenigs_numerics num_;
  precision_mode prec_;
  fixed_point_info fp_;
  model_field_info model_;
  cplx a2_{};  // phi''(alpha)/2, one-term orbit acceleration
  std::vector<cplx> slit_ends_;
  cplx anchor_value_{};
  cplx base_logphi_{};
  cplx base_phi_{};
  mutable long max_orbit_ = 0;
};

struct perturbed_transition_result {
  int pair = 0;
  transition_sample ts;
  double residual_abel = 0.0;
  double residual_koenigs = 0.0;
  long iter_count = 0;
  precision_mode used = precision_mode::fast;
};

/// Transition tau_{i+1,eps} . tau_{i,eps}^{-1} sampled on one period at the
/// configured depth; the wrap pair (i = k) uses tau_{k+1} = tau_0 + lambda.
perturbed_transition_result perturbed_transition(const one_d_family& fam, cplx eps, int pair,
                                                 const std::vector<chart_geometry>& geo,
                                                 cplx lambda_unperturbed,
                                                 const koenigs_numerics& num);

/// Single-eps convenience overload (geometry from the one sample).
perturbed_transition_result perturbed_transition(const one_d_family& fam, cplx eps, int pair,
                                                 const koenigs_numerics& num);

struct sweep_row {
  cplx eps{};
  int pair = 0;
  int l = 0;
  cplx c{};
  double abs_c = 0.0;
  double residual_abel = 0.0;
  double residual_koenigs = 0.0;
  long iter_count = 0;
  std::string precision;
  std::string error;  // empty when the row succeeded
};

struct observable_track {
  int pair = 0;
  int l = 0;
  std::vector<double> values;  // |c_l| per eps (NaN rows skipped)
  double extrapolated = 0.0;   // Richardson limit in |eps|^{1/(k+1)}
  double unperturbed = 0.0;    // reference value in the matching gauge
};

struct sweep_result {
  std::vector<cplx> eps_list;
  std::vector<sweep_row> rows;
  std::vector<observable_track> tracks;
  ev_modulus unperturbed;          // canonical modulus of f_0
  ev_modulus unperturbed_anchored; // same data regauged to the anchor convention
  std::vector<cplx> regauge_delta; // per perturbed chart index
  cplx lambda{};
  double nondegeneracy_margin = 0.0;
};

/// Theorem-7/Corollary-3 experiment: perturbed transitions across the eps
/// sweep against the unperturbed Ecalle-Voronin data in a common gauge.
sweep_result convergence_sweep(const one_d_family& fam, const std::vector<cplx>& eps_list,
                               const koenigs_numerics& num);

}  // namespace stokes

#endif
