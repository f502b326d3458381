#ifndef STOKES_GERMS_HPP
#define STOKES_GERMS_HPP

#include <memory>
#include <vector>

#include "stokes/roots.hpp"
#include "stokes/series.hpp"

namespace stokes {

/// Exactly evaluable parabolic germ f(t) = t + 2 pi i t^{k+1}(1 + O(t)),
/// either polynomial or a ratio of polynomials.  Coefficients are ascending.
struct germ_spec {
  enum class kind_t { polynomial, rational };

  int k = 1;
  kind_t kind = kind_t::polynomial;
  std::vector<cplx> num;
  std::vector<cplx> den;  // rational only; den[0] != 0
  double radius_hint = 0.1;

  void validate() const;
  truncated_series jet(int order) const;

  cplx eval(cplx t) const;
  cplx deriv(cplx t) const;
  dd_cplx eval(dd_cplx t) const;
  dd_cplx deriv(dd_cplx t) const;

  /// t + 2 pi i t^{k+1} * (1 + sum c_m t^m) as a polynomial germ.
  static germ_spec polynomial_correction(int k, const std::vector<cplx>& corr,
                                         double radius_hint = 0.1);
  /// The Moebius germ t / (1 - 2 pi i t), the exact time-1 flow of v_0 (k=1).
  static germ_spec moebius(double radius_hint = 0.1);
  /// Polynomial truncation of the time-1 flow of v_lambda at the given order.
  static germ_spec normal_form_truncation(int k, cplx lambda, int order,
                                          double radius_hint = 0.1);
};

/// One-parameter family of one-dimensional maps with k+1 fixed points
/// splitting from the parabolic point; the common surface of the perturbed
/// pipeline (explicit families and fitted monodromy germs alike).
class one_d_family {
public:
  virtual ~one_d_family() = default;
  virtual int k() const = 0;
  /// Precise fixed points at this eps, counterclockwise.
  virtual std::vector<cplx> fixed_points(cplx eps) const = 0;
  /// Nominal root configuration used for sector/nondegeneracy geometry.
  virtual family_roots nominal_roots(cplx eps) const = 0;
  virtual cplx eval(cplx eps, cplx t) const = 0;
  virtual cplx deriv(cplx eps, cplx t) const = 0;
  virtual dd_cplx eval_dd(cplx eps, dd_cplx t) const = 0;
  virtual dd_cplx deriv_dd(cplx eps, dd_cplx t) const = 0;
  /// The unperturbed germ (eps = 0).
  virtual germ_spec unperturbed() const = 0;
};

/// f_eps(t) = t + 2 pi i (1 + q(t,eps)) prod (t - alpha_i(eps)).
/// q is a bivariate polynomial table: q_coeffs[m][j] multiplies t^m eps^j.
class germ_family : public one_d_family {
public:
  germ_family(int k, roots_provider roots, std::vector<std::vector<cplx>> q_coeffs,
              double radius_hint = 0.1);

  int k() const override { return k_; }
  std::vector<cplx> fixed_points(cplx eps) const override;
  family_roots nominal_roots(cplx eps) const override;
  cplx eval(cplx eps, cplx t) const override;
  cplx deriv(cplx eps, cplx t) const override;
  dd_cplx eval_dd(cplx eps, dd_cplx t) const override;
  dd_cplx deriv_dd(cplx eps, dd_cplx t) const override;
  germ_spec unperturbed() const override;

  /// q(t, eps) collapsed to a polynomial in t.
  std::vector<cplx> q_at(cplx eps) const;

private:
  int k_;
  roots_provider roots_;
  std::vector<std::vector<cplx>> q_coeffs_;
  double radius_hint_;
};

/// Control family: the exact time-1 flow of the quadratic model field, a
/// Moebius map with fixed points +-sqrt(eps) and trivial modulus (k = 1).
/// Closed form: f(t) = t + 2 pi i (t^2 - eps) / (1 + 2 pi i alpha - 2 pi i t).
class moebius_family : public one_d_family {
public:
  moebius_family() = default;

  int k() const override { return 1; }
  std::vector<cplx> fixed_points(cplx eps) const override;
  family_roots nominal_roots(cplx eps) const override;
  cplx eval(cplx eps, cplx t) const override;
  cplx deriv(cplx eps, cplx t) const override;
  dd_cplx eval_dd(cplx eps, dd_cplx t) const override;
  dd_cplx deriv_dd(cplx eps, dd_cplx t) const override;
  germ_spec unperturbed() const override;

  static cplx alpha_of(cplx eps);
};

/// Family backed by explicit polynomial maps per eps (fitted monodromy
/// germs); fixed points are recovered from f(t) - t by root finding.
class fitted_family : public one_d_family {
public:
  fitted_family(int k, std::vector<cplx> eps, std::vector<std::vector<cplx>> polys,
                std::vector<cplx> unperturbed_poly);
  /// nominal roots come from a provider (the planar family's own p).
  void set_nominal(roots_provider nominal) { nominal_ = std::move(nominal); }

  int k() const override { return k_; }
  std::vector<cplx> fixed_points(cplx eps) const override;
  family_roots nominal_roots(cplx eps) const override;
  cplx eval(cplx eps, cplx t) const override;
  cplx deriv(cplx eps, cplx t) const override;
  dd_cplx eval_dd(cplx eps, dd_cplx t) const override;
  dd_cplx deriv_dd(cplx eps, dd_cplx t) const override;
  germ_spec unperturbed() const override;

private:
  const std::vector<cplx>& poly_for(cplx eps) const;

  int k_;
  std::vector<cplx> eps_;
  std::vector<std::vector<cplx>> polys_;
  std::vector<cplx> unperturbed_;
  roots_provider nominal_;
};

}  // namespace stokes

#endif
