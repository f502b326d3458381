#include "stokes/germs.hpp"

#include <algorithm>
#include <cmath>

#include "stokes/error.hpp"

namespace stokes {

namespace {

template <class C>
C horner(const std::vector<cplx>& coeffs, C t) {
  C acc = C(0.0);
  for (size_t m = coeffs.size(); m-- > 0;) acc = acc * t + C(coeffs[m]);
  return acc;
}

template <class C>
C horner_deriv(const std::vector<cplx>& coeffs, C t) {
  C acc = C(0.0);
  for (size_t m = coeffs.size(); m-- > 1;) acc = acc * t + C(double(m) * coeffs[m]);
  return acc;
}

truncated_series jet_of_poly(const std::vector<cplx>& coeffs, int order) {
  truncated_series s = truncated_series::zero(order);
  for (int m = 0; m <= order && m < int(coeffs.size()); ++m) s.set_coeff(m, coeffs[size_t(m)]);
  return s;
}

}  // namespace

void germ_spec::validate() const {
  require(k >= 1, errc::bad_order, "k must be >= 1");
  require(!num.empty(), errc::config_error, "empty coefficient list");
  if (kind == kind_t::rational) {
    require(!den.empty() && std::abs(den[0]) > 0.0, errc::config_error,
            "rational germ needs den(0) != 0");
    for (int m = 0; m < 64; ++m) {
      cplx t = std::polar(radius_hint, 2.0 * pi * double(m) / 64.0);
      require(std::abs(horner(den, t)) > 1e-8, errc::config_error,
              "denominator vanishes inside the working radius");
    }
  }
  truncated_series j = jet(k + 1);
  require(std::abs(j.coeff(0)) <= 1e-12, errc::wrong_normalization, "germ must fix 0");
  require(std::abs(j.coeff(1) - cplx(1.0)) <= 1e-12, errc::wrong_normalization,
          "germ must be tangent to identity");
  for (int m = 2; m <= k; ++m)
    require(std::abs(j.coeff(m)) <= 1e-12, errc::wrong_normalization,
            "coefficients below t^{k+1} must vanish");
  require(std::abs(j.coeff(k + 1) - two_pi_i) <= 1e-12, errc::wrong_normalization,
          "the t^{k+1} coefficient must equal 2*pi*i");
}

truncated_series germ_spec::jet(int order) const {
  truncated_series n = jet_of_poly(num, order);
  if (kind == kind_t::polynomial) return n;
  return n * series_reciprocal(jet_of_poly(den, order));
}

cplx germ_spec::eval(cplx t) const {
  if (kind == kind_t::polynomial) return horner(num, t);
  return horner(num, t) / horner(den, t);
}

cplx germ_spec::deriv(cplx t) const {
  if (kind == kind_t::polynomial) return horner_deriv(num, t);
  cplx n = horner(num, t), d = horner(den, t);
  return (horner_deriv(num, t) * d - n * horner_deriv(den, t)) / (d * d);
}

dd_cplx germ_spec::eval(dd_cplx t) const {
  if (kind == kind_t::polynomial) return horner(num, t);
  return horner(num, t) / horner(den, t);
}

dd_cplx germ_spec::deriv(dd_cplx t) const {
  if (kind == kind_t::polynomial) return horner_deriv(num, t);
  dd_cplx n = horner(num, t), d = horner(den, t);
  return (horner_deriv(num, t) * d - n * horner_deriv(den, t)) / (d * d);
}

germ_spec germ_spec::polynomial_correction(int k, const std::vector<cplx>& corr,
                                           double radius_hint) {
  germ_spec g;
  g.k = k;
  g.kind = kind_t::polynomial;
  g.radius_hint = radius_hint;
  g.num.assign(size_t(k) + 2 + corr.size(), cplx(0.0));
  g.num[1] = 1.0;
  g.num[size_t(k) + 1] = two_pi_i;
  for (size_t m = 0; m < corr.size(); ++m) g.num[size_t(k) + 2 + m] = two_pi_i * corr[m];
  g.validate();
  return g;
}

germ_spec germ_spec::moebius(double radius_hint) {
  germ_spec g;
  g.k = 1;
  g.kind = kind_t::rational;
  g.num = {0.0, 1.0};
  g.den = {1.0, -two_pi_i};
  g.radius_hint = radius_hint;
  g.validate();
  return g;
}

germ_spec germ_spec::normal_form_truncation(int k, cplx lambda, int order, double radius_hint) {
  truncated_series g = series_time1_flow(v_lambda_jet(k, lambda, order), order);
  germ_spec spec;
  spec.k = k;
  spec.kind = kind_t::polynomial;
  spec.num = g.coeffs();
  spec.radius_hint = radius_hint;
  spec.validate();
  return spec;
}

// ---------------------------------------------------------------------------

germ_family::germ_family(int k, roots_provider roots, std::vector<std::vector<cplx>> q_coeffs,
                         double radius_hint)
    : k_(k), roots_(std::move(roots)), q_coeffs_(std::move(q_coeffs)), radius_hint_(radius_hint) {
  require(roots_.k() == k_, errc::config_error, "roots provider k mismatch");
}

std::vector<cplx> germ_family::q_at(cplx eps) const {
  std::vector<cplx> q(std::max<size_t>(q_coeffs_.size(), 1), cplx(0.0));
  for (size_t m = 0; m < q_coeffs_.size(); ++m) {
    cplx pw = 1.0;
    for (cplx c : q_coeffs_[m]) {
      q[m] += c * pw;
      pw *= eps;
    }
  }
  return q;
}

std::vector<cplx> germ_family::fixed_points(cplx eps) const { return roots_.at(eps).roots; }
family_roots germ_family::nominal_roots(cplx eps) const { return roots_.at(eps); }

namespace {

template <class C>
C family_eval(const std::vector<cplx>& roots, const std::vector<cplx>& q, C t) {
  C p = C(1.0);
  for (cplx r : roots) p = p * (t - C(r));
  return t + C(two_pi_i) * (C(1.0) + horner(q, t)) * p;
}

template <class C>
C family_deriv(const std::vector<cplx>& roots, const std::vector<cplx>& q, C t) {
  C p = C(1.0);
  for (cplx r : roots) p = p * (t - C(r));
  C dp = C(0.0);
  for (size_t i = 0; i < roots.size(); ++i) {
    C term = C(1.0);
    for (size_t j = 0; j < roots.size(); ++j)
      if (j != i) term = term * (t - C(roots[j]));
    dp = dp + term;
  }
  return C(1.0) + C(two_pi_i) * (horner_deriv(q, t) * p + (C(1.0) + horner(q, t)) * dp);
}

}  // namespace

cplx germ_family::eval(cplx eps, cplx t) const { return family_eval(fixed_points(eps), q_at(eps), t); }
cplx germ_family::deriv(cplx eps, cplx t) const { return family_deriv(fixed_points(eps), q_at(eps), t); }
dd_cplx germ_family::eval_dd(cplx eps, dd_cplx t) const {
  return family_eval(fixed_points(eps), q_at(eps), t);
}
dd_cplx germ_family::deriv_dd(cplx eps, dd_cplx t) const {
  return family_deriv(fixed_points(eps), q_at(eps), t);
}

germ_spec germ_family::unperturbed() const {
  // p(t, 0) = t^{k+1}; f_0 = t + 2 pi i (1 + q(t,0)) t^{k+1}.
  auto q0 = q_at(0.0);
  germ_spec g;
  g.k = k_;
  g.kind = germ_spec::kind_t::polynomial;
  g.radius_hint = radius_hint_;
  g.num.assign(size_t(k_) + 2 + q0.size(), cplx(0.0));
  g.num[1] = 1.0;
  for (size_t m = 0; m < q0.size(); ++m) g.num[size_t(k_) + 1 + m] += two_pi_i * q0[m];
  g.num[size_t(k_) + 1] += two_pi_i;
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------

cplx moebius_family::alpha_of(cplx eps) { return std::sqrt(eps); }

std::vector<cplx> moebius_family::fixed_points(cplx eps) const {
  cplx a = alpha_of(eps);
  if (std::arg(a) < 0.0) a = -a;  // keep Im alpha_0 >= 0
  return {a, -a};
}

family_roots moebius_family::nominal_roots(cplx eps) const {
  family_roots fr{1, eps, fixed_points(eps)};
  fr.validate();
  return fr;
}

namespace {

template <class C>
C moebius_eval(cplx alpha, cplx eps, C t) {
  C den = C(cplx(1.0) + two_pi_i * alpha) - C(two_pi_i) * t;
  return t + C(two_pi_i) * (t * t - C(eps)) / den;
}

template <class C>
C moebius_deriv(cplx alpha, cplx eps, C t) {
  C den = C(cplx(1.0) + two_pi_i * alpha) - C(two_pi_i) * t;
  C num = t * t - C(eps);
  return C(1.0) + C(two_pi_i) * (C(2.0) * t * den + C(two_pi_i) * num) / (den * den);
}

}  // namespace

cplx moebius_family::eval(cplx eps, cplx t) const {
  return moebius_eval(fixed_points(eps)[0], eps, t);
}
cplx moebius_family::deriv(cplx eps, cplx t) const {
  return moebius_deriv(fixed_points(eps)[0], eps, t);
}
dd_cplx moebius_family::eval_dd(cplx eps, dd_cplx t) const {
  return moebius_eval(fixed_points(eps)[0], eps, t);
}
dd_cplx moebius_family::deriv_dd(cplx eps, dd_cplx t) const {
  return moebius_deriv(fixed_points(eps)[0], eps, t);
}

germ_spec moebius_family::unperturbed() const { return germ_spec::moebius(); }

// ---------------------------------------------------------------------------

fitted_family::fitted_family(int k, std::vector<cplx> eps, std::vector<std::vector<cplx>> polys,
                             std::vector<cplx> unperturbed_poly)
    : k_(k), eps_(std::move(eps)), polys_(std::move(polys)),
      unperturbed_(std::move(unperturbed_poly)) {
  require(eps_.size() == polys_.size(), errc::config_error, "eps/poly row mismatch");
}

const std::vector<cplx>& fitted_family::poly_for(cplx eps) const {
  for (size_t i = 0; i < eps_.size(); ++i)
    if (eps_[i] == eps) return polys_[i];
  fail(errc::config_error, "fitted family has no entry for this eps");
}

std::vector<cplx> fitted_family::fixed_points(cplx eps) const {
  const auto& f = poly_for(eps);
  std::vector<cplx> shifted(f);
  if (shifted.size() < 2) shifted.resize(2, cplx(0.0));
  shifted[1] -= 1.0;  // roots of f(t) - t
  auto all = polynomial_roots(shifted);
  // keep the k+1 roots closest to the nominal configuration
  auto nominal = nominal_roots(eps).roots;
  std::vector<cplx> picked;
  for (cplx a : nominal) {
    double best = 1e300;
    cplx sel = 0.0;
    for (cplx r : all) {
      if (std::abs(r - a) < best) {
        best = std::abs(r - a);
        sel = r;
      }
    }
    // one Newton polish on f(t) - t
    for (int it = 0; it < 3; ++it) {
      cplx v = 0.0, d = 0.0;
      for (size_t m = f.size(); m-- > 0;) {
        d = d * sel + v;
        v = v * sel + f[m];
      }
      v -= sel;
      d -= 1.0;
      if (std::abs(d) == 0.0) break;
      sel -= v / d;
    }
    picked.push_back(sel);
  }
  return picked;
}

family_roots fitted_family::nominal_roots(cplx eps) const { return nominal_.at(eps); }

cplx fitted_family::eval(cplx eps, cplx t) const { return horner(poly_for(eps), t); }
cplx fitted_family::deriv(cplx eps, cplx t) const { return horner_deriv(poly_for(eps), t); }
dd_cplx fitted_family::eval_dd(cplx eps, dd_cplx t) const { return horner(poly_for(eps), t); }
dd_cplx fitted_family::deriv_dd(cplx eps, dd_cplx t) const { return horner_deriv(poly_for(eps), t); }

germ_spec fitted_family::unperturbed() const {
  germ_spec g;
  g.k = k_;
  g.kind = germ_spec::kind_t::polynomial;
  g.num = unperturbed_;
  g.radius_hint = 0.1;
  g.validate();
  return g;
}

}  // namespace stokes
