#ifndef STOKES_SERIES_HPP
#define STOKES_SERIES_HPP

#include <vector>

#include "stokes/precision.hpp"

namespace stokes {

/// Complex power-series jet c_0 + c_1 t + ... + c_N t^N with explicit
/// truncation order N.  Values are immutable in spirit: operations return
/// fresh series and never promote orders silently.
class truncated_series {
public:
  truncated_series() : coeffs_(1, cplx(0.0)) {}
  explicit truncated_series(std::vector<cplx> coeffs);
  /// Zero series of order n.
  static truncated_series zero(int order);
  /// Identity jet t at order n.
  static truncated_series identity(int order);

  int order() const { return int(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(int m) const { return m <= order() ? coeffs_[size_t(m)] : cplx(0.0); }
  void set_coeff(int m, cplx v);

  /// Smallest m with c_m != 0, or order()+1 for the zero jet.
  int valuation() const;

  bool is_germ_at_zero() const { return coeffs_[0] == cplx(0.0); }
  bool is_invertible_germ() const { return is_germ_at_zero() && coeffs_[1] != cplx(0.0); }

  truncated_series truncated(int order) const;
  cplx eval(cplx t) const;
  truncated_series derivative() const;

private:
  std::vector<cplx> coeffs_;
};

truncated_series operator+(const truncated_series& a, const truncated_series& b);
truncated_series operator-(const truncated_series& a, const truncated_series& b);
truncated_series operator*(const truncated_series& a, const truncated_series& b);
truncated_series operator*(cplx s, const truncated_series& a);

/// Coefficients of outer(inner(t)) exact through the shared order.
/// Requires inner(0) = 0; orders must match.
truncated_series series_compose(const truncated_series& outer, const truncated_series& inner);

/// Compositional inverse: series_compose(s, r) = t through order N.
/// Requires an invertible germ (c_0 = 0, c_1 != 0).
truncated_series series_reverse(const truncated_series& s);

/// Reciprocal jet 1/s, requires s(0) != 0.
truncated_series series_reciprocal(const truncated_series& s);

/// Jet of the time-1 flow map of the 1-D field  dt/ds = field(t), where the
/// field vanishes to order >= 2 at 0.  Lie-series exponentiation; exact
/// through the requested order because each Lie step raises the valuation.
truncated_series series_time1_flow(const truncated_series& field, int order);

/// Jet of v_lambda(t) = 2*pi*i t^{k+1} (1 + lambda t^k)^{-1}.
truncated_series v_lambda_jet(int k, cplx lambda, int order);

}  // namespace stokes

#endif
