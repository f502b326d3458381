#include "stokes/series.hpp"

#include <algorithm>

#include "stokes/error.hpp"

namespace stokes {

truncated_series::truncated_series(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  require(coeffs_.size() >= 2, errc::bad_order, "truncation order must be at least 1");
}

truncated_series truncated_series::zero(int order) {
  require(order >= 1, errc::bad_order, "truncation order must be at least 1");
  return truncated_series(std::vector<cplx>(size_t(order) + 1, cplx(0.0)));
}

truncated_series truncated_series::identity(int order) {
  auto s = zero(order);
  s.coeffs_[1] = 1.0;
  return s;
}

void truncated_series::set_coeff(int m, cplx v) {
  require(m >= 0 && m <= order(), errc::bad_order, "coefficient index out of range");
  coeffs_[size_t(m)] = v;
}

int truncated_series::valuation() const {
  for (int m = 0; m <= order(); ++m)
    if (coeffs_[size_t(m)] != cplx(0.0)) return m;
  return order() + 1;
}

truncated_series truncated_series::truncated(int order) const {
  require(order >= 1, errc::bad_order, "truncation order must be at least 1");
  std::vector<cplx> c(size_t(order) + 1, cplx(0.0));
  for (int m = 0; m <= std::min(order, this->order()); ++m) c[size_t(m)] = coeffs_[size_t(m)];
  return truncated_series(std::move(c));
}

cplx truncated_series::eval(cplx t) const {
  cplx acc = coeffs_.back();
  for (int m = order() - 1; m >= 0; --m) acc = acc * t + coeffs_[size_t(m)];
  return acc;
}

truncated_series truncated_series::derivative() const {
  std::vector<cplx> c(coeffs_.size(), cplx(0.0));
  for (int m = 1; m <= order(); ++m) c[size_t(m - 1)] = double(m) * coeffs_[size_t(m)];
  if (c.size() > 1) c.pop_back();
  if (c.size() < 2) c.push_back(0.0);
  return truncated_series(std::move(c));
}

namespace {
void check_same_order(const truncated_series& a, const truncated_series& b) {
  require(a.order() == b.order(), errc::order_mismatch, "series orders differ");
}
}  // namespace

truncated_series operator+(const truncated_series& a, const truncated_series& b) {
  check_same_order(a, b);
  std::vector<cplx> c(a.coeffs());
  for (int m = 0; m <= b.order(); ++m) c[size_t(m)] += b.coeff(m);
  return truncated_series(std::move(c));
}

truncated_series operator-(const truncated_series& a, const truncated_series& b) {
  check_same_order(a, b);
  std::vector<cplx> c(a.coeffs());
  for (int m = 0; m <= b.order(); ++m) c[size_t(m)] -= b.coeff(m);
  return truncated_series(std::move(c));
}

truncated_series operator*(const truncated_series& a, const truncated_series& b) {
  check_same_order(a, b);
  int n = a.order();
  std::vector<cplx> c(size_t(n) + 1, cplx(0.0));
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i) == cplx(0.0)) continue;
    for (int j = 0; i + j <= n; ++j) c[size_t(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return truncated_series(std::move(c));
}

truncated_series operator*(cplx s, const truncated_series& a) {
  std::vector<cplx> c(a.coeffs());
  for (auto& v : c) v *= s;
  return truncated_series(std::move(c));
}

truncated_series series_compose(const truncated_series& outer, const truncated_series& inner) {
  check_same_order(outer, inner);
  require(inner.coeff(0) == cplx(0.0), errc::inner_not_germ, "inner series must vanish at 0");
  int n = outer.order();
  // Horner on jets; exact through order n because inner has no constant term.
  truncated_series acc = truncated_series::zero(n);
  acc.set_coeff(0, outer.coeff(n));
  for (int m = n - 1; m >= 0; --m) {
    acc = acc * inner;
    acc.set_coeff(0, acc.coeff(0) + outer.coeff(m));
  }
  return acc;
}

truncated_series series_reverse(const truncated_series& s) {
  require(s.coeff(0) == cplx(0.0) && s.coeff(1) != cplx(0.0), errc::not_invertible,
          "series must be an invertible germ (c0 = 0, c1 != 0)");
  int n = s.order();
  truncated_series r = truncated_series::zero(n);
  r.set_coeff(1, 1.0 / s.coeff(1));
  // Order-by-order: coefficient m of s(r(t)) - t is linear in r_m with slope c1.
  for (int m = 2; m <= n; ++m) {
    cplx res = series_compose(s, r).coeff(m);
    r.set_coeff(m, -res / s.coeff(1));
  }
  return r;
}

truncated_series series_reciprocal(const truncated_series& s) {
  require(s.coeff(0) != cplx(0.0), errc::not_invertible, "reciprocal needs s(0) != 0");
  int n = s.order();
  truncated_series r = truncated_series::zero(n);
  r.set_coeff(0, 1.0 / s.coeff(0));
  for (int m = 1; m <= n; ++m) {
    cplx acc = 0.0;
    for (int j = 1; j <= m; ++j) acc += s.coeff(j) * r.coeff(m - j);
    r.set_coeff(m, -acc / s.coeff(0));
  }
  return r;
}

truncated_series series_time1_flow(const truncated_series& field, int order) {
  require(order >= 1, errc::bad_order, "truncation order must be at least 1");
  truncated_series v = field.truncated(order);
  require(v.coeff(0) == cplx(0.0) && v.coeff(1) == cplx(0.0), errc::bad_order,
          "flow field must vanish to order >= 2");
  truncated_series g = truncated_series::identity(order);
  truncated_series u = truncated_series::identity(order);  // L_v^m(id)
  double factorial = 1.0;
  for (int m = 1; m <= order; ++m) {
    u = v * u.derivative();
    if (u.valuation() > order) break;  // nilpotent past this order
    factorial *= double(m);
    g = g + (1.0 / factorial) * u;
  }
  return g;
}

truncated_series v_lambda_jet(int k, cplx lambda, int order) {
  require(k >= 1, errc::bad_order, "k must be >= 1");
  require(order >= k + 1, errc::bad_order, "order too low to hold t^{k+1}");
  truncated_series v = truncated_series::zero(order);
  // 2*pi*i t^{k+1} * sum_j (-lambda)^j t^{jk}
  cplx pow = 1.0;
  for (int j = 0; k + 1 + j * k <= order; ++j) {
    v.set_coeff(k + 1 + j * k, two_pi_i * pow);
    pow *= -lambda;
  }
  return v;
}

}  // namespace stokes
