#include "stokes/formal.hpp"

#include <algorithm>
#include <cmath>

#include "stokes/error.hpp"

namespace stokes {

truncated_series series_conjugate(const truncated_series& h, const truncated_series& f) {
  return series_compose(series_compose(h, f), series_reverse(h));
}

namespace {

void check_map_normalization(const truncated_series& f, int k) {
  require(std::abs(f.coeff(0)) <= 1e-12, errc::wrong_normalization, "f must fix 0");
  require(std::abs(f.coeff(1) - cplx(1.0)) <= 1e-12, errc::wrong_normalization,
          "f must be tangent to identity");
  for (int m = 2; m <= k; ++m)
    require(std::abs(f.coeff(m)) <= 1e-12, errc::wrong_normalization,
            "coefficients below t^{k+1} must vanish");
  require(std::abs(f.coeff(k + 1) - two_pi_i) <= 1e-12, errc::wrong_normalization,
          "the t^{k+1} coefficient must equal 2*pi*i");
}

}  // namespace

formal_invariant_result formal_invariant(const truncated_series& f_jet, int k, int work_order) {
  require(k >= 1, errc::bad_order, "k must be >= 1");
  require(f_jet.order() >= 2 * k + 1, errc::order_too_low,
          "jet order must be at least 2k+1 to expose the invariant");
  int w = work_order < 0 ? std::min(f_jet.order(), 2 * k + 4) : work_order;
  require(w >= 2 * k + 1, errc::order_too_low, "working order below 2k+1");
  require(w <= f_jet.order(), errc::order_too_low, "working order exceeds the supplied jet");

  truncated_series f = f_jet.truncated(w);
  check_map_normalization(f, k);

  truncated_series h = truncated_series::identity(w);
  cplx lambda = 0.0;

  auto residual_at = [&](cplx lam, int n) {
    truncated_series g = series_time1_flow(v_lambda_jet(k, lam, w), w);
    truncated_series r = series_compose(h, f) - series_compose(g, h);
    return r.coeff(n);
  };

  // Sweep target orders; each residual coefficient is linear in the single
  // unknown active at that order (h_{n-k}, or lambda at order 2k+1 where the
  // homological factor of h_{k+1} vanishes).
  for (int n = k + 2; n <= w; ++n) {
    int m = n - k;
    if (m == k + 1) {
      cplx r0 = residual_at(cplx(0.0), n);
      cplx r1 = residual_at(cplx(1.0), n);
      cplx slope = r1 - r0;
      require(std::abs(slope) > 1e-14, errc::singular_solve, "lambda probe degenerate");
      lambda = -r0 / slope;
    } else {
      cplx save = h.coeff(m);
      h.set_coeff(m, save);
      cplx r0 = residual_at(lambda, n);
      h.set_coeff(m, save + 1.0);
      cplx r1 = residual_at(lambda, n);
      cplx slope = r1 - r0;
      require(std::abs(slope) > 1e-14, errc::singular_solve, "conjugacy probe degenerate");
      h.set_coeff(m, save - r0 / slope);
    }
  }

  return {k, lambda, h};
}

// ---------------------------------------------------------------------------

void poly_jet::add(std::vector<int> y_pow, int t_pow, cplx c) {
  require(int(y_pow.size()) == ny, errc::config_error, "multi-index size mismatch");
  for (auto& t : terms) {
    if (t.t_pow == t_pow && t.y_pow == y_pow) {
      t.c += c;
      return;
    }
  }
  terms.push_back({std::move(y_pow), t_pow, c});
}

truncated_series poly_jet::substitute(const std::vector<truncated_series>& q) const {
  require(int(q.size()) == ny, errc::config_error, "component count mismatch");
  int order = ny > 0 ? q[0].order() : 8;
  for (const auto& s : q)
    require(s.order() == order, errc::order_mismatch, "component orders differ");
  truncated_series acc = truncated_series::zero(order);
  std::vector<int> vals(size_t(ny), 0);
  for (int i = 0; i < ny; ++i) vals[size_t(i)] = q[size_t(i)].valuation();
  for (const auto& term : terms) {
    long val = term.t_pow;
    for (int i = 0; i < ny; ++i) val += long(vals[size_t(i)]) * term.y_pow[size_t(i)];
    if (val > order) continue;
    truncated_series mono = truncated_series::zero(order);
    if (term.t_pow <= order) mono.set_coeff(term.t_pow, term.c);
    for (int i = 0; i < ny; ++i)
      for (int p = 0; p < term.y_pow[i]; ++p) mono = mono * q[i];
    acc = acc + mono;
  }
  return acc;
}

void formal_field_spec::validate() const {
  require(n >= 2, errc::config_error, "phase dimension must be >= 2");
  require(k >= 1, errc::config_error, "k must be >= 1");
  int ny = n - 1;
  require(B.rows() == ny && B.cols() == ny, errc::config_error, "B has wrong shape");
  require(int(y_rhs.size()) == ny, errc::config_error, "y component count mismatch");
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(B);
  require(lu.isInvertible(), errc::singular_solve, "matrix B is degenerate");

  // F = t^{k+1} + O(|y|^2): pure-t part is exactly t^{k+1}, no y-linear terms.
  for (const auto& term : t_rhs.terms) {
    int ydeg = 0;
    for (int p : term.y_pow) ydeg += p;
    if (ydeg == 0) {
      bool is_tk1 = term.t_pow == k + 1;
      require((is_tk1 && std::abs(term.c - cplx(1.0)) <= 1e-12) ||
                  (!is_tk1 && std::abs(term.c) <= 1e-12),
              errc::config_error, "t-component must begin with a clean t^{k+1}");
    } else {
      require(ydeg >= 2 || std::abs(term.c) <= 1e-12, errc::config_error,
              "t-component may depend on y only at order |y|^2");
    }
  }
  // The y-linear, t-free part of G must match B.
  Eigen::MatrixXcd lin = Eigen::MatrixXcd::Zero(ny, ny);
  for (int i = 0; i < ny; ++i) {
    for (const auto& term : y_rhs[size_t(i)].terms) {
      int ydeg = 0, which = -1;
      for (int j = 0; j < ny; ++j) {
        ydeg += term.y_pow[size_t(j)];
        if (term.y_pow[size_t(j)] == 1) which = j;
      }
      if (ydeg == 1 && term.t_pow == 0) lin(i, which) = term.c;
    }
  }
  require((lin - B).cwiseAbs().maxCoeff() <= 1e-12, errc::config_error,
          "linear part of the y-component disagrees with B");
}

namespace {

std::vector<truncated_series> defect_series(const formal_field_spec& field,
                                            const std::vector<truncated_series>& q) {
  int ny = field.n - 1;
  truncated_series F = field.t_rhs.substitute(q);
  std::vector<truncated_series> d;
  d.reserve(size_t(ny));
  for (int i = 0; i < ny; ++i) {
    truncated_series lhs = q[size_t(i)].derivative().truncated(q[size_t(i)].order()) * F;
    truncated_series rhs = field.y_rhs[size_t(i)].substitute(q);
    d.push_back(lhs - rhs);
  }
  return d;
}

}  // namespace

std::vector<truncated_series> formal_central_manifold(const formal_field_spec& field, int order) {
  field.validate();
  require(order >= 2, errc::order_too_low, "order must be >= 2");
  int ny = field.n - 1;
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(field.B);

  std::vector<truncated_series> q(size_t(ny), truncated_series::zero(order));
  for (int m = 2; m <= order; ++m) {
    auto d = defect_series(field, q);
    Eigen::VectorXcd rhs(ny);
    for (int i = 0; i < ny; ++i) rhs(i) = d[size_t(i)].coeff(m);
    Eigen::VectorXcd qm = lu.solve(rhs);
    require((field.B * qm - rhs).norm() <= 1e-8 * (1.0 + rhs.norm()), errc::singular_solve,
            "central-manifold linear solve failed");
    for (int i = 0; i < ny; ++i) q[size_t(i)].set_coeff(m, qm(i));
  }
  return q;
}

double central_manifold_defect(const formal_field_spec& field,
                               const std::vector<truncated_series>& q, int order) {
  auto d = defect_series(field, q);
  double worst = 0.0;
  for (const auto& s : d)
    for (int m = 0; m <= std::min(order, s.order()); ++m)
      worst = std::max(worst, std::abs(s.coeff(m)));
  return worst;
}

}  // namespace stokes
