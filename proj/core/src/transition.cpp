#include "stokes/transition.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "stokes/error.hpp"

namespace stokes {

cplx transition_sample::coeff(int l) const {
  auto it = fourier.find(l);
  return it == fourier.end() ? cplx(0.0) : it->second;
}

double transition_sample::periodicity_defect() const {
  if (samples.size() < 2) return 0.0;
  const auto& a = samples.front();
  const auto& b = samples.back();
  if (std::abs((b.first - a.first) - cplx(1.0)) > 1e-9) return 0.0;  // no closing sample
  return std::abs((b.second - b.first) - (a.second - a.first));
}

void fourier_extract(transition_sample& ts, int range) {
  require(!ts.samples.empty(), errc::config_error, "no samples");
  // Use exactly one period: drop a closing sample at tau0 + 1 if present.
  size_t m = ts.samples.size();
  if (m > 1 && std::abs((ts.samples.back().first - ts.samples.front().first) - cplx(1.0)) < 1e-9)
    --m;
  ts.fourier.clear();
  for (int l = -range; l <= range; ++l) {
    cplx acc = 0.0;
    for (size_t i = 0; i < m; ++i) {
      const auto& [in, out] = ts.samples[i];
      acc += (out - in) * std::exp(-two_pi_i * double(l) * in);
    }
    ts.fourier[l] = acc / double(m);
  }
  ts.c0 = ts.fourier[0];
}

transition_sample regauged(const transition_sample& ts, cplx a_src, cplx a_dst) {
  transition_sample out = ts;
  for (auto& [in, val] : out.samples) {
    in += a_src;
    val += a_dst;
  }
  for (auto& [l, c] : out.fourier) {
    if (l == 0)
      c += a_dst - a_src;
    else
      c *= std::exp(-two_pi_i * double(l) * a_src);
  }
  out.c0 = out.fourier.count(0) ? out.fourier[0] : out.c0 + a_dst - a_src;
  return out;
}

std::vector<cplx> polyfit(const std::vector<std::pair<cplx, cplx>>& pts, int degree,
                          double* residual, bool through_zero_identity) {
  require(!pts.empty() && degree >= 0, errc::fit_bad, "empty fit");
  int lo = through_zero_identity ? 2 : 0;
  int ncoef = degree - lo + 1;
  require(ncoef >= 1 && int(pts.size()) >= ncoef, errc::fit_bad, "underdetermined fit");
  Eigen::MatrixXcd A(pts.size(), ncoef);
  Eigen::VectorXcd b(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    cplx x = pts[i].first;
    cplx y = pts[i].second;
    if (through_zero_identity) y -= x;
    cplx pw = 1.0;
    for (int m = 0; m < lo; ++m) pw *= x;
    for (int m = 0; m < ncoef; ++m) {
      A(long(i), m) = pw;
      pw *= x;
    }
    b(long(i)) = y;
  }
  Eigen::VectorXcd sol = A.colPivHouseholderQr().solve(b);
  std::vector<cplx> coeffs(size_t(degree) + 1, cplx(0.0));
  if (through_zero_identity) coeffs[1] = 1.0;
  for (int m = 0; m < ncoef; ++m) coeffs[size_t(lo + m)] = sol(m);
  if (residual) {
    double worst = 0.0;
    for (const auto& [x, y] : pts) {
      cplx p = 0.0;
      for (size_t m = coeffs.size(); m-- > 0;) p = p * x + coeffs[m];
      worst = std::max(worst, std::abs(p - y));
    }
    *residual = worst;
  }
  return coeffs;
}

namespace {

cplx eval_poly(const std::vector<cplx>& c, cplx x) {
  cplx p = 0.0;
  for (size_t m = c.size(); m-- > 0;) p = p * x + c[m];
  return p;
}

cplx eval_poly_deriv(const std::vector<cplx>& c, cplx x) {
  cplx p = 0.0;
  for (size_t m = c.size(); m-- > 1;) p = p * x + double(m) * c[m];
  return p;
}

}  // namespace

std::pair<transition_sample, transition_sample> split_composition(const transition_sample& phi,
                                                                  parity_t parity) {
  require(phi.samples.size() >= 4, errc::fit_bad, "need samples near 0 to split");
  int degree = std::min<int>(6, int(phi.samples.size()) - 1);
  double res = 0.0;
  auto fit = polyfit(phi.samples, degree, &res);

  transition_sample first, second;  // phi = second . first
  first.half_plane_sign = phi.half_plane_sign;
  second.half_plane_sign = phi.half_plane_sign;

  if (parity == parity_t::even) {
    cplx c = fit[0];  // phi(0)
    for (const auto& [in, out] : phi.samples) {
      first.samples.emplace_back(in, out - c);
      second.samples.emplace_back(out - c, out);
    }
    first.c0 = 0.0;
    second.c0 = c;
  } else {
    require(std::abs(fit.size() > 1 ? fit[1] : cplx(0.0)) > 1e-10, errc::not_univalent,
            "composed transition has vanishing derivative near 0");
    cplx s = -fit[0] / fit[1];  // phi^{-1}(0) by Newton on the fitted jet
    for (int it = 0; it < 40; ++it) {
      cplx p = eval_poly(fit, s);
      cplx d = eval_poly_deriv(fit, s);
      require(std::abs(d) > 1e-12, errc::not_univalent, "inversion of composed transition failed");
      cplx step = p / d;
      s -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(s))) break;
    }
    for (const auto& [in, out] : phi.samples) {
      first.samples.emplace_back(in, in - s);
      second.samples.emplace_back(in - s, out);
    }
    first.c0 = -s;
    second.c0 = eval_poly(fit, s) + s;  // ~ s-translation content of the tail factor
  }
  return {first, second};
}

transition_sample time_to_integral(const transition_sample& psi) {
  require(psi.half_plane_sign > 0, errc::branch_mismatch,
          "integral chart at 0 needs the transition holomorphic toward Im tau -> +inf");
  transition_sample out;
  out.half_plane_sign = psi.half_plane_sign;
  for (const auto& [in, val] : psi.samples)
    out.samples.emplace_back(std::exp(two_pi_i * in), std::exp(two_pi_i * val));
  out.fourier = psi.fourier;  // exponents of phi(s) = s exp(2 pi i (c0 + sum c_l s^l))
  out.c0 = psi.c0;
  return out;
}

}  // namespace stokes
