#include "stokes/roots.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "stokes/error.hpp"

namespace stokes {

void family_roots::validate() const {
  require(int(roots.size()) == k + 1, errc::config_error, "need k+1 roots");
  double scale = 0.0;
  cplx sum = 0.0;
  for (cplx r : roots) {
    sum += r;
    scale = std::max(scale, std::abs(r));
  }
  require(std::abs(sum) <= 1e-12 * std::max(scale, 1e-300) || scale == 0.0,
          errc::config_error, "root sum must vanish (centered family)");
  if (eps != cplx(0.0)) {
    for (size_t i = 0; i < roots.size(); ++i)
      for (size_t j = i + 1; j < roots.size(); ++j)
        require(std::abs(roots[i] - roots[j]) > 1e-14 * std::max(scale, 1e-300),
                errc::degenerate_input, "roots must be pairwise distinct for eps != 0");
  }
}

cplx poly_from_roots(const std::vector<cplx>& roots, cplx t) {
  cplx p = 1.0;
  for (cplx r : roots) p *= (t - r);
  return p;
}

cplx poly_from_roots_derivative(const std::vector<cplx>& roots, cplx t) {
  cplx d = 0.0;
  for (size_t i = 0; i < roots.size(); ++i) {
    cplx term = 1.0;
    for (size_t j = 0; j < roots.size(); ++j)
      if (j != i) term *= (t - roots[j]);
    d += term;
  }
  return d;
}

std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs) {
  int deg = int(coeffs.size()) - 1;
  while (deg > 0 && std::abs(coeffs[size_t(deg)]) == 0.0) --deg;
  require(deg >= 1, errc::config_error, "polynomial must be nonconstant");
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) comp(i, deg - 1) = -coeffs[size_t(i)] / coeffs[size_t(deg)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<cplx> roots(size_t(deg));
  for (int i = 0; i < deg; ++i) roots[size_t(i)] = es.eigenvalues()(i);
  // One Newton polish per root.
  auto eval = [&](cplx t, cplx& p, cplx& dp) {
    p = 0.0;
    dp = 0.0;
    for (int m = deg; m >= 0; --m) {
      dp = dp * t + p;
      p = p * t + coeffs[size_t(m)];
    }
  };
  for (auto& r : roots) {
    cplx p, dp;
    eval(r, p, dp);
    if (std::abs(dp) > 0.0) r -= p / dp;
  }
  return roots;
}

namespace {

std::vector<cplx> order_counterclockwise(std::vector<cplx> roots) {
  std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
    return std::arg(a) < std::arg(b);
  });
  return roots;
}

}  // namespace

roots_provider roots_provider::from_coeff_table(int k, std::vector<std::vector<cplx>> table) {
  require(int(table.size()) == k + 2, errc::config_error,
          "coefficient table needs k+2 rows (degrees 0..k+1)");
  return roots_provider(k, [k, table = std::move(table)](cplx eps) {
    std::vector<cplx> coeffs(size_t(k) + 2, cplx(0.0));
    for (size_t j = 0; j < table.size(); ++j) {
      cplx pw = 1.0;
      for (cplx c : table[j]) {
        coeffs[j] += c * pw;
        pw *= eps;
      }
    }
    if (eps == cplx(0.0)) return std::vector<cplx>(size_t(k) + 1, cplx(0.0));
    return order_counterclockwise(polynomial_roots(coeffs));
  });
}

roots_provider roots_provider::radicial(int k) {
  return roots_provider(k, [k](cplx eps) {
    std::vector<cplx> roots(size_t(k) + 1);
    if (eps == cplx(0.0)) return std::vector<cplx>(size_t(k) + 1, cplx(0.0));
    cplx base = std::pow(eps, 1.0 / double(k + 1));
    for (int j = 0; j <= k; ++j)
      roots[size_t(j)] = base * std::polar(1.0, 2.0 * pi * double(j) / double(k + 1));
    return order_counterclockwise(roots);
  });
}

roots_provider roots_provider::explicit_lists(int k, std::vector<cplx> eps,
                                              std::vector<std::vector<cplx>> roots) {
  require(eps.size() == roots.size(), errc::config_error, "eps/roots row count mismatch");
  return roots_provider(k, [eps = std::move(eps), roots = std::move(roots)](cplx e) {
    for (size_t i = 0; i < eps.size(); ++i)
      if (eps[i] == e) return roots[i];
    if (e == cplx(0.0) && !roots.empty())
      return std::vector<cplx>(roots[0].size(), cplx(0.0));
    fail(errc::config_error, "explicit root list has no entry for this eps");
  });
}

family_roots roots_provider::at(cplx eps) const {
  require(bool(fn_), errc::config_error, "roots provider is empty");
  family_roots fr{k_, eps, fn_(eps)};
  fr.validate();
  return fr;
}

std::vector<cplx> match_by_angle(const std::vector<cplx>& prev, const std::vector<cplx>& now) {
  require(prev.size() == now.size(), errc::config_error, "root counts differ");
  std::vector<cplx> out(now.size());
  std::vector<bool> used(now.size(), false);
  for (size_t i = 0; i < prev.size(); ++i) {
    double best = 1e300;
    size_t pick = 0;
    for (size_t j = 0; j < now.size(); ++j) {
      if (used[j]) continue;
      double d = std::abs(std::remainder(std::arg(now[j]) - std::arg(prev[i]), 2.0 * pi));
      if (d < best) {
        best = d;
        pick = j;
      }
    }
    used[pick] = true;
    out[i] = now[pick];
  }
  return out;
}

}  // namespace stokes
