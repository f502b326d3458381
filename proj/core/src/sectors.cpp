#include "stokes/sectors.hpp"

#include <algorithm>
#include <cmath>

#include "stokes/error.hpp"

namespace stokes {

double ang_norm(double a) {
  double r = std::fmod(a, 2.0 * pi);
  if (r < 0.0) r += 2.0 * pi;
  return r;
}

double ang_dist(double a, double b) { return std::abs(std::remainder(a - b, 2.0 * pi)); }

double line_dist(double a, double b) {
  double d = std::abs(std::remainder(a - b, pi));
  return std::min(d, pi - d);
}

std::vector<double> imaginary_dividing_rays(int k) {
  require(k >= 1, errc::bad_order, "k must be >= 1");
  std::vector<double> rays(size_t(2 * k));
  for (int j = 0; j < 2 * k; ++j) rays[size_t(j)] = ang_norm(pi * double(1 + 2 * j) / double(2 * k));
  return rays;
}

good_sector_check is_good_sector(const sector& s, int k) {
  const double tiny = 1e-12;
  auto rays = imaginary_dividing_rays(k);
  int inside = 0, closure = 0, witness = -1;
  for (int j = 0; j < 2 * k; ++j) {
    double d = ang_dist(rays[size_t(j)], s.bisector_arg);
    if (d < s.opening / 2.0 - tiny) {
      ++inside;
      witness = j;
    }
    if (d <= s.opening / 2.0 + tiny) ++closure;
  }
  if (inside == 1 && closure == 1) return {true, witness};
  return {false, -1};
}

namespace {

void check_eps_sequence(const std::vector<family_roots>& family, size_t min_count) {
  require(family.size() >= min_count, errc::config_error, "too few eps samples");
  for (size_t i = 1; i < family.size(); ++i)
    require(std::abs(family[i].eps) < std::abs(family[i - 1].eps), errc::config_error,
            "eps samples must decrease in modulus");
}

/// Continued argument of alpha_index along the sequence, finished with a
/// linear Richardson step in h = |eps|^{1/(k+1)}.
double limit_argument(const std::vector<family_roots>& family, int index) {
  int k = family.front().k;
  double prev = std::arg(family.front().roots[size_t(index)]);
  std::vector<double> args, hs;
  for (const auto& fr : family) {
    double a = std::arg(fr.roots[size_t(index)]);
    a = prev + std::remainder(a - prev, 2.0 * pi);
    args.push_back(a);
    hs.push_back(std::pow(std::abs(fr.eps), 1.0 / double(k + 1)));
    prev = a;
  }
  if (args.size() == 1) return args[0];
  double h1 = hs[hs.size() - 2], h2 = hs.back();
  double a1 = args[args.size() - 2], a2 = args.back();
  if (std::abs(h1 - h2) < 1e-300) return a2;
  return (h1 * a2 - h2 * a1) / (h1 - h2);
}

}  // namespace

assigned_sector sector_for_singularity(const std::vector<family_roots>& family, int index,
                                       double radius) {
  check_eps_sequence(family, 1);
  int k = family.front().k;
  require(index >= 0 && index <= k, errc::config_error, "singularity index out of range");

  double theta = limit_argument(family, index);
  auto rays = imaginary_dividing_rays(k);
  int jbest = 0;
  double dbest = 1e300;
  for (int j = 0; j < 2 * k; ++j) {
    double d = ang_dist(theta, rays[size_t(j)]);
    if (d < dbest) {
      dbest = d;
      jbest = j;
    }
  }
  double margin = pi / (2.0 * k) - dbest;
  require(margin > 1e-9, errc::degenerate_input,
          "radial ray of the singularity is not strictly closer to one imaginary dividing ray");

  // Angular spread of the per-sample radial rays.
  double spread = 0.0;
  for (const auto& fr : family)
    spread = std::max(spread, ang_dist(std::arg(fr.roots[size_t(index)]), theta));

  double half = pi / (2.0 * k) + margin / 3.0;
  half = std::max(half, pi / (2.0 * k) + spread / 2.0 + margin / 6.0);
  require(half < pi / double(k) - dbest - 1e-9, errc::degenerate_input,
          "sector cannot be widened enough while staying good");

  sector s{ang_norm(theta), 2.0 * half, radius};
  auto chk = is_good_sector(s, k);
  require(chk.good && chk.ray_index == jbest, errc::degenerate_input,
          "constructed sector failed the goodness check");
  return {s, jbest, theta, margin};
}

nondegeneracy_check check_nondegenerate(const std::vector<family_roots>& family, int k,
                                        double threshold) {
  check_eps_sequence(family, 1);
  double margin = 1e300;
  if (k == 1) {
    for (const auto& fr : family) {
      require(fr.roots.size() == 2, errc::config_error, "k=1 needs a root pair");
      cplx d = fr.roots[0] - fr.roots[1];
      if (std::abs(d) == 0.0) return {false, 0.0};
      margin = std::min(margin, line_dist(std::arg(d), 0.0));
    }
  } else {
    // Bissectrices of the (fitted) regular polygon against real dividing lines.
    limit_polygon_result lp;
    try {
      lp = limit_polygon(family);
    } catch (const error& e) {
      if (e.code() == errc::not_regular) return {false, 0.0};
      throw;
    }
    auto polygon_margin = [&](double beta) {
      double worst = 1e300;
      for (int j = 0; j <= k; ++j) {
        double b = beta + pi * double(j) / double(k + 1);
        for (int m = 0; m < k; ++m) worst = std::min(worst, line_dist(b, pi * double(m) / double(k)));
      }
      return worst;
    };
    margin = polygon_margin(std::arg(lp.phase));
    for (const auto& fr : family) {
      cplx w = 0.0;
      double diam = 0.0;
      for (size_t i = 0; i < fr.roots.size(); ++i)
        for (size_t j = i + 1; j < fr.roots.size(); ++j)
          diam = std::max(diam, std::abs(fr.roots[i] - fr.roots[j]));
      if (diam == 0.0) return {false, 0.0};
      for (size_t i = 0; i < fr.roots.size(); ++i)
        w += (fr.roots[i] / diam) * std::polar(1.0, -2.0 * pi * double(i) / double(k + 1));
      margin = std::min(margin, polygon_margin(std::arg(w)));
    }
  }
  if (margin >= 1e300) return {false, 0.0};
  return {margin > threshold, margin};
}

limit_polygon_result limit_polygon(const std::vector<family_roots>& family,
                                   double defect_threshold) {
  check_eps_sequence(family, 3);
  int k = family.front().k;
  int nv = k + 1;

  std::vector<std::vector<cplx>> scaled;
  std::vector<double> hs;
  for (const auto& fr : family) {
    double diam = 0.0;
    for (int i = 0; i < nv; ++i)
      for (int j = i + 1; j < nv; ++j)
        diam = std::max(diam, std::abs(fr.roots[size_t(i)] - fr.roots[size_t(j)]));
    require(diam > 0.0, errc::degenerate_input, "coincident roots in polygon sample");
    std::vector<cplx> v(size_t(nv));
    for (int i = 0; i < nv; ++i) v[size_t(i)] = fr.roots[size_t(i)] / diam;
    if (!scaled.empty()) v = match_by_angle(scaled.back(), v);
    scaled.push_back(std::move(v));
    hs.push_back(std::pow(std::abs(fr.eps), 1.0 / double(nv)));
  }

  // Linear Richardson in h on the two smallest samples.
  const auto& vlast = scaled[scaled.size() - 1];
  const auto& vprev = scaled[scaled.size() - 2];
  double h2 = hs[hs.size() - 1], h1 = hs[hs.size() - 2];
  std::vector<cplx> vertices(size_t(nv));
  for (int i = 0; i < nv; ++i) {
    if (std::abs(h1 - h2) < 1e-300)
      vertices[size_t(i)] = vlast[size_t(i)];
    else
      vertices[size_t(i)] = (h1 * vlast[size_t(i)] - h2 * vprev[size_t(i)]) / (h1 - h2);
  }

  // Regular-polygon fit of the smallest sample (first DFT mode).
  cplx w = 0.0;
  for (int i = 0; i < nv; ++i)
    w += vlast[size_t(i)] * std::polar(1.0, -2.0 * pi * double(i) / double(nv));
  w /= double(nv);
  double defect = 0.0;
  for (int i = 0; i < nv; ++i) {
    cplx fit = w * std::polar(1.0, 2.0 * pi * double(i) / double(nv));
    defect = std::max(defect, std::abs(vlast[size_t(i)] - fit));
  }
  require(defect <= defect_threshold, errc::not_regular,
          "root polygon does not approach a regular polygon");
  return {vertices, defect, w};
}

rotation_disc rotation_disc_k1(const family_roots& fr, double delta, int index) {
  require(fr.k == 1 && fr.roots.size() == 2, errc::config_error, "needs a k=1 root pair");
  cplx alpha = fr.roots[size_t(index)];
  double a = std::abs(alpha);
  require(a > 0.0, errc::degenerate_input, "root at the origin");
  require(a < delta, errc::roots_outside, "roots must lie inside the disc of radius delta");
  double c = (delta - a) / (delta + a);
  double center_mod = (delta * delta + a * a) / (2.0 * delta);
  double radius = (delta * delta - a * a) / (2.0 * delta);
  return {alpha / a * center_mod, radius, c};
}

}  // namespace stokes
