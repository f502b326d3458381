#ifndef STOKES_SECTORS_HPP
#define STOKES_SECTORS_HPP

#include <utility>
#include <vector>

#include "stokes/precision.hpp"
#include "stokes/roots.hpp"

namespace stokes {

/// Wrap an angle to [0, 2*pi).
double ang_norm(double a);
/// Shortest-arc distance between two directions, in [0, pi].
double ang_dist(double a, double b);
/// Distance between two lines through 0 (directions mod pi), in [0, pi/2].
double line_dist(double a, double b);

/// Open radial sector 0 < |t| < radius, angular distance to the bisector
/// below opening/2.
struct sector {
  double bisector_arg = 0.0;  // radians
  double opening = 0.0;       // radians, in (0, 2*pi)
  double radius = 1.0;

  bool contains_arg(double a) const { return ang_dist(a, bisector_arg) < opening / 2.0; }
  bool contains(cplx t) const {
    double r = std::abs(t);
    return r > 0.0 && r < radius && contains_arg(std::arg(t));
  }
};

/// Arguments pi(1+2j)/(2k), j = 0..2k-1, of the rays where t^k is imaginary.
std::vector<double> imaginary_dividing_rays(int k);

struct good_sector_check {
  bool good = false;
  int ray_index = -1;  // the j making the sector j-good
};

/// True iff exactly one imaginary dividing ray lies in the open sector and no
/// other ray lies in its closure.
good_sector_check is_good_sector(const sector& s, int k);

struct assigned_sector {
  sector sec;
  int ray_index = -1;      // j_i of the contained dividing ray
  double limit_arg = 0.0;  // extrapolated radial argument of alpha_i
  double margin = 0.0;     // pi/(2k) minus the ray distance
};

/// Builds the good sector attached to the singularity family alpha_i: it
/// contains the closest imaginary dividing ray and the limit radial ray of
/// alpha_i with angles above pi/(2k) to the boundary.  The opening defaults
/// to pi/k + 2*margin/3 inside the admissible window.
assigned_sector sector_for_singularity(const std::vector<family_roots>& family, int index,
                                       double radius = 1.0);

struct nondegeneracy_check {
  bool nondegenerate = false;
  double margin = 0.0;  // radians; worst angular distance to the forbidden set
};

/// k = 1: the line through the root pair must meet the real axis at an angle
/// bounded away from 0.  k >= 2: no bissectrix of the limit regular polygon
/// may lie in a real dividing line.
nondegeneracy_check check_nondegenerate(const std::vector<family_roots>& family, int k,
                                        double threshold = 0.05);

struct limit_polygon_result {
  std::vector<cplx> vertices;  // extrapolated, diameter-1 normalization
  double defect = 0.0;         // deviation from the fitted regular polygon
  cplx phase{};                // fitted rho * e^{i beta}
};

/// Rescales each sample's root polygon to diameter 1, extrapolates eps -> 0
/// with linear Richardson in |eps|^{1/(k+1)}, and measures regularity.
limit_polygon_result limit_polygon(const std::vector<family_roots>& family,
                                   double defect_threshold = 1e-2);

struct rotation_disc {
  cplx center{};
  double radius = 0.0;
  double ratio = 0.0;  // Apollonius modulus of the bounding trajectory

  bool contains(cplx t) const { return std::abs(t - center) < radius; }
};

/// Largest closed-trajectory disc of the rotated quadratic model around the
/// root roots[index], inside {|t| < delta}; the boundary is the Apollonius
/// circle |(t-alpha)/(t+alpha)| = c internally tangent to |t| = delta.
rotation_disc rotation_disc_k1(const family_roots& fr, double delta, int index = 0);

}  // namespace stokes

#endif
