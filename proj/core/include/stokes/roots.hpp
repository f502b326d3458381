#ifndef STOKES_ROOTS_HPP
#define STOKES_ROOTS_HPP

#include <functional>
#include <vector>

#include "stokes/precision.hpp"

namespace stokes {

/// Roots alpha_0..alpha_k of the splitting polynomial at one parameter value,
/// numbered counterclockwise.  The paper's normalization sum alpha_i = 0 is
/// enforced on construction.
struct family_roots {
  int k = 1;
  cplx eps{};
  std::vector<cplx> roots;  // k+1 entries

  void validate() const;
};

/// Evaluates p(t) = prod (t - alpha_i) and its derivative.
cplx poly_from_roots(const std::vector<cplx>& roots, cplx t);
cplx poly_from_roots_derivative(const std::vector<cplx>& roots, cplx t);

/// All roots of a monic-or-not polynomial sum c_j t^j via the companion
/// matrix, with one Newton polish per root.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& coeffs);

/// Supplies the root configuration per epsilon: either explicit lists or a
/// polynomial-coefficient table evaluated and solved per sample.
class roots_provider {
public:
  using fn = std::function<std::vector<cplx>(cplx eps)>;

  roots_provider() = default;
  explicit roots_provider(int k, fn f) : k_(k), fn_(std::move(f)) {}

  /// p(t, eps) with coefficient c_j(eps) given as a polynomial in eps;
  /// table[j] lists the eps-coefficients of c_j, j = 0..k+1.
  static roots_provider from_coeff_table(int k, std::vector<std::vector<cplx>> table);
  /// Roots of t^{k+1} = eps (regular configuration).
  static roots_provider radicial(int k);
  /// Explicit per-sample lists; eps values must then match exactly.
  static roots_provider explicit_lists(int k, std::vector<cplx> eps, std::vector<std::vector<cplx>> roots);

  int k() const { return k_; }
  family_roots at(cplx eps) const;

private:
  int k_ = 1;
  fn fn_;
};

/// Matches each root of `now` to the closest root of `prev` by argument, so
/// vertex numbering stays continuous along an eps sequence.
std::vector<cplx> match_by_angle(const std::vector<cplx>& prev, const std::vector<cplx>& now);

}  // namespace stokes

#endif
