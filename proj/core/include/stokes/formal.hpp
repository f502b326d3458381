#ifndef STOKES_FORMAL_HPP
#define STOKES_FORMAL_HPP

#include <Eigen/Dense>
#include <vector>

#include "stokes/series.hpp"

namespace stokes {

struct formal_invariant_result {
  int k = 1;
  cplx lambda{};
  /// Normalizing jet h, tangent to identity, with h . f . h^{-1} equal to the
  /// time-1 flow of v_lambda through the working order.  Gauge: the
  /// coefficient at order k+1 (the kernel of the homological operator) is 0.
  truncated_series conjugator;
};

/// Solves order by order for (h, lambda) with h.f.h^{-1} = time-1 flow of
/// v_lambda(t) = 2 pi i t^{k+1} (1 + lambda t^k)^{-1}.  The input must carry
/// the normalization f = t + 2 pi i t^{k+1}(1 + O(t)).
/// work_order < 0 selects the default min(f.order, 2k+4).
formal_invariant_result formal_invariant(const truncated_series& f_jet, int k,
                                         int work_order = -1);

/// h . f . h^{-1} through the common order (h must be an invertible germ).
truncated_series series_conjugate(const truncated_series& h, const truncated_series& f);

// ---------------------------------------------------------------------------
// Formal central manifold of a saddle-node field in C^n.
// ---------------------------------------------------------------------------

/// One monomial  c * y^pow * t^{t_pow}  of a multivariate jet.
struct multi_term {
  std::vector<int> y_pow;  // size n-1
  int t_pow = 0;
  cplx c{};
};

/// Dense-ified multivariate polynomial jet in (y_1..y_{n-1}, t).
struct poly_jet {
  int ny = 0;
  std::vector<multi_term> terms;

  void add(std::vector<int> y_pow, int t_pow, cplx c);
  /// Substitute y_i = q_i(t) and truncate; the q_i must share an order.
  truncated_series substitute(const std::vector<truncated_series>& q) const;
};

/// Data of the field  dy/ds = G(y,t), dt/ds = F(y,t)  with G = By + ...,
/// F = t^{k+1} + O(|y|^2).
struct formal_field_spec {
  int n = 2;         // phase dimension
  int k = 1;
  Eigen::MatrixXcd B;            // (n-1) x (n-1), nondegenerate
  std::vector<poly_jet> y_rhs;   // n-1 components of G
  poly_jet t_rhs;                // F

  void validate() const;
};

/// Unique formal series q(t) = sum_{m>=2} q_m t^m with the graph y = q(t)
/// tangent to the field: q'(t) F(q(t),t) = G(q(t),t) coefficient-wise.
std::vector<truncated_series> formal_central_manifold(const formal_field_spec& field, int order);

/// Max coefficient magnitude of the tangency defect through the given order
/// when substituting the candidate series into the field.
double central_manifold_defect(const formal_field_spec& field,
                               const std::vector<truncated_series>& q, int order);

}  // namespace stokes

#endif
