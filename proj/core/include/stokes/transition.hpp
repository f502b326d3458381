#ifndef STOKES_TRANSITION_HPP
#define STOKES_TRANSITION_HPP

#include <map>
#include <utility>
#include <vector>

#include "stokes/precision.hpp"

namespace stokes {

/// Sampled transition function between two charts, with Fourier data of
/// psi(tau) - tau extracted on the sampled horizontal line.
struct transition_sample {
  std::vector<std::pair<cplx, cplx>> samples;  // (tau_in, tau_out)
  int half_plane_sign = -1;  // sign s: domain is the half-plane s*Im(tau) > const
  std::map<int, cplx> fourier;
  cplx c0{};

  cplx coeff(int l) const;
  /// Periodicity defect |(psi(tau+1)-psi(tau)) - 1| inferred from endpoints.
  double periodicity_defect() const;
};

/// c_l = mean over samples of (tau_out - tau_in) e^{-2 pi i l tau_in};
/// exact for trigonometric data on an equispaced unit-period line.
void fourier_extract(transition_sample& ts, int range);

/// Effect of re-normalizing the source chart by +a_src and the target chart
/// by +a_dst: psi~(tau) = psi(tau - a_src) + a_dst.
transition_sample regauged(const transition_sample& ts, cplx a_src, cplx a_dst);

enum class parity_t { even, odd };

/// Splits a composed transition (integral coordinate, sampled near 0) into
/// its two factors: even case phi_{l+1} = tau + phi(0), phi_l = phi - phi(0);
/// odd case phi_l = tau - phi^{-1}(0), phi_{l+1} = phi(tau + phi^{-1}(0)).
/// The returned pair composes back to the input exactly at the sample points.
std::pair<transition_sample, transition_sample> split_composition(const transition_sample& phi,
                                                                  parity_t parity);

/// Conjugates a time-coordinate transition by E(tau) = e^{2 pi i tau}; the
/// allowed Fourier side must decay toward sigma -> 0 (Im tau -> +infinity).
transition_sample time_to_integral(const transition_sample& psi);

/// Restriction of the canonic first integral to the transversal: e^{2 pi i tau}.
inline cplx integral_from_time(cplx tau) { return std::exp(two_pi_i * tau); }

/// Least-squares polynomial fit p(0..degree) through samples (x, y).
std::vector<cplx> polyfit(const std::vector<std::pair<cplx, cplx>>& pts, int degree,
                          double* residual = nullptr, bool through_zero_identity = false);

}  // namespace stokes

#endif
