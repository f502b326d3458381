#ifndef STOKES_PRECISION_HPP
#define STOKES_PRECISION_HPP

#include <cmath>
#include <complex>
#include <string>

namespace stokes {

using cplx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline const cplx two_pi_i{0.0, 2.0 * pi};

/// Coefficients stay double precision everywhere; orbit-limit cores can be
/// switched to double-double when deep-eps sweeps run out of headroom.
enum class precision_mode { fast, extended };

precision_mode global_precision() noexcept;
void set_global_precision(precision_mode m) noexcept;
std::string precision_name(precision_mode m);

// ---------------------------------------------------------------------------
// Double-double scalar (Dekker/Knuth error-free transforms).  Only the
// operations the orbit cores need are provided.
// ---------------------------------------------------------------------------

struct dd_real {
  double hi = 0.0;
  double lo = 0.0;

  dd_real() = default;
  dd_real(double h) : hi(h), lo(0.0) {}
  dd_real(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi + lo; }
};

namespace detail {
inline dd_real two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}
inline dd_real quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}
inline dd_real two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}
}  // namespace detail

inline dd_real operator+(dd_real a, dd_real b) {
  dd_real s = detail::two_sum(a.hi, b.hi);
  double lo = s.lo + a.lo + b.lo;
  return detail::quick_two_sum(s.hi, lo);
}
inline dd_real operator-(dd_real a) { return {-a.hi, -a.lo}; }
inline dd_real operator-(dd_real a, dd_real b) { return a + (-b); }
inline dd_real operator*(dd_real a, dd_real b) {
  dd_real p = detail::two_prod(a.hi, b.hi);
  double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
  return detail::quick_two_sum(p.hi, lo);
}
inline dd_real operator/(dd_real a, dd_real b) {
  double q1 = a.hi / b.hi;
  dd_real r = a - b * dd_real(q1);
  double q2 = r.hi / b.hi;
  r = r - b * dd_real(q2);
  double q3 = r.hi / b.hi;
  dd_real q = detail::quick_two_sum(q1, q2);
  return q + dd_real(q3);
}
inline dd_real& operator+=(dd_real& a, dd_real b) { return a = a + b; }
inline dd_real& operator-=(dd_real& a, dd_real b) { return a = a - b; }
inline dd_real& operator*=(dd_real& a, dd_real b) { return a = a * b; }
inline bool operator<(dd_real a, dd_real b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd_real a, dd_real b) { return b < a; }
inline dd_real fabs(dd_real a) { return (a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0)) ? -a : a; }
inline dd_real sqrt(dd_real a) {
  if (a.hi == 0.0) return {0.0, 0.0};
  double x = std::sqrt(a.hi);
  dd_real x2 = detail::two_prod(x, x);
  dd_real r = (a - x2) / dd_real(2.0 * x);
  return detail::quick_two_sum(x, double(r));
}

/// Complex double-double; just enough arithmetic for Koenigs/Fatou orbits.
struct dd_cplx {
  dd_real re, im;

  dd_cplx() = default;
  dd_cplx(dd_real r, dd_real i) : re(r), im(i) {}
  dd_cplx(double r, double i = 0.0) : re(r), im(i) {}
  dd_cplx(const cplx& z) : re(z.real()), im(z.imag()) {}

  explicit operator cplx() const { return {double(re), double(im)}; }
};

inline dd_cplx operator+(dd_cplx a, dd_cplx b) { return {a.re + b.re, a.im + b.im}; }
inline dd_cplx operator-(dd_cplx a, dd_cplx b) { return {a.re - b.re, a.im - b.im}; }
inline dd_cplx operator-(dd_cplx a) { return {-a.re, -a.im}; }
inline dd_cplx operator*(dd_cplx a, dd_cplx b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline dd_cplx operator/(dd_cplx a, dd_cplx b) {
  dd_real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline dd_cplx& operator+=(dd_cplx& a, dd_cplx b) { return a = a + b; }
inline dd_cplx& operator*=(dd_cplx& a, dd_cplx b) { return a = a * b; }
inline dd_real norm2(dd_cplx a) { return a.re * a.re + a.im * a.im; }
inline dd_real abs(dd_cplx a) { return sqrt(norm2(a)); }

// Uniform accessors so numeric code can be templated over cplx / dd_cplx.
inline cplx to_cplx(const cplx& z) { return z; }
inline cplx to_cplx(const dd_cplx& z) { return cplx(z); }
inline double abs_d(const cplx& z) { return std::abs(z); }
inline double abs_d(const dd_cplx& z) { return double(abs(z)); }

}  // namespace stokes

#endif
