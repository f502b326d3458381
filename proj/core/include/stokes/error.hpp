#ifndef STOKES_ERROR_HPP
#define STOKES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace stokes {

enum class errc {
  inner_not_germ,
  not_invertible,
  bad_order,
  order_mismatch,
  wrong_normalization,
  order_too_low,
  singular_solve,
  degenerate_input,
  not_regular,
  roots_outside,
  not_converged,
  outside_domain,
  newton_failed,
  no_overlap,
  branch_cut,
  branch_mismatch,
  not_univalent,
  step_failure,
  off_domain,
  fit_bad,
  origin_pole,
  config_error,
};

const char* errc_name(errc c);

/// Every failure in the library carries one of the codes above.
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool ok, errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace stokes

#endif
