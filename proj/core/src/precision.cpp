#include "stokes/precision.hpp"

#include <atomic>

#include "stokes/error.hpp"

namespace stokes {

namespace {
std::atomic<precision_mode> g_mode{precision_mode::fast};
}

precision_mode global_precision() noexcept { return g_mode.load(std::memory_order_relaxed); }
void set_global_precision(precision_mode m) noexcept { g_mode.store(m, std::memory_order_relaxed); }

std::string precision_name(precision_mode m) {
  return m == precision_mode::fast ? "double" : "double-double";
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::inner_not_germ: return "InnerNotGerm";
    case errc::not_invertible: return "NotInvertible";
    case errc::bad_order: return "BadOrder";
    case errc::order_mismatch: return "OrderMismatch";
    case errc::wrong_normalization: return "WrongNormalization";
    case errc::order_too_low: return "OrderTooLow";
    case errc::singular_solve: return "SingularSolve";
    case errc::degenerate_input: return "DegenerateInput";
    case errc::not_regular: return "NotRegular";
    case errc::roots_outside: return "RootsOutside";
    case errc::not_converged: return "NotConverged";
    case errc::outside_domain: return "OutsideDomain";
    case errc::newton_failed: return "NewtonFailed";
    case errc::no_overlap: return "NoOverlap";
    case errc::branch_cut: return "BranchCut";
    case errc::branch_mismatch: return "BranchMismatch";
    case errc::not_univalent: return "NotUnivalent";
    case errc::step_failure: return "StepFailure";
    case errc::off_domain: return "OffDomain";
    case errc::fit_bad: return "FitBad";
    case errc::origin_pole: return "OriginPole";
    case errc::config_error: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace stokes
