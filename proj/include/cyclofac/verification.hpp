#pragma once

#include "cyclofac/poly.hpp"

namespace cyclofac {

// Verification mode: closed-form results are recomputed through the generic
// gcd / resultant / trial-division paths and compared. Off by default.
// Recomputation is skipped above kVerifyDegreeLimit, where the generic paths
// would have to densify.

inline constexpr Exponent kVerifyDegreeLimit = 2048;

bool verification_enabled() noexcept;
void set_verification(bool on) noexcept;

/// RAII toggle; restores the previous setting.
class VerificationScope {
 public:
  explicit VerificationScope(bool on = true) : previous_(verification_enabled()) {
    set_verification(on);
  }
  ~VerificationScope() { set_verification(previous_); }

  VerificationScope(const VerificationScope&) = delete;
  VerificationScope& operator=(const VerificationScope&) = delete;

 private:
  bool previous_;
};

}  // namespace cyclofac
