#include "cyclofac/verification.hpp"

#include <atomic>

namespace cyclofac {

namespace {
std::atomic<bool> g_verification{false};
}

bool verification_enabled() noexcept { return g_verification.load(std::memory_order_relaxed); }
void set_verification(bool on) noexcept { g_verification.store(on, std::memory_order_relaxed); }

}  // namespace cyclofac
