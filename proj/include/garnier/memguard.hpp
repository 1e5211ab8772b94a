#ifndef GARNIER_MEMGUARD_HPP
#define GARNIER_MEMGUARD_HPP

#include <atomic>
#include <cstdint>

namespace garnier::memguard {

// Cooperative memory cap for exact computations. When a positive limit is
// set (CLI reads GARNIER_MAX_MEMORY_MB), hot kernel loops call tick();
// every few thousand calls the process RSS is sampled and MemoryCapError
// is thrown once the cap is exceeded. Limit 0 disables the guard.
void set_limit_mb(std::uint64_t mb);
std::uint64_t limit_mb();

std::uint64_t current_rss_mb();

void check_now(); // throws MemoryCapError when over the cap

inline std::atomic<std::uint32_t> &counter() {
  static std::atomic<std::uint32_t> c{0};
  return c;
}

inline void tick() {
  if (limit_mb() == 0)
    return;
  if ((counter().fetch_add(1, std::memory_order_relaxed) & 0x3fff) == 0)
    check_now();
}

} // namespace garnier::memguard

#endif
