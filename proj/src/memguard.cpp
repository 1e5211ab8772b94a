#include "garnier/memguard.hpp"

#include <cstdio>
#include <unistd.h>

#include "garnier/errors.hpp"

namespace garnier::memguard {

namespace {
std::atomic<std::uint64_t> g_limit_mb{0};
}

void set_limit_mb(std::uint64_t mb) { g_limit_mb.store(mb); }
std::uint64_t limit_mb() { return g_limit_mb.load(std::memory_order_relaxed); }

std::uint64_t current_rss_mb() {
  std::FILE *f = std::fopen("/proc/self/statm", "r");
  if (!f)
    return 0;
  unsigned long size = 0, resident = 0;
  int n = std::fscanf(f, "%lu %lu", &size, &resident);
  std::fclose(f);
  if (n != 2)
    return 0;
  const std::uint64_t page = static_cast<std::uint64_t>(sysconf(_SC_PAGESIZE));
  return resident * page / (1024 * 1024);
}

void check_now() {
  const std::uint64_t cap = limit_mb();
  if (cap != 0 && current_rss_mb() > cap)
    throw MemoryCapError();
}

} // namespace garnier::memguard
