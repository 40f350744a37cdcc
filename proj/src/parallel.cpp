#include "orlicz/parallel.hpp"

#include <cstdlib>
#include <string>

namespace orlicz {

namespace {
std::atomic<std::size_t> g_override{0};
}

void set_worker_count(std::size_t n) { g_override = n; }

std::size_t worker_count() {
  if (const std::size_t o = g_override.load()) return o;
  if (const char* env = std::getenv("ORLICZ_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace orlicz
