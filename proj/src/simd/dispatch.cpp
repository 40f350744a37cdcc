#include <cstdlib>
#include <stdexcept>
#include <string>

#include "orlicz/simd/kernels.hpp"

namespace orlicz::simd {

#if defined(ORLICZ_HAVE_AVX2_TU)
const KernelTable& avx2_kernel_table();
#endif

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

const KernelTable* avx2_kernels() {
#if defined(ORLICZ_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  if (supported) return &avx2_kernel_table();
#endif
  return nullptr;
}

namespace {

const KernelTable& select() {
  const char* forced = std::getenv("ORLICZ_SIMD");
  if (forced != nullptr) {
    const std::string choice(forced);
    if (choice == "scalar") return scalar_kernels();
    if (choice == "avx2") {
      if (const KernelTable* t = avx2_kernels()) return *t;
      throw std::runtime_error("ORLICZ_SIMD=avx2 requested but AVX2 is unavailable");
    }
  }
  if (const KernelTable* t = avx2_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& kernels() {
  static const KernelTable& table = select();
  return table;
}

Isa active_isa() { return kernels().isa; }

}  // namespace orlicz::simd
