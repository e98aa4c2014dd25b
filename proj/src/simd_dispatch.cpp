#include <atomic>
#include <cstdlib>
#include <cstring>

#include "abkernel/simd.hpp"

namespace abk::simd {

namespace {

std::atomic<int> g_forced{-1};

const Kernels& pick_default() {
  const char* env = std::getenv("ABKERNEL_SIMD");
  if (env && std::strcmp(env, "scalar") == 0) return scalar_kernels();
  if (available(Backend::avx2)) return *avx2_kernels();
  return scalar_kernels();
}

} // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool available(Backend b) {
  if (b == Backend::scalar) return true;
  return avx2_kernels() != nullptr && cpu_has_avx2();
}

const Kernels& active() {
  const int forced = g_forced.load();
  if (forced == static_cast<int>(Backend::scalar)) return scalar_kernels();
  if (forced == static_cast<int>(Backend::avx2) && available(Backend::avx2)) return *avx2_kernels();
  static const Kernels& dflt = pick_default();
  return dflt;
}

void set_backend(Backend b) { g_forced.store(static_cast<int>(b)); }

std::string backend_name() { return active().name; }

} // namespace abk::simd
