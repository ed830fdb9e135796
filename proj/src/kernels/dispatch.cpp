#include "actnet/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace actnet::kernels {

#ifdef ACTNET_BUILD_AVX2
const Kernels* avx2_kernels_impl();
#endif
#if defined(ACTNET_BUILD_NEON) && defined(__ARM_NEON)
const Kernels* neon_kernels_impl();
#endif

const Kernels* avx2_kernels() {
#ifdef ACTNET_BUILD_AVX2
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) return avx2_kernels_impl();
#endif
  return nullptr;
}

const Kernels* neon_kernels() {
#if defined(ACTNET_BUILD_NEON) && defined(__ARM_NEON)
  return neon_kernels_impl();
#else
  return nullptr;
#endif
}

namespace {

std::atomic<const Kernels*> g_active{nullptr};

const Kernels* lookup(const char* name) {
  if (std::strcmp(name, "scalar") == 0) return &scalar_kernels();
  if (std::strcmp(name, "avx2") == 0) return avx2_kernels();
  if (std::strcmp(name, "neon") == 0) return neon_kernels();
  return nullptr;
}

const Kernels* detect() {
  if (const char* env = std::getenv("ACTNET_KERNEL")) {
    if (const Kernels* k = lookup(env)) return k;
  }
  if (const Kernels* k = avx2_kernels()) return k;
  if (const Kernels* k = neon_kernels()) return k;
  return &scalar_kernels();
}

}  // namespace

const Kernels& active() {
  const Kernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = detect();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

bool select(const std::string& name) {
  const Kernels* k = lookup(name.c_str());
  if (!k) return false;
  g_active.store(k, std::memory_order_release);
  return true;
}

std::vector<std::string> available() {
  std::vector<std::string> out{"scalar"};
  if (avx2_kernels()) out.emplace_back("avx2");
  if (neon_kernels()) out.emplace_back("neon");
  return out;
}

}  // namespace actnet::kernels
