#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "trislit/kernels.hpp"

namespace trislit::kernels {

const KernelSet& scalar_kernel_set();
#if defined(TRISLIT_HAVE_AVX2_BUILD)
const KernelSet& avx2_kernel_set();
#endif

namespace {

std::atomic<const KernelSet*> g_active{nullptr};

const KernelSet* detect() {
  Variant variant = variant_available(Variant::avx2) ? Variant::avx2
                                                     : Variant::scalar;
  if (const char* env = std::getenv("TRISLIT_KERNEL")) {
    const std::string requested(env);
    if (requested == "scalar") {
      variant = Variant::scalar;
    } else if (requested == "avx2" && variant_available(Variant::avx2)) {
      variant = Variant::avx2;
    }
  }
  return &kernel_set(variant);
}

}  // namespace

bool variant_available(Variant variant) {
  switch (variant) {
    case Variant::scalar:
      return true;
    case Variant::avx2:
#if defined(TRISLIT_HAVE_AVX2_BUILD)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

const KernelSet& kernel_set(Variant variant) {
  switch (variant) {
    case Variant::scalar:
      return scalar_kernel_set();
    case Variant::avx2:
#if defined(TRISLIT_HAVE_AVX2_BUILD)
      if (variant_available(Variant::avx2)) {
        return avx2_kernel_set();
      }
#endif
      throw std::invalid_argument("kernels: avx2 variant not available");
  }
  throw std::invalid_argument("kernels: unknown variant");
}

const KernelSet& active() {
  const KernelSet* set = g_active.load(std::memory_order_acquire);
  if (set == nullptr) {
    set = detect();
    g_active.store(set, std::memory_order_release);
  }
  return *set;
}

void set_active(Variant variant) {
  g_active.store(&kernel_set(variant), std::memory_order_release);
}

}  // namespace trislit::kernels
