#include <cstdlib>
#include <cstring>

#include "casimir/kernels/kernels.hpp"

namespace casimir::kernels {

namespace {

bool cpu_has_avx2_fma() {
#if defined(CASIMIR_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable kScalar{"scalar", &detail::gemm_scalar, &detail::dot_scalar, &detail::axpy_scalar};

#if defined(CASIMIR_HAVE_AVX2)
const KernelTable kAvx2{"avx2", &detail::gemm_avx2, &detail::dot_avx2, &detail::axpy_avx2};
#endif

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

const KernelTable* avx2_kernels() {
#if defined(CASIMIR_HAVE_AVX2)
  static const bool ok = cpu_has_avx2_fma();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable& table = [] () -> const KernelTable& {
    const char* force = std::getenv("CASIMIR_KERNELS");
    if (force != nullptr && std::strcmp(force, "scalar") == 0) return kScalar;
    if (const KernelTable* v = avx2_kernels()) return *v;
    return kScalar;
  }();
  return table;
}

}  // namespace casimir::kernels
