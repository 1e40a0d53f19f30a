#include <cstdlib>
#include <string_view>

#include "liftscope/simd.hpp"

namespace liftscope::simd {

const SieveKernels& best_kernels() {
  static const SieveKernels& chosen = [] () -> const SieveKernels& {
    const char* env = std::getenv("LIFTSCOPE_SIMD");
    if (env && std::string_view(env) == "scalar") return scalar_kernels();
    if (const SieveKernels* k = avx2_kernels()) return *k;
    if (const SieveKernels* k = neon_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace liftscope::simd
