#include "liftscope/simd.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace liftscope::simd {

#if defined(__aarch64__)

namespace {

void and_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) vst1q_u8(dst + i, vandq_u8(vld1q_u8(dst + i), vld1q_u8(src + i)));
  for (; i < n; ++i) dst[i] &= src[i];
}

std::size_t collect_nonzero(const std::uint8_t* mask, std::size_t n, std::uint32_t* out) {
  std::size_t k = 0, i = 0;
  for (; i + 16 <= n; i += 16) {
    if (vmaxvq_u8(vld1q_u8(mask + i)) == 0) continue;
    for (std::size_t j = i; j < i + 16; ++j) {
      if (mask[j]) out[k++] = std::uint32_t(j);
    }
  }
  for (; i < n; ++i) {
    if (mask[i]) out[k++] = std::uint32_t(i);
  }
  return k;
}

bool any_nonzero(const std::uint8_t* mask, std::size_t n) {
  std::size_t i = 0;
  uint8x16_t acc = vdupq_n_u8(0);
  for (; i + 16 <= n; i += 16) acc = vorrq_u8(acc, vld1q_u8(mask + i));
  if (vmaxvq_u8(acc) != 0) return true;
  for (; i < n; ++i) {
    if (mask[i]) return true;
  }
  return false;
}

}  // namespace

const SieveKernels* neon_kernels() {
  static const SieveKernels k{"neon", and_bytes, collect_nonzero, any_nonzero};
  return &k;
}

#else

const SieveKernels* neon_kernels() { return nullptr; }

#endif

}  // namespace liftscope::simd
