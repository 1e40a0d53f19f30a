#include "liftscope/simd.hpp"

namespace liftscope::simd {

namespace {

void and_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

std::size_t collect_nonzero(const std::uint8_t* mask, std::size_t n, std::uint32_t* out) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mask[i]) out[k++] = std::uint32_t(i);
  }
  return k;
}

bool any_nonzero(const std::uint8_t* mask, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (mask[i]) return true;
  }
  return false;
}

}  // namespace

const SieveKernels& scalar_kernels() {
  static const SieveKernels k{"scalar", and_bytes, collect_nonzero, any_nonzero};
  return k;
}

}  // namespace liftscope::simd
