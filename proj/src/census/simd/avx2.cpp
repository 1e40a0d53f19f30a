#include "liftscope/simd.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define LIFTSCOPE_HAVE_AVX2_TU 1
#endif

namespace liftscope::simd {

#ifdef LIFTSCOPE_HAVE_AVX2_TU

namespace {

__attribute__((target("avx2"))) void and_bytes(std::uint8_t* dst, const std::uint8_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 128 <= n; i += 128) {
    __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 32));
    __m256i a2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 64));
    __m256i a3 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 96));
    __m256i b0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i b1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 32));
    __m256i b2 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 64));
    __m256i b3 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 96));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(a0, b0));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 32), _mm256_and_si256(a1, b1));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 64), _mm256_and_si256(a2, b2));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 96), _mm256_and_si256(a3, b3));
  }
  for (; i + 32 <= n; i += 32) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(a, b));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

__attribute__((target("avx2"))) std::size_t collect_nonzero(const std::uint8_t* mask, std::size_t n,
                                                            std::uint32_t* out) {
  std::size_t k = 0, i = 0;
  const __m256i zero = _mm256_setzero_si256();
  for (; i + 32 <= n; i += 32) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i));
    unsigned bits = ~unsigned(_mm256_movemask_epi8(_mm256_cmpeq_epi8(v, zero)));
    while (bits) {
      out[k++] = std::uint32_t(i + unsigned(__builtin_ctz(bits)));
      bits &= bits - 1;
    }
  }
  for (; i < n; ++i) {
    if (mask[i]) out[k++] = std::uint32_t(i);
  }
  return k;
}

__attribute__((target("avx2"))) bool any_nonzero(const std::uint8_t* mask, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 32 <= n; i += 32) acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i)));
  if (!_mm256_testz_si256(acc, acc)) return true;
  for (; i < n; ++i) {
    if (mask[i]) return true;
  }
  return false;
}

}  // namespace

const SieveKernels* avx2_kernels() {
  static const bool ok = __builtin_cpu_supports("avx2");
  static const SieveKernels k{"avx2", and_bytes, collect_nonzero, any_nonzero};
  return ok ? &k : nullptr;
}

#else

const SieveKernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace liftscope::simd
