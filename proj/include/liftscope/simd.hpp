#pragma once

// Byte-mask kernels for the census sieve. Every variant computes the same
// result; the fastest one the CPU supports is picked at first use.

#include <cstddef>
#include <cstdint>

namespace liftscope::simd {

struct SieveKernels {
  const char* name;
  /// dst[i] &= src[i]
  void (*and_bytes)(std::uint8_t* dst, const std::uint8_t* src, std::size_t n);
  /// Writes the indices of nonzero bytes, ascending; returns how many.
  std::size_t (*collect_nonzero)(const std::uint8_t* mask, std::size_t n, std::uint32_t* out);
  /// True when any byte is nonzero.
  bool (*any_nonzero)(const std::uint8_t* mask, std::size_t n);
};

const SieveKernels& scalar_kernels();
/// Null when not compiled in or not supported by this CPU.
const SieveKernels* avx2_kernels();
const SieveKernels* neon_kernels();

/// Best supported variant. LIFTSCOPE_SIMD=scalar forces the reference code.
const SieveKernels& best_kernels();

}  // namespace liftscope::simd
