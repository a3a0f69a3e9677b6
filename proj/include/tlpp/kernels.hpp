#pragma once

// Data-parallel inner loops used by the sampler, the path DP and the float
// moment recurrence. Each kernel has a scalar reference implementation and
// (on x86-64) an AVX2 variant; the variant is picked once at runtime from
// CPU support and the TLPP_KERNELS environment variable ("scalar" forces the
// reference path). All integer kernels are bit-identical across variants;
// dot() may differ in the last bits because it reassociates the sum.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>

namespace tlpp::kernels {

using PhiloxKey = std::array<std::uint32_t, 2>;

/// Lane value written by bernoulli_from_uniforms for a rejected draw.
inline constexpr std::uint8_t kRejected = 2;

/// Exact Bernoulli(numerator/denominator) from a uniform 32-bit word u:
/// m = u * denominator, rejected when low32(m) < reject_below, otherwise the
/// outcome is high32(m) < numerator. reject_below = 2^32 mod denominator
/// makes high32(m) exactly uniform on [0, denominator).
struct BernoulliParams {
  std::uint32_t numerator = 0;
  std::uint32_t denominator = 1;
  std::uint32_t reject_below = 0;

  static BernoulliParams make(std::uint32_t numerator, std::uint32_t denominator);
};

struct KernelTable {
  const char* name;

  /// Philox4x32-10 blocks with counter {first_block + i, domain, stream_lo,
  /// stream_hi}; writes 4 words per block to out (out.size() == 4 * blocks).
  void (*philox_fill)(PhiloxKey key, std::uint32_t domain, std::uint64_t stream,
                      std::uint32_t first_block, std::span<std::uint32_t> out);

  /// out[i] in {0, 1, kRejected}; returns the number of rejected lanes.
  std::size_t (*bernoulli_from_uniforms)(std::span<const std::uint32_t> uniforms,
                                         BernoulliParams params, std::span<std::uint8_t> out);

  /// max_i (best[i] + w[i]) over a non-empty column.
  std::int32_t (*column_max)(std::span<const std::int32_t> best, std::span<const std::uint8_t> w);

  /// best[k] = max(best[k], base + row[k]).
  void (*relax_row)(std::int32_t base, std::span<const std::uint8_t> row,
                    std::span<std::int32_t> best);

  double (*dot)(std::span<const double> a, std::span<const double> b);
};

const KernelTable& scalar_kernels();
/// nullptr when not compiled in or not supported by this CPU.
const KernelTable* avx2_kernels();
/// Selected variant (cached after the first call).
const KernelTable& active_kernels();

}  // namespace tlpp::kernels
