// Compiled with -mavx2; only reached through avx2_kernels() after a CPU check.

#include <immintrin.h>

#include <algorithm>
#include <limits>

#include "kernels_internal.hpp"

namespace tlpp::kernels::detail {

namespace {

// 32x32 -> 64 multiply of every lane; returns (hi, lo) halves per lane.
inline void mulhilo8(__m256i x, __m256i m, __m256i& hi, __m256i& lo) {
  const __m256i even = _mm256_mul_epu32(x, m);
  const __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), m);
  lo = _mm256_blend_epi32(even, _mm256_slli_epi64(odd, 32), 0xAA);
  hi = _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

void philox_fill(PhiloxKey key, std::uint32_t domain, std::uint64_t stream,
                 std::uint32_t first_block, std::span<std::uint32_t> out) {
  const std::size_t blocks = out.size() / 4;
  std::uint32_t round_k0[kPhiloxRounds];
  std::uint32_t round_k1[kPhiloxRounds];
  round_k0[0] = key[0];
  round_k1[0] = key[1];
  for (int r = 1; r < kPhiloxRounds; ++r) {
    round_k0[r] = round_k0[r - 1] + kPhiloxW0;
    round_k1[r] = round_k1[r - 1] + kPhiloxW1;
  }
  const __m256i m0 = _mm256_set1_epi32(static_cast<int>(kPhiloxM0));
  const __m256i m1 = _mm256_set1_epi32(static_cast<int>(kPhiloxM1));
  const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i c1 = _mm256_set1_epi32(static_cast<int>(domain));
  const __m256i c2 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(stream)));
  const __m256i c3 = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(stream >> 32)));

  std::size_t b = 0;
  for (; b + 8 <= blocks; b += 8) {
    __m256i x0 = _mm256_add_epi32(
        _mm256_set1_epi32(static_cast<int>(first_block + static_cast<std::uint32_t>(b))), lane);
    __m256i x1 = c1, x2 = c2, x3 = c3;
    for (int r = 0; r < kPhiloxRounds; ++r) {
      __m256i hi0, lo0, hi1, lo1;
      mulhilo8(x0, m0, hi0, lo0);
      mulhilo8(x2, m1, hi1, lo1);
      const __m256i k0 = _mm256_set1_epi32(static_cast<int>(round_k0[r]));
      const __m256i k1 = _mm256_set1_epi32(static_cast<int>(round_k1[r]));
      x0 = _mm256_xor_si256(_mm256_xor_si256(hi1, x1), k0);
      x1 = lo1;
      x2 = _mm256_xor_si256(_mm256_xor_si256(hi0, x3), k1);
      x3 = lo0;
    }
    // Transpose 4 words x 8 blocks into block-major order.
    const __m256i t0 = _mm256_unpacklo_epi32(x0, x1);
    const __m256i t1 = _mm256_unpackhi_epi32(x0, x1);
    const __m256i t2 = _mm256_unpacklo_epi32(x2, x3);
    const __m256i t3 = _mm256_unpackhi_epi32(x2, x3);
    const __m256i u0 = _mm256_unpacklo_epi64(t0, t2);
    const __m256i u1 = _mm256_unpackhi_epi64(t0, t2);
    const __m256i u2 = _mm256_unpacklo_epi64(t1, t3);
    const __m256i u3 = _mm256_unpackhi_epi64(t1, t3);
    auto* dst = reinterpret_cast<__m256i*>(out.data() + 4 * b);
    _mm256_storeu_si256(dst + 0, _mm256_permute2x128_si256(u0, u1, 0x20));
    _mm256_storeu_si256(dst + 1, _mm256_permute2x128_si256(u2, u3, 0x20));
    _mm256_storeu_si256(dst + 2, _mm256_permute2x128_si256(u0, u1, 0x31));
    _mm256_storeu_si256(dst + 3, _mm256_permute2x128_si256(u2, u3, 0x31));
  }
  std::uint32_t ctr[4] = {0, domain, static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32)};
  for (; b < blocks; ++b) {
    ctr[0] = first_block + static_cast<std::uint32_t>(b);
    philox_block_scalar(key, ctr, out.data() + 4 * b);
  }
}

// Unsigned a < b on 32-bit lanes.
inline __m256i cmplt_epu32(__m256i a, __m256i b) {
  const __m256i bias = _mm256_set1_epi32(static_cast<int>(0x80000000u));
  return _mm256_cmpgt_epi32(_mm256_xor_si256(b, bias), _mm256_xor_si256(a, bias));
}

// Per-lane outcome in {0, 1, 2} as 32-bit lanes.
inline __m256i bernoulli8(__m256i u, __m256i den, __m256i num, __m256i reject_below,
                          __m256i one, __m256i two) {
  __m256i hi, lo;
  mulhilo8(u, den, hi, lo);
  const __m256i reject = cmplt_epu32(lo, reject_below);
  const __m256i success = _mm256_and_si256(cmplt_epu32(hi, num), one);
  return _mm256_blendv_epi8(success, two, reject);
}

std::size_t bernoulli_from_uniforms(std::span<const std::uint32_t> uniforms, BernoulliParams params,
                                    std::span<std::uint8_t> out) {
  const __m256i den = _mm256_set1_epi32(static_cast<int>(params.denominator));
  const __m256i num = _mm256_set1_epi32(static_cast<int>(params.numerator));
  const __m256i rej = _mm256_set1_epi32(static_cast<int>(params.reject_below));
  const __m256i one = _mm256_set1_epi32(1);
  const __m256i two = _mm256_set1_epi32(2);
  const __m256i fix_order = _mm256_setr_epi32(0, 4, 1, 5, 2, 6, 3, 7);
  std::size_t rejected = 0;
  std::size_t i = 0;
  const std::size_t n = uniforms.size();
  for (; i + 32 <= n; i += 32) {
    const auto* src = reinterpret_cast<const __m256i*>(uniforms.data() + i);
    const __m256i r0 = bernoulli8(_mm256_loadu_si256(src + 0), den, num, rej, one, two);
    const __m256i r1 = bernoulli8(_mm256_loadu_si256(src + 1), den, num, rej, one, two);
    const __m256i r2 = bernoulli8(_mm256_loadu_si256(src + 2), den, num, rej, one, two);
    const __m256i r3 = bernoulli8(_mm256_loadu_si256(src + 3), den, num, rej, one, two);
    const __m256i p01 = _mm256_packs_epi32(r0, r1);
    const __m256i p23 = _mm256_packs_epi32(r2, r3);
    const __m256i bytes = _mm256_permutevar8x32_epi32(_mm256_packs_epi16(p01, p23), fix_order);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), bytes);
    const auto mask = static_cast<std::uint32_t>(
        _mm256_movemask_epi8(_mm256_cmpeq_epi8(bytes, _mm256_set1_epi8(2))));
    rejected += static_cast<std::size_t>(__builtin_popcount(mask));
  }
  for (; i < n; ++i) {
    const std::uint64_t m = std::uint64_t{uniforms[i]} * params.denominator;
    const auto lo = static_cast<std::uint32_t>(m);
    const auto hi = static_cast<std::uint32_t>(m >> 32);
    if (lo < params.reject_below) {
      out[i] = kRejected;
      ++rejected;
    } else {
      out[i] = hi < params.numerator ? 1 : 0;
    }
  }
  return rejected;
}

inline std::int32_t hmax(__m256i v) {
  __m128i m = _mm_max_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(1, 0, 3, 2)));
  m = _mm_max_epi32(m, _mm_shuffle_epi32(m, _MM_SHUFFLE(2, 3, 0, 1)));
  return _mm_cvtsi128_si32(m);
}

std::int32_t column_max(std::span<const std::int32_t> best, std::span<const std::uint8_t> w) {
  const std::size_t n = best.size();
  std::size_t i = 0;
  std::int32_t m = std::numeric_limits<std::int32_t>::min();
  if (n >= 8) {
    __m256i acc = _mm256_set1_epi32(std::numeric_limits<std::int32_t>::min());
    for (; i + 8 <= n; i += 8) {
      const __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(best.data() + i));
      const __m256i x = _mm256_cvtepu8_epi32(
          _mm_loadl_epi64(reinterpret_cast<const __m128i*>(w.data() + i)));
      acc = _mm256_max_epi32(acc, _mm256_add_epi32(b, x));
    }
    m = hmax(acc);
  }
  for (; i < n; ++i) m = std::max(m, best[i] + w[i]);
  return m;
}

void relax_row(std::int32_t base, std::span<const std::uint8_t> row, std::span<std::int32_t> best) {
  const std::size_t n = row.size();
  const __m256i vbase = _mm256_set1_epi32(base);
  std::size_t k = 0;
  for (; k + 8 <= n; k += 8) {
    auto* dst = reinterpret_cast<__m256i*>(best.data() + k);
    const __m256i x = _mm256_cvtepu8_epi32(
        _mm_loadl_epi64(reinterpret_cast<const __m128i*>(row.data() + k)));
    _mm256_storeu_si256(dst, _mm256_max_epi32(_mm256_loadu_si256(dst), _mm256_add_epi32(vbase, x)));
  }
  for (; k < n; ++k) best[k] = std::max(best[k], base + row[k]);
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  __m256d s0 = _mm256_setzero_pd(), s1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    s0 = _mm256_add_pd(s0, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
    s1 = _mm256_add_pd(s1, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i + 4),
                                         _mm256_loadu_pd(b.data() + i + 4)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(s0, s1));
  double s = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

constexpr KernelTable kAvx2{
    "avx2", philox_fill, bernoulli_from_uniforms, column_max, relax_row, dot,
};

}  // namespace

const KernelTable& avx2_table() { return kAvx2; }

}  // namespace tlpp::kernels::detail
