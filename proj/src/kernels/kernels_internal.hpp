#pragma once

#include "tlpp/kernels.hpp"

namespace tlpp::kernels::detail {

inline constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
inline constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
inline constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
inline constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;
inline constexpr int kPhiloxRounds = 10;

void philox_block_scalar(PhiloxKey key, const std::uint32_t in[4], std::uint32_t out[4]);

#if defined(TLPP_HAS_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace tlpp::kernels::detail
