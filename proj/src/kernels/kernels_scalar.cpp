#include <algorithm>
#include <limits>

#include "kernels_internal.hpp"

namespace tlpp::kernels {

BernoulliParams BernoulliParams::make(std::uint32_t numerator, std::uint32_t denominator) {
  BernoulliParams p;
  p.numerator = numerator;
  p.denominator = denominator;
  p.reject_below = static_cast<std::uint32_t>((std::uint64_t{1} << 32) % denominator);
  return p;
}

namespace detail {

void philox_block_scalar(PhiloxKey key, const std::uint32_t in[4], std::uint32_t out[4]) {
  std::uint32_t x0 = in[0], x1 = in[1], x2 = in[2], x3 = in[3];
  std::uint32_t k0 = key[0], k1 = key[1];
  for (int r = 0; r < kPhiloxRounds; ++r) {
    if (r > 0) {
      k0 += kPhiloxW0;
      k1 += kPhiloxW1;
    }
    const std::uint64_t p0 = std::uint64_t{kPhiloxM0} * x0;
    const std::uint64_t p1 = std::uint64_t{kPhiloxM1} * x2;
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32), lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32), lo1 = static_cast<std::uint32_t>(p1);
    x0 = hi1 ^ x1 ^ k0;
    x1 = lo1;
    x2 = hi0 ^ x3 ^ k1;
    x3 = lo0;
  }
  out[0] = x0;
  out[1] = x1;
  out[2] = x2;
  out[3] = x3;
}

}  // namespace detail

namespace {

void philox_fill(PhiloxKey key, std::uint32_t domain, std::uint64_t stream,
                 std::uint32_t first_block, std::span<std::uint32_t> out) {
  const std::size_t blocks = out.size() / 4;
  std::uint32_t ctr[4] = {first_block, domain, static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32)};
  for (std::size_t b = 0; b < blocks; ++b) {
    ctr[0] = first_block + static_cast<std::uint32_t>(b);
    detail::philox_block_scalar(key, ctr, out.data() + 4 * b);
  }
}

std::size_t bernoulli_from_uniforms(std::span<const std::uint32_t> uniforms, BernoulliParams params,
                                    std::span<std::uint8_t> out) {
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < uniforms.size(); ++i) {
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

std::int32_t column_max(std::span<const std::int32_t> best, std::span<const std::uint8_t> w) {
  std::int32_t m = std::numeric_limits<std::int32_t>::min();
  for (std::size_t i = 0; i < best.size(); ++i) m = std::max(m, best[i] + w[i]);
  return m;
}

void relax_row(std::int32_t base, std::span<const std::uint8_t> row, std::span<std::int32_t> best) {
  for (std::size_t k = 0; k < row.size(); ++k) best[k] = std::max(best[k], base + row[k]);
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

constexpr KernelTable kScalar{
    "scalar", philox_fill, bernoulli_from_uniforms, column_max, relax_row, dot,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace tlpp::kernels
