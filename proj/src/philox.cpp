#include "tlpp/philox.hpp"

#include "kernels/kernels_internal.hpp"
#include "tlpp/error.hpp"

namespace tlpp {

namespace {
constexpr std::uint64_t kMaxBlocks = std::uint64_t{1} << 32;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint32_t domain, std::uint64_t stream)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      domain_(domain),
      stream_(stream) {}

void PhiloxStream::refill() {
  if (next_block_ >= kMaxBlocks) throw DomainError("Philox substream exhausted");
  kernels::scalar_kernels().philox_fill(key_, domain_, stream_,
                                        static_cast<std::uint32_t>(next_block_), buffer_);
  ++next_block_;
  buffered_ = 4;
}

std::uint32_t PhiloxStream::next() {
  if (buffered_ == 0) refill();
  ++words_consumed_;
  return buffer_[4 - buffered_--];
}

void PhiloxStream::fill(std::span<std::uint32_t> out) {
  std::size_t i = 0;
  while (buffered_ > 0 && i < out.size()) out[i++] = next();
  const std::size_t whole = (out.size() - i) / 4;
  if (whole > 0) {
    if (next_block_ + whole > kMaxBlocks) throw DomainError("Philox substream exhausted");
    kernels::active_kernels().philox_fill(key_, domain_, stream_,
                                          static_cast<std::uint32_t>(next_block_),
                                          out.subspan(i, whole * 4));
    next_block_ += whole;
    words_consumed_ += whole * 4;
    i += whole * 4;
  }
  while (i < out.size()) out[i++] = next();
}

std::array<std::uint32_t, 4> philox4x32_10(kernels::PhiloxKey key,
                                           std::array<std::uint32_t, 4> counter) {
  std::array<std::uint32_t, 4> out{};
  kernels::detail::philox_block_scalar(key, counter.data(), out.data());
  return out;
}

}  // namespace tlpp
