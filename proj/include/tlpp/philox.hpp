#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>

#include "tlpp/kernels.hpp"

namespace tlpp {

/// Counter-based Philox4x32-10 stream.
///
/// The 64-bit seed is the key; the 128-bit counter is
/// {block, domain, stream_lo, stream_hi}. Distinct (domain, stream) pairs are
/// disjoint counter ranges of the same keyed bijection, so substreams never
/// overlap and no jump-ahead is needed. A stream covers 2^32 blocks.
class PhiloxStream {
 public:
  using result_type = std::uint32_t;

  PhiloxStream(std::uint64_t seed, std::uint32_t domain, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return next(); }
  std::uint32_t next();

  /// Same words, in the same order, as out.size() calls to next().
  void fill(std::span<std::uint32_t> out);

  std::uint64_t words_consumed() const { return words_consumed_; }

 private:
  void refill();

  kernels::PhiloxKey key_;
  std::uint32_t domain_;
  std::uint64_t stream_;
  std::uint64_t next_block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  unsigned buffered_ = 0;  // unread words at the end of buffer_
  std::uint64_t words_consumed_ = 0;
};

/// Philox4x32-10 of one counter block under the given key (reference path).
std::array<std::uint32_t, 4> philox4x32_10(kernels::PhiloxKey key,
                                           std::array<std::uint32_t, 4> counter);

}  // namespace tlpp
