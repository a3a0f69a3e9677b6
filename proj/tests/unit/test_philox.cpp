#include <doctest.h>

#include <array>
#include <vector>

#include "tlpp/philox.hpp"

using Block = std::array<std::uint32_t, 4>;

TEST_CASE("Philox4x32-10 known answers") {
  CHECK(tlpp::philox4x32_10({0, 0}, {0, 0, 0, 0}) == Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(tlpp::philox4x32_10({0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}) ==
        Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(tlpp::philox4x32_10({0xa4093822, 0x299f31d0}, {0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}) ==
        Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("stream counter layout") {
  const std::uint64_t seed = 0x0123456789abcdefULL;
  const std::uint64_t stream = 0xfedcba9876543210ULL;
  tlpp::PhiloxStream s(seed, 7, stream);
  for (std::uint32_t block = 0; block < 3; ++block) {
    const Block want = tlpp::philox4x32_10(
        {0x89abcdefU, 0x01234567U}, {block, 7, 0x76543210U, 0xfedcba98U});
    for (auto w : want) CHECK(s.next() == w);
  }
  CHECK(s.words_consumed() == 12);
}

TEST_CASE("fill matches repeated next across block boundaries") {
  for (std::size_t skip : {0, 1, 3, 4, 5}) {
    for (std::size_t len : {0, 1, 3, 4, 7, 31, 32, 33, 100}) {
      tlpp::PhiloxStream a(42, 0, 9);
      tlpp::PhiloxStream b(42, 0, 9);
      for (std::size_t i = 0; i < skip; ++i) {
        a.next();
        b.next();
      }
      std::vector<std::uint32_t> bulk(len);
      a.fill(bulk);
      for (std::size_t i = 0; i < len; ++i) CHECK(bulk[i] == b.next());
      CHECK(a.next() == b.next());
      CHECK(a.words_consumed() == b.words_consumed());
    }
  }
}

TEST_CASE("substreams differ") {
  tlpp::PhiloxStream base(1, 0, 0);
  tlpp::PhiloxStream other_stream(1, 0, 1);
  tlpp::PhiloxStream other_domain(1, 1, 0);
  tlpp::PhiloxStream other_seed(2, 0, 0);
  const auto x = base.next();
  CHECK(x != other_stream.next());
  CHECK(x != other_domain.next());
  CHECK(x != other_seed.next());
}

TEST_CASE("usable as a standard bit generator") {
  tlpp::PhiloxStream s(3, 0, 0);
  static_assert(std::uniform_random_bit_generator<tlpp::PhiloxStream>);
  CHECK(tlpp::PhiloxStream::max() == 0xffffffffU);
  const auto a = s();
  tlpp::PhiloxStream t(3, 0, 0);
  CHECK(a == t.next());
}
