// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <stdexcept>
#include <thread>

#include "sha3/hex.hpp"
#include "sha3/sha3.hpp"
#include "test_util.hpp"

using namespace sha3;
using testutil::Rng;

namespace {

// FIPS 202 example digests for the empty and the 1600-bit (0xa3 * 200)
// messages.
constexpr const char* kEmpty[] = {
    "6b4e03423667dbb73b6e15454f0eb1abd4597f9a1b078e3f5b5a6bc7",
    "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a",
    "0c63a75b845e4f7d01107d852e4c2485c51a50aaaa94fc61995e71bbee983a2a"
    "c3713831264adb47fb6bd1e058d5f004",
    "a69f73cca23a9ac5c8b567dc185a756e97c982164fe25859e0d1dcc1475c80a6"
    "15b2123af1f5f94c11e3e9402c3ac558f500199d95b6d3e301758586281dcd26",
};

constexpr const char* kMsg1600[] = {
    "9376816aba503f72f96ce7eb65ac095deee3be4bf9bbc2a1cb7e11e0",
    "79f38adec5c20307a98ef76e8324afbfd46cfd81b22e3973c65fa1bd9de31787",
    "1881de2ca7e41ef95dc4732b8f5f002b189cc1e42b74168ed1732649ce1dbcdd"
    "76197a31fd55ee989f2d7050dd473e8f",
    "e76dfad22084a8b1467fcf2ffa58361bec7628edf5f3fdc0e4805dc48caeeca8"
    "1b7c13c30adf52a3659584739a2df46be589c51ca1a4a8416df6545a1ce8ba00",
};

constexpr Algorithm kHashes[] = {Algorithm::sha3_224, Algorithm::sha3_256,
                                 Algorithm::sha3_384, Algorithm::sha3_512};

}  // namespace

TEST_CASE("variant table matches the FIPS parameterization") {
  struct Row {
    Algorithm id;
    unsigned capacity;
    std::uint8_t suffix;
    unsigned suffix_bits;
    unsigned digest_bits;
  };
  const Row rows[] = {
      {Algorithm::sha3_224, 448, 0x02, 2, 224}, {Algorithm::sha3_256, 512, 0x02, 2, 256},
      {Algorithm::sha3_384, 768, 0x02, 2, 384}, {Algorithm::sha3_512, 1024, 0x02, 2, 512},
      {Algorithm::shake128, 256, 0x0f, 4, 0},   {Algorithm::shake256, 512, 0x0f, 4, 0},
  };
  for (const Row& r : rows) {
    const FunctionVariant& v = variant_info(r.id);
    CHECK(v.capacity == r.capacity);
    CHECK(v.suffix == r.suffix);
    CHECK(v.suffix_bits == r.suffix_bits);
    CHECK(v.digest_bits == r.digest_bits);
    CHECK(v.rate() == 1600 - r.capacity);
    // hash variants: capacity is double the digest length
    if (!v.is_xof()) {
      CHECK(v.capacity == 2 * v.digest_bits);
    }
  }
  CHECK(all_variants().size() == 6);
}

TEST_CASE("algorithm names parse") {
  CHECK(parse_algorithm("sha3-256") == Algorithm::sha3_256);
  CHECK(parse_algorithm("SHA3-512") == Algorithm::sha3_512);
  CHECK(parse_algorithm("shake128") == Algorithm::shake128);
  CHECK(parse_algorithm("shake-256") == Algorithm::shake256);
  CHECK(parse_algorithm("md5") == std::nullopt);
  for (const FunctionVariant& v : all_variants()) {
    CHECK(parse_algorithm(v.name) == v.id);
  }
}

TEST_CASE("keccak_c") {
  SUBCASE("definitional equality with SHA3-256") {
    const BitString out = keccak_c(512, BitString::from_bits("01"), 256);
    CHECK(out.bytes() == sha3_digest(Algorithm::sha3_256, {}));
  }

  SUBCASE("prefix property") {
    Rng rng(41);
    const BitString msg = testutil::random_bits(rng, 333);
    const BitString long_out = keccak_c(256, msg, 2000);
    CHECK(keccak_c(256, msg, 700) == long_out.prefix(700));
  }

  SUBCASE("capacity bounds") {
    CHECK_THROWS_AS(keccak_c(0, BitString(), 128), std::invalid_argument);
    CHECK_THROWS_AS(keccak_c(1600, BitString(), 128), std::invalid_argument);
    CHECK_THROWS_AS(keccak_c(1601, BitString(), 128), std::invalid_argument);
  }

  SUBCASE("a 1150-bit input to Keccak[448] pads into a single block") {
    CHECK(pad10star1(1152, 1150).size() == 2);
    const BitString msg = BitString::zeros(1150);
    CHECK(keccak_c(448, msg, 224).size() == 224);
  }
}

TEST_CASE("sha3 digests reproduce the published vectors") {
  for (int i = 0; i < 4; ++i) {
    CHECK(to_hex(sha3_digest(kHashes[i], {})) == kEmpty[i]);
    const std::vector<std::uint8_t> m(200, 0xa3);
    CHECK(to_hex(sha3_digest(kHashes[i], m)) == kMsg1600[i]);
  }
}

TEST_CASE("digest lengths follow the variant") {
  CHECK(sha3_digest(Algorithm::sha3_224, {}).size() == 28);
  CHECK(sha3_digest(Algorithm::sha3_256, {}).size() == 32);
  CHECK(sha3_digest(Algorithm::sha3_384, {}).size() == 48);
  CHECK(sha3_digest(Algorithm::sha3_512, {}).size() == 64);
  CHECK_THROWS_AS(sha3_digest(Algorithm::shake128, {}), std::invalid_argument);
}

TEST_CASE("digests are deterministic and variant-separated") {
  Rng rng(42);
  for (int i = 0; i < 10; ++i) {
    const auto msg = testutil::random_bytes(rng, rng.below(300));
    std::vector<std::string> seen;
    for (Algorithm a : kHashes) {
      const auto d1 = sha3_digest(a, msg);
      const auto d2 = sha3_digest(a, msg);
      CHECK(d1 == d2);
      seen.push_back(to_hex(d1));
    }
    for (std::size_t j = 0; j < seen.size(); ++j) {
      for (std::size_t k = j + 1; k < seen.size(); ++k) {
        CHECK(seen[j].substr(0, 56) != seen[k].substr(0, 56));
      }
    }
  }
}

TEST_CASE("shake") {
  SUBCASE("empty-message vectors") {
    CHECK(to_hex(shake(Algorithm::shake128, {}, 256)) ==
          "7f9c2ba4e88f827d616045507605853ed73b8093f6efbc88eb1a6eacfa66ef26");
    CHECK(to_hex(shake(Algorithm::shake256, {}, 512)) ==
          "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f"
          "d75dc4ddd8c0f200cb05019d67b592f6fc821c49479ab48640292eacb3b7c4be");
  }

  SUBCASE("shorter outputs are byte prefixes of longer ones") {
    Rng rng(43);
    const auto msg = testutil::random_bytes(rng, 100);
    for (Algorithm a : {Algorithm::shake128, Algorithm::shake256}) {
      const auto small = shake(a, msg, 128);
      const auto big = shake(a, msg, 4096);
      CHECK(std::equal(small.begin(), small.end(), big.begin()));
    }
  }

  SUBCASE("non-byte output lengths keep the low-order bits") {
    Rng rng(44);
    const auto msg = testutil::random_bytes(rng, 17);
    const auto full = shake(Algorithm::shake256, msg, 16);
    const auto partial = shake(Algorithm::shake256, msg, 12);
    REQUIRE(partial.size() == 2);
    CHECK(partial[0] == full[0]);
    CHECK(partial[1] == (full[1] & 0x0f));
  }

  SUBCASE("domain separation from the hash variants") {
    // SHAKE-256 and SHA3-256 share rate and capacity; only the suffix
    // differs, so equal-length outputs must disagree.
    const auto xof = shake(Algorithm::shake256, {}, 256);
    const auto hash = sha3_digest(Algorithm::sha3_256, {});
    CHECK(xof != hash);
  }

  SUBCASE("zero output length is rejected") {
    CHECK_THROWS_AS(shake(Algorithm::shake128, {}, 0), std::invalid_argument);
    CHECK_THROWS_AS(shake(Algorithm::sha3_256, {}, 128), std::invalid_argument);
  }
}

TEST_CASE("suffix application order") {
  // The digest of M must equal the raw sponge over exactly M || 01.
  Rng rng(45);
  for (int i = 0; i < 8; ++i) {
    const auto msg = testutil::random_bytes(rng, rng.below(300));
    for (Algorithm a : kHashes) {
      const FunctionVariant& v = variant_info(a);
      BitString n = BitString::from_bytes(msg);
      n.append(BitString::from_bits("01"));
      CHECK(keccak_c(v.capacity, n, v.digest_bits).bytes() == sha3_digest(a, msg));
    }
  }
  const auto msg = testutil::random_bytes(rng, 50);
  for (Algorithm a : {Algorithm::shake128, Algorithm::shake256}) {
    const FunctionVariant& v = variant_info(a);
    BitString n = BitString::from_bytes(msg);
    n.append(BitString::from_bits("1111"));
    CHECK(keccak_c(v.capacity, n, 512).bytes() == shake(a, msg, 512));
  }
}

TEST_CASE("incremental hasher front end") {
  SUBCASE("chunked hash updates match the one-shot digest") {
    Rng rng(46);
    const auto msg = testutil::random_bytes(rng, 700);
    Hasher h(Algorithm::sha3_384);
    h.update(std::span(msg).first(100));
    h.update(std::span(msg).subspan(100, 500));
    h.update(std::span(msg).subspan(600));
    CHECK(h.digest() == sha3_digest(Algorithm::sha3_384, msg));
  }

  SUBCASE("XOF streaming") {
    Rng rng(47);
    const auto msg = testutil::random_bytes(rng, 64);
    Hasher h(Algorithm::shake256);
    h.update(msg);
    h.finish();
    std::vector<std::uint8_t> a(100), b(100);
    h.read(a);
    h.read(b);
    const auto expect = shake(Algorithm::shake256, msg, 1600);
    CHECK(std::equal(a.begin(), a.end(), expect.begin()));
    CHECK(std::equal(b.begin(), b.end(), expect.begin() + 100));
  }

  SUBCASE("misuse across variant kinds throws") {
    Hasher hash(Algorithm::sha3_256);
    CHECK_THROWS_AS(hash.finish(), std::logic_error);
    Hasher xof(Algorithm::shake128);
    CHECK_THROWS_AS(xof.digest(), std::logic_error);
  }

  SUBCASE("movable between threads") {
    Hasher h(Algorithm::sha3_256);
    const std::vector<std::uint8_t> msg{'a', 'b', 'c'};
    h.update(msg);
    std::vector<std::uint8_t> out;
    std::jthread worker([moved = std::move(h), &out]() mutable { out = moved.digest(); });
    worker.join();
    CHECK(out == sha3_digest(Algorithm::sha3_256, msg));
  }
}
