// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <stdexcept>
#include <thread>

#include "sha3/batch.hpp"
#include "test_util.hpp"

using namespace sha3;
using testutil::Rng;

namespace {

HashBatch random_batch(Rng& rng, std::size_t count, std::size_t max_len = 300) {
  HashBatch batch;
  batch.messages.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    batch.messages.push_back(testutil::random_bytes(rng, rng.below(max_len + 1)));
  }
  return batch;
}

}  // namespace

TEST_CASE("partition plan") {
  SUBCASE("empty count gives an empty plan") {
    CHECK(plan_partition(0, {}).empty());
  }

  SUBCASE("count 10, chunk 3") {
    EngineConfig cfg;
    cfg.chunk_size = 3;
    const auto plan = plan_partition(10, cfg);
    REQUIRE(plan.size() == 4);
    CHECK(plan[0] == IndexRange{0, 3});
    CHECK(plan[1] == IndexRange{3, 6});
    CHECK(plan[2] == IndexRange{6, 9});
    CHECK(plan[3] == IndexRange{9, 10});
  }

  SUBCASE("auto chunk is ceil(count / (8 * workers))") {
    EngineConfig cfg;
    cfg.workers = 4;
    const auto plan = plan_partition(1000, cfg);
    // ceil(1000 / 32) = 32, so 32 chunks of up to 32 messages
    CHECK(plan.size() == (1000 + 31) / 32);
    CHECK(plan[0].end - plan[0].begin == 32);
  }

  SUBCASE("ranges are contiguous, disjoint and cover the batch") {
    Rng rng(51);
    for (int i = 0; i < 200; ++i) {
      const std::size_t count = rng.below(5000);
      EngineConfig cfg;
      cfg.workers = 1 + static_cast<unsigned>(rng.below(16));
      cfg.chunk_size = rng.below(64);  // 0 picks the auto size
      const auto plan = plan_partition(count, cfg);
      std::size_t expect_begin = 0;
      for (const IndexRange& r : plan) {
        REQUIRE(r.begin == expect_begin);
        REQUIRE(r.end > r.begin);
        if (cfg.chunk_size > 0) {
          REQUIRE(r.end - r.begin <= cfg.chunk_size);
        }
        expect_begin = r.end;
      }
      REQUIRE(expect_begin == count);
    }
  }
}

TEST_CASE("shared tables") {
  const SharedTables& a = shared_tables();
  const SharedTables& b = shared_tables();

  SUBCASE("repeated calls return the same immutable instance") {
    CHECK(&a == &b);
    CHECK(a.round_constants == b.round_constants);
  }

  SUBCASE("content equals fresh generation") {
    CHECK(a.round_constants == generate_round_constants(PermutationParams::standard(1600)));
    CHECK(a.rho_offsets == RhoOffsets::compute(64));
  }

  SUBCASE("concurrent access sees one consistent table") {
    std::array<const SharedTables*, 8> seen{};
    {
      std::vector<std::jthread> pool;
      for (int t = 0; t < 8; ++t) {
        pool.emplace_back([&seen, t] { seen[t] = &shared_tables(); });
      }
    }
    for (const SharedTables* p : seen) {
      CHECK(p == &a);
    }
  }
}

TEST_CASE("hash_batch") {
  SUBCASE("a hundred copies of one message give a hundred equal digests") {
    HashBatch batch;
    batch.messages.assign(100, std::vector<std::uint8_t>(10, 0x42));
    const BatchResult res = hash_batch(batch, {});
    REQUIRE(res.digests.size() == 100);
    const auto expect = sha3_digest(Algorithm::sha3_256, batch.messages[0]);
    for (const auto& d : res.digests) {
      CHECK(d == expect);
    }
  }

  SUBCASE("empty batch yields an empty result") {
    const BatchResult res = hash_batch(HashBatch{}, {});
    CHECK(res.digests.empty());
    CHECK(res.elapsed.count() < 0.5);
  }

  SUBCASE("parallel equals sequential on random batches") {
    Rng rng(52);
    for (std::size_t count : {0u, 1u, 7u, 100u, 2000u}) {
      const HashBatch batch = random_batch(rng, count);
      EngineConfig seq;
      seq.backend = Backend::sequential;
      const BatchResult expect = hash_batch(batch, seq);
      for (unsigned workers : {2u, 3u, 8u}) {
        EngineConfig par;
        par.backend = Backend::parallel;
        par.workers = workers;
        par.chunk_size = 1 + rng.below(17);
        const BatchResult got = hash_batch(batch, par);
        REQUIRE(got.digests == expect.digests);
      }
    }
  }

  SUBCASE("order is preserved: digest i belongs to message i") {
    Rng rng(53);
    const HashBatch batch = random_batch(rng, 500, 40);
    EngineConfig cfg;
    cfg.workers = 4;
    cfg.chunk_size = 7;
    const BatchResult res = hash_batch(batch, cfg);
    REQUIRE(res.digests.size() == batch.messages.size());
    for (std::size_t i = 0; i < batch.messages.size(); ++i) {
      REQUIRE(res.digests[i] == sha3_digest(batch.algorithm, batch.messages[i]));
    }
  }

  SUBCASE("XOF batches carry the requested output length") {
    HashBatch batch;
    batch.algorithm = Algorithm::shake128;
    batch.xof_output_bits = 328;
    batch.messages = {{1, 2, 3}, {}, {9, 9, 9, 9}};
    const BatchResult res = hash_batch(batch, {});
    REQUIRE(res.digests.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(res.digests[i] == shake(Algorithm::shake128, batch.messages[i], 328));
    }
  }

  SUBCASE("XOF without an output length is rejected up front") {
    HashBatch batch;
    batch.algorithm = Algorithm::shake256;
    batch.messages = {{1}};
    CHECK_THROWS_AS(hash_batch(batch, {}), std::invalid_argument);
  }

  SUBCASE("variable-length messages are fine") {
    HashBatch batch;
    batch.messages = {{}, std::vector<std::uint8_t>(1000, 1), {5}, std::vector<std::uint8_t>(137, 2)};
    const BatchResult res = hash_batch(batch, {});
    for (std::size_t i = 0; i < batch.messages.size(); ++i) {
      CHECK(res.digests[i] == sha3_digest(batch.algorithm, batch.messages[i]));
    }
  }

  SUBCASE("reentrant from multiple callers") {
    Rng rng(54);
    const HashBatch batch = random_batch(rng, 200, 30);
    const BatchResult expect = hash_batch(batch, {});
    std::array<bool, 3> ok{};
    {
      std::vector<std::jthread> callers;
      for (int t = 0; t < 3; ++t) {
        callers.emplace_back([&, t] {
          EngineConfig cfg;
          cfg.workers = 2;
          ok[t] = hash_batch(batch, cfg).digests == expect.digests;
        });
      }
    }
    for (bool b : ok) {
      CHECK(b);
    }
  }
}
