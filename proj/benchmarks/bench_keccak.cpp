// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <array>
#include <vector>

#include "sha3/batch.hpp"
#include "sha3/keccak.hpp"
#include "sha3/sha3.hpp"

namespace {

void BM_Permute1600(benchmark::State& state) {
  std::array<std::uint64_t, 25> lanes{};
  lanes[0] = 1;
  for (auto _ : state) {
    sha3::permute_1600(lanes, sha3::round_constants_1600());
    benchmark::DoNotOptimize(lanes);
  }
  state.SetBytesProcessed(state.iterations() * 200);
}
BENCHMARK(BM_Permute1600);

void BM_Sha3_256(benchmark::State& state) {
  const std::vector<std::uint8_t> msg(static_cast<std::size_t>(state.range(0)), 0x5a);
  for (auto _ : state) {
    auto digest = sha3::sha3_digest(sha3::Algorithm::sha3_256, msg);
    benchmark::DoNotOptimize(digest);
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sha3_256)->Arg(10)->Arg(64)->Arg(1024)->Arg(65536);

void BM_Shake128(benchmark::State& state) {
  const std::vector<std::uint8_t> msg(1024, 0x5a);
  for (auto _ : state) {
    auto out = sha3::shake(sha3::Algorithm::shake128, msg, state.range(0) * 8);
    benchmark::DoNotOptimize(out);
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Shake128)->Arg(32)->Arg(512)->Arg(8192);

void BM_HashBatch(benchmark::State& state) {
  sha3::HashBatch batch;
  batch.messages.assign(static_cast<std::size_t>(state.range(1)),
                        std::vector<std::uint8_t>(64, 0x11));
  sha3::EngineConfig config;
  config.backend = state.range(0) ? sha3::Backend::parallel : sha3::Backend::sequential;
  for (auto _ : state) {
    auto result = sha3::hash_batch(batch, config);
    benchmark::DoNotOptimize(result.digests);
  }
  state.SetBytesProcessed(state.iterations() * state.range(1) * 64);
  state.SetLabel(state.range(0) ? "parallel" : "sequential");
}
BENCHMARK(BM_HashBatch)
    ->ArgsProduct({{0, 1}, {100, 1000, 10000}})
    ->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
