// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "sha3/batch.hpp"

namespace sha3::bench {

// A reproducible batch-hashing workload: fixed-size pseudorandom messages
// carved out of a list of total-byte targets.
struct WorkloadSpec {
  std::size_t message_size = 10;
  std::vector<std::uint64_t> total_sizes = {1202,   4652,   9302,   18602,  37202,
                                            74402,  148802, 297602, 595202, 1190402};
  Algorithm algorithm = Algorithm::sha3_256;
  std::uint64_t xof_output_bits = 0;  // 0 = variant default
  std::uint64_t seed = 1;
};

// splitmix64; deterministic message content from a single seed.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

std::uint64_t default_xof_bits(Algorithm algorithm);

// floor(total_bytes / message_size) messages of exactly message_size bytes.
HashBatch generate_workload(const WorkloadSpec& spec, std::uint64_t total_bytes);

}  // namespace sha3::bench
