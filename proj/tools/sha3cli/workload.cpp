// SPDX-License-Identifier: Apache-2.0
#include "workload.hpp"

#include <stdexcept>

namespace sha3::bench {

std::uint64_t default_xof_bits(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::shake128: return 256;
    case Algorithm::shake256: return 512;
    default: return 0;
  }
}

HashBatch generate_workload(const WorkloadSpec& spec, std::uint64_t total_bytes) {
  if (spec.message_size == 0) {
    throw std::invalid_argument("workload: message size must be positive");
  }
  if (total_bytes < spec.message_size) {
    throw std::invalid_argument("workload: total size smaller than one message");
  }
  const std::uint64_t count = total_bytes / spec.message_size;

  HashBatch batch;
  batch.algorithm = spec.algorithm;
  if (variant_info(spec.algorithm).is_xof()) {
    batch.xof_output_bits =
        spec.xof_output_bits ? spec.xof_output_bits : default_xof_bits(spec.algorithm);
  }

  // One generator stream per (seed, total) pair keeps every sweep point
  // deterministic on its own.
  SplitMix64 rng(spec.seed ^ (total_bytes * 0x9e3779b97f4a7c15ull));
  batch.messages.resize(count);
  for (auto& msg : batch.messages) {
    msg.resize(spec.message_size);
    std::size_t i = 0;
    while (i < msg.size()) {
      std::uint64_t word = rng.next();
      for (int k = 0; k < 8 && i < msg.size(); ++k, ++i) {
        msg[i] = static_cast<std::uint8_t>(word >> (8 * k));
      }
    }
  }
  return batch;
}

}  // namespace sha3::bench
