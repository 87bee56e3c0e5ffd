// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "sha3/keccak.hpp"
#include "sha3/sha3.hpp"

namespace sha3 {

enum class Backend { sequential, parallel };

struct EngineConfig {
  Backend backend = Backend::parallel;
  unsigned workers = 0;       // 0 = one per hardware thread
  std::size_t chunk_size = 0; // messages per dispatched task; 0 = auto
};

// An ordered set of independent messages to hash with one function variant.
// Message order is significant and preserved end-to-end.
struct HashBatch {
  Algorithm algorithm = Algorithm::sha3_256;
  std::vector<std::vector<std::uint8_t>> messages;
  std::uint64_t xof_output_bits = 0;  // required for XOF variants
};

struct BatchResult {
  // digests[i] is the digest of messages[i].
  std::vector<std::vector<std::uint8_t>> digests;
  // Wall time of the hashing phase only.
  std::chrono::duration<double> elapsed{0};
};

struct IndexRange {
  std::size_t begin;
  std::size_t end;  // exclusive

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// Immutable per-process lookup tables for Keccak-p[1600, 24], built once and
// shared by every worker.
struct SharedTables {
  RoundConstantTable round_constants;
  RhoOffsets rho_offsets;
};

const SharedTables& shared_tables();

unsigned resolve_workers(const EngineConfig& config);

// Splits [0, message_count) into contiguous ranges of at most chunk_size
// messages.  The auto chunk size is ceil(count / (8 * workers)), which keeps
// per-task dispatch cost amortized while leaving the pool enough slack to
// balance uneven message lengths.
std::vector<IndexRange> plan_partition(std::size_t message_count,
                                       const EngineConfig& config);

// Hashes every message of the batch, in order.  The parallel backend fans
// chunks out to a worker pool; each output slot is written by exactly one
// worker, so ordering holds by construction.  Blocking and reentrant:
// different callers may run their own batches concurrently.
BatchResult hash_batch(const HashBatch& batch, const EngineConfig& config = {});

}  // namespace sha3
