// SPDX-License-Identifier: Apache-2.0
#include "sha3/batch.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace sha3 {

namespace {

// Digest straight into a pre-sized slot; the hashing loops never allocate.
void hash_into(const FunctionVariant& v, std::uint64_t xof_bits,
               const std::vector<std::uint8_t>& message,
               std::vector<std::uint8_t>& out) {
  SpongeHasher h(v.rate() / 8);
  h.update(message);
  h.finish(v.suffix, v.suffix_bits);
  h.squeeze(out);
  if (v.is_xof() && xof_bits % 8 != 0) {
    out.back() &= static_cast<std::uint8_t>((1u << (xof_bits % 8)) - 1);
  }
}

}  // namespace

const SharedTables& shared_tables() {
  // Thread-safe one-time construction; every caller sees the same tables.
  static const SharedTables tables{
      generate_round_constants(PermutationParams::standard(1600)),
      RhoOffsets::compute(64),
  };
  return tables;
}

unsigned resolve_workers(const EngineConfig& config) {
  if (config.workers > 0) {
    return config.workers;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

std::vector<IndexRange> plan_partition(std::size_t message_count,
                                       const EngineConfig& config) {
  std::size_t chunk = config.chunk_size;
  if (chunk == 0) {
    const unsigned workers = resolve_workers(config);
    chunk = (message_count + 8ull * workers - 1) / (8ull * workers);
    if (chunk == 0) {
      chunk = 1;
    }
  }
  std::vector<IndexRange> plan;
  plan.reserve(message_count / chunk + 1);
  for (std::size_t begin = 0; begin < message_count; begin += chunk) {
    plan.push_back({begin, std::min(begin + chunk, message_count)});
  }
  return plan;
}

BatchResult hash_batch(const HashBatch& batch, const EngineConfig& config) {
  const FunctionVariant& v = variant_info(batch.algorithm);
  if (v.is_xof() && batch.xof_output_bits == 0) {
    throw std::invalid_argument("hash_batch: XOF variants need xof_output_bits");
  }

  const std::size_t count = batch.messages.size();
  const unsigned workers = resolve_workers(config);
  const std::vector<IndexRange> plan = plan_partition(count, config);

  const std::size_t digest_bytes =
      v.is_xof() ? (batch.xof_output_bits + 7) / 8 : v.digest_bits / 8;

  BatchResult result;
  result.digests.resize(count);
  for (auto& slot : result.digests) {
    slot.resize(digest_bytes);
  }
  shared_tables();  // warm the shared constant tables outside the timed region

  const auto start = std::chrono::steady_clock::now();

  if (config.backend == Backend::sequential || workers == 1 || plan.size() <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      hash_into(v, batch.xof_output_bits, batch.messages[i], result.digests[i]);
    }
  } else {
    // Chunk-grained work stealing over a shared cursor.  Each output slot is
    // written by exactly one worker, so input order is preserved without any
    // post-hoc reordering.
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;

    auto run = [&] {
      try {
        for (;;) {
          const std::size_t task = cursor.fetch_add(1, std::memory_order_relaxed);
          if (task >= plan.size() || failed.load(std::memory_order_relaxed)) {
            return;
          }
          const IndexRange range = plan[task];
          for (std::size_t i = range.begin; i < range.end; ++i) {
            result.digests[i] = hash_one(batch, batch.messages[i]);
          }
        }
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) {
          error = std::current_exception();
        }
        failed.store(true, std::memory_order_relaxed);
      }
    };

    {
      std::vector<std::jthread> pool;
      pool.reserve(workers - 1);
      for (unsigned i = 0; i + 1 < workers; ++i) {
        pool.emplace_back(run);
      }
      run();  // the calling thread participates
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace sha3
