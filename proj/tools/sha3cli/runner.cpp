// SPDX-License-Identifier: Apache-2.0
#include "runner.hpp"

#include <algorithm>
#include <stdexcept>

namespace sha3::bench {

std::string_view backend_name(Backend backend) {
  return backend == Backend::sequential ? "sequential" : "parallel";
}

double throughput_bytes_per_sec(std::uint64_t total_bytes, double seconds) {
  if (seconds <= 0) {
    throw std::invalid_argument("throughput: elapsed time must be positive");
  }
  return static_cast<double>(total_bytes) / seconds;
}

namespace {

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  return n % 2 ? samples[n / 2] : 0.5 * (samples[n / 2 - 1] + samples[n / 2]);
}

}  // namespace

std::vector<BenchmarkRecord> run_benchmark(const WorkloadSpec& spec,
                                           const EngineConfig& config,
                                           unsigned repeats) {
  if (repeats < 3) {
    throw std::invalid_argument("benchmark: reported rows need at least 3 repeats");
  }

  std::vector<BenchmarkRecord> records;
  records.reserve(spec.total_sizes.size());

  for (const std::uint64_t total : spec.total_sizes) {
    const HashBatch batch = generate_workload(spec, total);
    const std::uint64_t hashed_bytes =
        static_cast<std::uint64_t>(batch.messages.size()) * spec.message_size;

    hash_batch(batch, config);  // warm-up, not recorded

    std::vector<double> samples;
    double aggregate = 0;
    // Timer-resolution guard: keep sampling until we both hit the requested
    // repeat count and accumulate at least 1 ms of measured work.
    while (samples.size() < repeats || aggregate < 1e-3) {
      const BatchResult result = hash_batch(batch, config);
      samples.push_back(result.elapsed.count());
      aggregate += samples.back();
      if (samples.size() >= 1u << 20) {
        break;  // pathological clock; bail with what we have
      }
    }

    double time = median(samples);
    if (time <= 0) {
      time = aggregate / static_cast<double>(samples.size());
    }

    records.push_back({
        .total_bytes = hashed_bytes,
        .message_size = spec.message_size,
        .message_count = batch.messages.size(),
        .backend = config.backend,
        .time_seconds = time,
        .throughput_bps = throughput_bytes_per_sec(hashed_bytes, time),
        .repeats = static_cast<unsigned>(samples.size()),
    });
  }
  return records;
}

}  // namespace sha3::bench
