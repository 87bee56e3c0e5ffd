// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "workload.hpp"

namespace sha3::bench {

// One report row: how fast one backend chewed through one workload size.
struct BenchmarkRecord {
  std::uint64_t total_bytes = 0;
  std::size_t message_size = 0;
  std::size_t message_count = 0;
  Backend backend = Backend::sequential;
  double time_seconds = 0;     // median over the recorded runs
  double throughput_bps = 0;   // total_bytes / time_seconds
  unsigned repeats = 0;        // recorded runs, at least 3

  friend bool operator==(const BenchmarkRecord&, const BenchmarkRecord&) = default;
};

std::string_view backend_name(Backend backend);

double throughput_bytes_per_sec(std::uint64_t total_bytes, double seconds);

// Benchmarks one backend across every total size of the spec.  Each point
// runs one warm-up pass, then at least `repeats` timed passes, extended until
// the aggregate time reaches 1 ms so a row can never report a zero time.
// Timing covers the hashing phase only; workload generation sits outside.
std::vector<BenchmarkRecord> run_benchmark(const WorkloadSpec& spec,
                                           const EngineConfig& config,
                                           unsigned repeats);

}  // namespace sha3::bench
