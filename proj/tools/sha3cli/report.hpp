// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "runner.hpp"

namespace sha3::bench {

// CSV with exactly this header, '\n' line endings, shortest round-trip
// number formatting:
//   total_bytes,message_size,message_count,backend,time_seconds,throughput_bps,repeats
std::string emit_csv(std::span<const BenchmarkRecord> records);

// Inverse of emit_csv; throws std::runtime_error naming the offending line.
std::vector<BenchmarkRecord> parse_csv(const std::string& text);

// Aligned table for humans.  When a size was measured on both backends the
// parallel row gains a speedup column (sequential time / parallel time).
std::string emit_console(std::span<const BenchmarkRecord> records);

}  // namespace sha3::bench
