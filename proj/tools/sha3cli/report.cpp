// SPDX-License-Identifier: Apache-2.0
#include "report.hpp"

#include <charconv>
#include <cinttypes>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sha3::bench {

namespace {

constexpr std::string_view kHeader =
    "total_bytes,message_size,message_count,backend,time_seconds,throughput_bps,repeats";

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) {
    throw std::runtime_error("report: number formatting failed");
  }
  return std::string(buf, end);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) {
    out.push_back(field);
  }
  return out;
}

template <typename T>
T parse_number(const std::string& field, std::size_t line_no) {
  T value{};
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) {
    throw std::runtime_error("report: bad number on line " + std::to_string(line_no) +
                             ": '" + field + "'");
  }
  return value;
}

}  // namespace

std::string emit_csv(std::span<const BenchmarkRecord> records) {
  std::string out(kHeader);
  out.push_back('\n');
  for (const BenchmarkRecord& r : records) {
    out += std::to_string(r.total_bytes);
    out.push_back(',');
    out += std::to_string(r.message_size);
    out.push_back(',');
    out += std::to_string(r.message_count);
    out.push_back(',');
    out += backend_name(r.backend);
    out.push_back(',');
    out += format_double(r.time_seconds);
    out.push_back(',');
    out += format_double(r.throughput_bps);
    out.push_back(',');
    out += std::to_string(r.repeats);
    out.push_back('\n');
  }
  return out;
}

std::vector<BenchmarkRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<BenchmarkRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (line != kHeader) {
        throw std::runtime_error("report: unexpected CSV header on line 1");
      }
      continue;
    }
    if (line.empty()) {
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 7) {
      throw std::runtime_error("report: expected 7 fields on line " + std::to_string(line_no));
    }
    BenchmarkRecord r;
    r.total_bytes = parse_number<std::uint64_t>(fields[0], line_no);
    r.message_size = parse_number<std::size_t>(fields[1], line_no);
    r.message_count = parse_number<std::size_t>(fields[2], line_no);
    if (fields[3] == "sequential") {
      r.backend = Backend::sequential;
    } else if (fields[3] == "parallel") {
      r.backend = Backend::parallel;
    } else {
      throw std::runtime_error("report: unknown backend on line " + std::to_string(line_no));
    }
    r.time_seconds = parse_number<double>(fields[4], line_no);
    r.throughput_bps = parse_number<double>(fields[5], line_no);
    r.repeats = parse_number<unsigned>(fields[6], line_no);
    records.push_back(r);
  }
  return records;
}

std::string emit_console(std::span<const BenchmarkRecord> records) {
  // Sequential time per size, for the speedup column.
  std::map<std::uint64_t, double> seq_time;
  for (const BenchmarkRecord& r : records) {
    if (r.backend == Backend::sequential) {
      seq_time[r.total_bytes] = r.time_seconds;
    }
  }

  std::string out;
  char line[160];
  std::snprintf(line, sizeof(line), "%12s %9s %10s %-10s %14s %16s %8s %8s\n",
                "total_bytes", "msg_size", "msg_count", "backend", "time_s",
                "throughput_Bps", "repeats", "speedup");
  out += line;
  for (const BenchmarkRecord& r : records) {
    char speedup[24] = "";
    if (r.backend == Backend::parallel) {
      const auto it = seq_time.find(r.total_bytes);
      if (it != seq_time.end() && r.time_seconds > 0) {
        std::snprintf(speedup, sizeof(speedup), "%.2f", it->second / r.time_seconds);
      }
    }
    std::snprintf(line, sizeof(line), "%12" PRIu64 " %9zu %10zu %-10s %14.6f %16.2f %8u %8s\n",
                  r.total_bytes, r.message_size, r.message_count,
                  std::string(backend_name(r.backend)).c_str(), r.time_seconds,
                  r.throughput_bps, r.repeats, speedup);
    out += line;
  }
  return out;
}

}  // namespace sha3::bench
