// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sha3/sha3.hpp"

namespace sha3::bench {

// One Len/Msg/MD triple from a NIST-style response file.
struct VectorEntry {
  std::size_t line = 0;       // line number of the Len field
  std::uint64_t msg_bits = 0;
  std::vector<std::uint8_t> message;
  std::vector<std::uint8_t> expected;
};

struct VectorFile {
  std::uint64_t output_bits = 0;  // [Outputlen = N] header, when present
  std::vector<VectorEntry> entries;
};

struct VectorFailure {
  std::size_t line = 0;
  std::uint64_t msg_bits = 0;
  std::string expected_hex;
  std::string actual_hex;
};

struct VectorReport {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::vector<VectorFailure> failures;

  bool all_passed() const { return failures.empty(); }
};

// Response-file convention: `Len = <bits>`, `Msg = <hex>`, `MD = <hex>`
// triples; Msg is ignored when Len = 0; `#` comments and `[...]` header
// lines are skipped except for [Outputlen = N].  Only byte-aligned lengths
// are accepted.  Malformed input throws std::runtime_error naming the line.
VectorFile parse_vector_file(std::istream& in);
VectorFile load_vector_file(const std::string& path);

// Algorithm inferred from the file name (e.g. SHA3_256ShortMsg.rsp).
std::optional<Algorithm> algorithm_from_filename(const std::string& path);

// Recomputes every digest and reports mismatches.
VectorReport verify_vectors(const VectorFile& file, Algorithm algorithm);

}  // namespace sha3::bench
