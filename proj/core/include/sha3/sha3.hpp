// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sha3/bits.hpp"
#include "sha3/sponge.hpp"

namespace sha3 {

enum class Algorithm {
  sha3_224,
  sha3_256,
  sha3_384,
  sha3_512,
  shake128,
  shake256,
};

// Parameters of one of the six FIPS 202 functions.  The four hash variants
// use capacity c = 2 * digest bits and the two-bit suffix 01; the XOFs use
// the four-bit suffix 1111 and caller-chosen output length.
//
// Suffix bits are held LSB-first like message bits, so merged with the first
// padding bit they produce the familiar final-byte values 0x06 (hash) and
// 0x1f (XOF).
struct FunctionVariant {
  Algorithm id;
  const char* name;
  unsigned capacity;       // c bits
  std::uint8_t suffix;     // domain separation bits, LSB-first
  unsigned suffix_bits;    // 2 for hashes, 4 for XOFs
  unsigned digest_bits;    // fixed output size; 0 for XOFs

  bool is_xof() const { return digest_bits == 0; }
  unsigned rate() const { return 1600 - capacity; }
};

const FunctionVariant& variant_info(Algorithm algorithm);
std::span<const FunctionVariant> all_variants();

// Accepts the CLI spellings: sha3-224, sha3-256, sha3-384, sha3-512,
// shake128, shake256 (case-insensitive, "shake-128" also tolerated).
std::optional<Algorithm> parse_algorithm(std::string_view name);

// Keccak[c](N, d) = Sponge[Keccak-p[1600, 24], pad10*1, 1600 - c](N, d).
// The input already carries any domain suffix.  Requires 0 < c < 1600.
BitString keccak_c(unsigned capacity_bits, const BitString& input,
                   std::uint64_t output_bits);

// One-shot digest for the four hash variants.
std::vector<std::uint8_t> sha3_digest(Algorithm hash_variant,
                                      std::span<const std::uint8_t> message);

// One-shot XOF output of output_bits bits.  When output_bits is not a
// multiple of eight the final byte keeps its low-order bits.
std::vector<std::uint8_t> shake(Algorithm xof_variant,
                                std::span<const std::uint8_t> message,
                                std::uint64_t output_bits);

// Incremental hashing front end.  Single owner; movable between threads.
class Hasher {
 public:
  explicit Hasher(Algorithm algorithm);

  void update(std::span<const std::uint8_t> data);

  // Hash variants only: finalizes and returns the fixed-size digest.
  std::vector<std::uint8_t> digest();

  // XOF variants only: finish() closes the input, then read() streams
  // arbitrary amounts of output.
  void finish();
  void read(std::span<std::uint8_t> out);

  Algorithm algorithm() const { return info_->id; }
  void reset();

 private:
  const FunctionVariant* info_;
  SpongeHasher sponge_;
};

}  // namespace sha3
