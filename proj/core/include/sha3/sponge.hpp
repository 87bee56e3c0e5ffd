// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "sha3/bits.hpp"
#include "sha3/keccak.hpp"

namespace sha3 {

// Rate/capacity split of a sponge over Keccak-p[r + c, nr].
struct SpongeParams {
  unsigned rate;      // r bits, 0 < r < b
  unsigned capacity;  // c bits
  PermutationParams permutation;

  // Uses the standard round count for the width r + c.
  static SpongeParams create(unsigned rate_bits, unsigned capacity_bits);
  friend bool operator==(const SpongeParams&, const SpongeParams&) = default;
};

// Multi-rate padding 1 || 0^j || 1 with j = (-m-2) mod x, so that m plus the
// pad length is a multiple of x.  x is the rate, m the message bit length.
BitString pad10star1(std::uint64_t x, std::uint64_t m);

// One-shot sponge: absorbs the padded input r bits at a time, then squeezes
// exactly output_bits bits.  The input carries any domain suffix already.
// Works at bit granularity for every admissible width; the byte-oriented
// fast path lives in SpongeHasher.
BitString sponge(const SpongeParams& params, const BitString& input,
                 std::uint64_t output_bits);

// Incremental absorb/squeeze over Keccak-p[1600, 24] with a byte-aligned
// rate.  Single-owner mutable state: safe to move between threads, not safe
// to share.
class SpongeHasher {
 public:
  explicit SpongeHasher(unsigned rate_bytes);

  void update(std::span<const std::uint8_t> data);

  // Appends the domain suffix (LSB-first, at most 6 bits) plus multi-rate
  // padding and runs the final absorb permutation.  After this only
  // squeeze() may be called until reset().
  void finish(std::uint8_t domain, unsigned domain_bits);

  // Emits the next out.size() bytes of sponge output; callable repeatedly.
  void squeeze(std::span<std::uint8_t> out);

  void reset();

  unsigned rate_bytes() const { return rate_bytes_; }
  bool finished() const { return squeezing_; }

 private:
  void permute();

  std::array<std::uint64_t, 25> state_{};
  unsigned rate_bytes_;
  unsigned pos_ = 0;  // byte offset into the current rate block
  bool squeezing_ = false;
};

}  // namespace sha3
