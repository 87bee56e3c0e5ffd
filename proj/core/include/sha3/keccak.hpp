// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sha3/bits.hpp"

namespace sha3 {

// Width and round configuration of a Keccak-p[b, nr] permutation.  The seven
// admissible widths fix the lane size w = b/25 and its log l = log2(w):
//
//   b : 25  50  100  200  400  800  1600
//   w :  1   2    4    8   16   32    64
//   l :  0   1    2    3    4    5    6
struct PermutationParams {
  unsigned width;      // b, state size in bits
  unsigned lane_bits;  // w
  unsigned lane_log2;  // l
  unsigned rounds;     // nr; zero rounds is the identity permutation

  // Rejects widths outside the table above.
  static PermutationParams create(unsigned width_bits, unsigned rounds);
  // The SHA-3 configuration: nr = 12 + 2l.
  static PermutationParams standard(unsigned width_bits);

  std::uint64_t lane_mask() const {
    return lane_bits == 64 ? ~0ull : (1ull << lane_bits) - 1;
  }
  friend bool operator==(const PermutationParams&, const PermutationParams&) = default;
};

// The 5x5xw bit state, stored as 25 w-bit lanes.  Lane (x, y) sits at index
// x + 5y and holds bits z = 0..w-1 in increasing significance, which makes a
// z-rotation a plain left rotate of the lane word.
struct StateArray {
  PermutationParams params;
  std::array<std::uint64_t, 25> lanes{};

  explicit StateArray(const PermutationParams& p) : params(p) {}

  std::uint64_t& lane(unsigned x, unsigned y) { return lanes[x + 5 * y]; }
  std::uint64_t lane(unsigned x, unsigned y) const { return lanes[x + 5 * y]; }
  bool bit(unsigned x, unsigned y, unsigned z) const {
    return (lanes[x + 5 * y] >> z) & 1u;
  }
  void set_bit(unsigned x, unsigned y, unsigned z, bool v);

  friend bool operator==(const StateArray&, const StateArray&) = default;
};

// Per-lane rotation amounts for rho, indexed x + 5y.  Produced by the
// t = 0..23 walk that starts at (1, 0) and steps (x, y) -> (y, (2x+3y) mod 5),
// assigning offset (t+1)(t+2)/2 mod w; lane (0, 0) keeps offset 0.
struct RhoOffsets {
  std::array<unsigned, 25> offsets{};

  static RhoOffsets compute(unsigned lane_bits);
  unsigned offset(unsigned x, unsigned y) const { return offsets[x + 5 * y]; }
  friend bool operator==(const RhoOffsets&, const RhoOffsets&) = default;
};

// One lane-sized constant per round.  Constant ir has bit 2^j - 1 set to
// rc(j + 7 ir) for j = 0..l and every other bit zero.
struct RoundConstantTable {
  std::vector<std::uint64_t> constants;

  friend bool operator==(const RoundConstantTable&, const RoundConstantTable&) = default;
};

// Column parities consumed by theta: c[x] holds the XOR of the five lanes in
// column x, d[x] the combined parity folded into the state.
struct ColumnParity {
  std::array<std::uint64_t, 5> c{};
  std::array<std::uint64_t, 5> d{};
};

// Bit t of the LFSR stream behind the round constants (FIPS 202 Algorithm 5):
// 8-bit register, feedback polynomial x^8 + x^6 + x^5 + x^4 + 1, seeded with 1.
bool rc_bit(std::uint64_t t);

RoundConstantTable generate_round_constants(const PermutationParams& params);
ColumnParity column_parity(const StateArray& a);

// The string<->state mapping A[x,y,z] = S[w(5y+x)+z], both directions.
StateArray string_to_state(const BitString& s, const PermutationParams& params);
BitString state_to_string(const StateArray& a);

// The five step mappings.  Each returns a fresh state; inputs are untouched.
StateArray theta(const StateArray& a);
StateArray rho(const StateArray& a, const RhoOffsets& offsets);
StateArray pi(const StateArray& a);
StateArray chi(const StateArray& a);
StateArray iota(const StateArray& a, unsigned round_index, const RoundConstantTable& rc);

// One round: iota(chi(pi(rho(theta(a)))), ir).
StateArray rnd(const StateArray& a, unsigned round_index, const RhoOffsets& offsets,
               const RoundConstantTable& rc);

// The full permutation: nr rounds over the Eq-1 mapped state.
BitString keccak_p(const BitString& s, const PermutationParams& params);

// Fused round loop for the 64-bit lane case, applying one round per supplied
// constant.  Exactly equivalent to composing the step mappings; the
// equivalence is enforced by tests.
void permute_1600(std::array<std::uint64_t, 25>& lanes,
                  std::span<const std::uint64_t> round_constants);

// The 24 standard round constants of Keccak-p[1600, 24].
std::span<const std::uint64_t> round_constants_1600();

}  // namespace sha3
