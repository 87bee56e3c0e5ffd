// SPDX-License-Identifier: Apache-2.0
#include "sha3/keccak.hpp"

#include <bit>
#include <stdexcept>

namespace sha3 {

namespace {

// Rotation within the low w bits of a lane.
std::uint64_t lane_rotl(std::uint64_t v, unsigned n, unsigned w) {
  if (w == 64) {
    return std::rotl(v, static_cast<int>(n));
  }
  n %= w;
  const std::uint64_t mask = (1ull << w) - 1;
  if (n == 0) {
    return v & mask;
  }
  return ((v << n) | (v >> (w - n))) & mask;
}

// Published rho rotations and round constants for the 64-bit lane case.
// Both tables are checked against the generating procedures by tests.
constexpr std::array<unsigned, 25> kRho1600 = {
    0,  1,  62, 28, 27,  //
    36, 44, 6,  55, 20,  //
    3,  10, 43, 25, 39,  //
    41, 45, 15, 21, 8,   //
    18, 2,  61, 56, 14,
};

constexpr std::array<std::uint64_t, 24> kRoundConstants1600 = {
    0x0000000000000001ull, 0x0000000000008082ull, 0x800000000000808aull,
    0x8000000080008000ull, 0x000000000000808bull, 0x0000000080000001ull,
    0x8000000080008081ull, 0x8000000000008009ull, 0x000000000000008aull,
    0x0000000000000088ull, 0x0000000080008009ull, 0x000000008000000aull,
    0x000000008000808bull, 0x800000000000008bull, 0x8000000000008089ull,
    0x8000000000008003ull, 0x8000000000008002ull, 0x8000000000000080ull,
    0x000000000000800aull, 0x800000008000000aull, 0x8000000080008081ull,
    0x8000000000008080ull, 0x0000000080000001ull, 0x8000000080008008ull,
};

}  // namespace

PermutationParams PermutationParams::create(unsigned width_bits, unsigned rounds) {
  unsigned log2_lane = 0;
  switch (width_bits) {
    case 25:   log2_lane = 0; break;
    case 50:   log2_lane = 1; break;
    case 100:  log2_lane = 2; break;
    case 200:  log2_lane = 3; break;
    case 400:  log2_lane = 4; break;
    case 800:  log2_lane = 5; break;
    case 1600: log2_lane = 6; break;
    default:
      throw std::invalid_argument("keccak: width must be one of 25, 50, 100, 200, 400, 800, 1600");
  }
  return PermutationParams{width_bits, width_bits / 25, log2_lane, rounds};
}

PermutationParams PermutationParams::standard(unsigned width_bits) {
  PermutationParams p = create(width_bits, 0);
  p.rounds = 12 + 2 * p.lane_log2;
  return p;
}

void StateArray::set_bit(unsigned x, unsigned y, unsigned z, bool v) {
  const std::uint64_t mask = 1ull << z;
  if (v) {
    lanes[x + 5 * y] |= mask;
  } else {
    lanes[x + 5 * y] &= ~mask;
  }
}

RhoOffsets RhoOffsets::compute(unsigned lane_bits) {
  RhoOffsets r;
  r.offsets[0] = 0;
  unsigned x = 1, y = 0;
  for (unsigned t = 0; t < 24; ++t) {
    r.offsets[x + 5 * y] = ((t + 1) * (t + 2) / 2) % lane_bits;
    const unsigned nx = y;
    const unsigned ny = (2 * x + 3 * y) % 5;
    x = nx;
    y = ny;
  }
  return r;
}

bool rc_bit(std::uint64_t t) {
  const unsigned m = static_cast<unsigned>(t % 255);
  if (m == 0) {
    return true;
  }
  unsigned r = 1;  // R[0..7] packed LSB-first
  for (unsigned i = 0; i < m; ++i) {
    r <<= 1;
    if (r & 0x100) {
      r ^= 0x171;  // fold the exiting bit into positions 0, 4, 5, 6
    }
  }
  return r & 1u;
}

RoundConstantTable generate_round_constants(const PermutationParams& params) {
  RoundConstantTable table;
  table.constants.resize(params.rounds, 0);
  for (unsigned ir = 0; ir < params.rounds; ++ir) {
    std::uint64_t rc = 0;
    for (unsigned j = 0; j <= params.lane_log2; ++j) {
      if (rc_bit(j + 7ull * ir)) {
        rc |= 1ull << ((1u << j) - 1);
      }
    }
    table.constants[ir] = rc;
  }
  return table;
}

ColumnParity column_parity(const StateArray& a) {
  ColumnParity p;
  for (unsigned x = 0; x < 5; ++x) {
    p.c[x] = a.lane(x, 0) ^ a.lane(x, 1) ^ a.lane(x, 2) ^ a.lane(x, 3) ^ a.lane(x, 4);
  }
  for (unsigned x = 0; x < 5; ++x) {
    // D[x,z] = C[x-1, z] ^ C[x+1, z-1]; the z-1 shows up as a left rotate.
    p.d[x] = p.c[(x + 4) % 5] ^ lane_rotl(p.c[(x + 1) % 5], 1, a.params.lane_bits);
  }
  return p;
}

StateArray string_to_state(const BitString& s, const PermutationParams& params) {
  if (s.size() != params.width) {
    throw std::invalid_argument("keccak: string length does not match permutation width");
  }
  StateArray a(params);
  const unsigned w = params.lane_bits;
  if (w >= 8) {
    // Lanes are whole little-endian byte runs when w is a multiple of 8.
    const unsigned lane_bytes = w / 8;
    const auto& bytes = s.bytes();
    for (unsigned i = 0; i < 25; ++i) {
      std::uint64_t lane = 0;
      for (unsigned k = 0; k < lane_bytes; ++k) {
        lane |= static_cast<std::uint64_t>(bytes[i * lane_bytes + k]) << (8 * k);
      }
      a.lanes[i] = lane;
    }
    return a;
  }
  for (unsigned i = 0; i < 25; ++i) {
    std::uint64_t lane = 0;
    for (unsigned z = 0; z < w; ++z) {
      lane |= static_cast<std::uint64_t>(s.bit(w * i + z)) << z;
    }
    a.lanes[i] = lane;
  }
  return a;
}

BitString state_to_string(const StateArray& a) {
  const unsigned w = a.params.lane_bits;
  BitString s = BitString::zeros(a.params.width);
  if (w >= 8) {
    const unsigned lane_bytes = w / 8;
    for (unsigned i = 0; i < 25; ++i) {
      for (unsigned k = 0; k < lane_bytes; ++k) {
        const auto byte = static_cast<std::uint8_t>(a.lanes[i] >> (8 * k));
        for (unsigned b = 0; b < 8; ++b) {
          if ((byte >> b) & 1u) {
            s.set_bit(i * w + 8 * k + b, true);
          }
        }
      }
    }
    return s;
  }
  for (unsigned i = 0; i < 25; ++i) {
    for (unsigned z = 0; z < w; ++z) {
      if ((a.lanes[i] >> z) & 1u) {
        s.set_bit(w * i + z, true);
      }
    }
  }
  return s;
}

StateArray theta(const StateArray& a) {
  const ColumnParity p = column_parity(a);
  StateArray out = a;
  for (unsigned x = 0; x < 5; ++x) {
    for (unsigned y = 0; y < 5; ++y) {
      out.lane(x, y) ^= p.d[x];
    }
  }
  return out;
}

StateArray rho(const StateArray& a, const RhoOffsets& offsets) {
  StateArray out = a;
  for (unsigned i = 0; i < 25; ++i) {
    out.lanes[i] = lane_rotl(a.lanes[i], offsets.offsets[i], a.params.lane_bits);
  }
  return out;
}

StateArray pi(const StateArray& a) {
  StateArray out(a.params);
  for (unsigned x = 0; x < 5; ++x) {
    for (unsigned y = 0; y < 5; ++y) {
      out.lane(x, y) = a.lane((x + 3 * y) % 5, x);
    }
  }
  return out;
}

StateArray chi(const StateArray& a) {
  StateArray out(a.params);
  for (unsigned y = 0; y < 5; ++y) {
    for (unsigned x = 0; x < 5; ++x) {
      // A[x+2] & ~A[x+1] stays within the lane mask because both operands do.
      out.lane(x, y) = a.lane(x, y) ^ (a.lane((x + 2) % 5, y) & ~a.lane((x + 1) % 5, y) &
                                       a.params.lane_mask());
    }
  }
  return out;
}

StateArray iota(const StateArray& a, unsigned round_index, const RoundConstantTable& rc) {
  if (round_index >= rc.constants.size()) {
    throw std::out_of_range("keccak: round index out of range");
  }
  StateArray out = a;
  out.lane(0, 0) ^= rc.constants[round_index];
  return out;
}

StateArray rnd(const StateArray& a, unsigned round_index, const RhoOffsets& offsets,
               const RoundConstantTable& rc) {
  return iota(chi(pi(rho(theta(a), offsets))), round_index, rc);
}

void permute_1600(std::array<std::uint64_t, 25>& lanes,
                  std::span<const std::uint64_t> round_constants) {
  std::uint64_t* a = lanes.data();
  for (const std::uint64_t rc : round_constants) {
    // theta
    std::uint64_t c[5];
    for (unsigned x = 0; x < 5; ++x) {
      c[x] = a[x] ^ a[x + 5] ^ a[x + 10] ^ a[x + 15] ^ a[x + 20];
    }
    for (unsigned x = 0; x < 5; ++x) {
      const std::uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
      for (unsigned y = 0; y < 25; y += 5) {
        a[x + y] ^= d;
      }
    }
    // rho + pi into a scratch plane
    std::uint64_t b[25];
    for (unsigned x = 0; x < 5; ++x) {
      for (unsigned y = 0; y < 5; ++y) {
        const unsigned src = (x + 3 * y) % 5 + 5 * x;
        b[x + 5 * y] = std::rotl(a[src], static_cast<int>(kRho1600[src]));
      }
    }
    // chi
    for (unsigned y = 0; y < 25; y += 5) {
      for (unsigned x = 0; x < 5; ++x) {
        a[x + y] = b[x + y] ^ (~b[(x + 1) % 5 + y] & b[(x + 2) % 5 + y]);
      }
    }
    // iota
    a[0] ^= rc;
  }
}

std::span<const std::uint64_t> round_constants_1600() {
  return kRoundConstants1600;
}

BitString keccak_p(const BitString& s, const PermutationParams& params) {
  if (s.size() != params.width) {
    throw std::invalid_argument("keccak: string length does not match permutation width");
  }
  StateArray a = string_to_state(s, params);
  if (params.lane_bits == 64) {
    const RoundConstantTable table = generate_round_constants(params);
    permute_1600(a.lanes, table.constants);
    return state_to_string(a);
  }
  const RhoOffsets offsets = RhoOffsets::compute(params.lane_bits);
  const RoundConstantTable table = generate_round_constants(params);
  for (unsigned ir = 0; ir < params.rounds; ++ir) {
    a = rnd(a, ir, offsets, table);
  }
  return state_to_string(a);
}

}  // namespace sha3
