// SPDX-License-Identifier: Apache-2.0
#include "sha3/sponge.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace sha3 {

SpongeParams SpongeParams::create(unsigned rate_bits, unsigned capacity_bits) {
  const unsigned width = rate_bits + capacity_bits;
  PermutationParams permutation = PermutationParams::standard(width);
  if (rate_bits == 0 || rate_bits >= width) {
    throw std::invalid_argument("sponge: rate must satisfy 0 < r < b");
  }
  return SpongeParams{rate_bits, capacity_bits, permutation};
}

BitString pad10star1(std::uint64_t x, std::uint64_t m) {
  if (x == 0) {
    throw std::invalid_argument("pad10*1: block size must be positive");
  }
  const std::uint64_t j = (x - (m + 2) % x) % x;
  BitString pad;
  pad.append_bit(true);
  for (std::uint64_t i = 0; i < j; ++i) {
    pad.append_bit(false);
  }
  pad.append_bit(true);
  return pad;
}

BitString sponge(const SpongeParams& params, const BitString& input,
                 std::uint64_t output_bits) {
  const unsigned r = params.rate;
  const unsigned b = params.permutation.width;
  if (r == 0 || r >= b || r + params.capacity != b) {
    throw std::invalid_argument("sponge: invalid rate/capacity split");
  }
  if (output_bits == 0) {
    throw std::invalid_argument("sponge: output length must be at least one bit");
  }

  BitString padded = input;
  padded.append(pad10star1(r, input.size()));

  // Absorb: XOR each r-bit block into the leading bits of the state, then
  // permute.  Capacity bits are never touched by input.
  BitString state = BitString::zeros(b);
  for (std::size_t off = 0; off < padded.size(); off += r) {
    for (unsigned i = 0; i < r; ++i) {
      if (padded.bit(off + i)) {
        state.set_bit(i, !state.bit(i));
      }
    }
    state = keccak_p(state, params.permutation);
  }

  // Squeeze: emit the leading r bits, permuting between emissions.
  BitString out;
  for (;;) {
    BitString block = state.prefix(std::min<std::uint64_t>(r, output_bits - out.size()));
    out.append(block);
    if (out.size() >= output_bits) {
      return out;
    }
    state = keccak_p(state, params.permutation);
  }
}

SpongeHasher::SpongeHasher(unsigned rate_bytes) : rate_bytes_(rate_bytes) {
  if (rate_bytes == 0 || rate_bytes >= 200) {
    throw std::invalid_argument("sponge: rate must be between 1 and 199 bytes");
  }
}

void SpongeHasher::permute() {
  permute_1600(state_, round_constants_1600());
}

void SpongeHasher::update(std::span<const std::uint8_t> data) {
  if (squeezing_) {
    throw std::logic_error("sponge: update after finish");
  }
  const std::uint8_t* p = data.data();
  std::size_t n = data.size();
  while (n > 0) {
    // Word-aligned bulk XOR while a full aligned stretch of the block remains.
    if (pos_ % 8 == 0 && n >= 8) {
      const unsigned word_end = rate_bytes_ & ~7u;
      while (pos_ < word_end && n >= 8) {
        std::uint64_t v;
        std::memcpy(&v, p, 8);
        state_[pos_ / 8] ^= v;  // little-endian lane layout
        pos_ += 8;
        p += 8;
        n -= 8;
      }
    }
    while (pos_ < rate_bytes_ && n > 0) {
      state_[pos_ >> 3] ^= static_cast<std::uint64_t>(*p) << ((pos_ & 7) * 8);
      ++pos_;
      ++p;
      --n;
    }
    if (pos_ == rate_bytes_) {
      permute();
      pos_ = 0;
    }
  }
}

void SpongeHasher::finish(std::uint8_t domain, unsigned domain_bits) {
  if (squeezing_) {
    throw std::logic_error("sponge: finish called twice");
  }
  if (domain_bits > 6 || (domain >> domain_bits) != 0) {
    throw std::invalid_argument("sponge: domain suffix must fit in six bits");
  }
  // Suffix plus the first pad bit share one byte; the closing pad bit lands
  // in the last byte of the block (possibly the same one).
  const std::uint8_t head = static_cast<std::uint8_t>(domain | (1u << domain_bits));
  state_[pos_ >> 3] ^= static_cast<std::uint64_t>(head) << ((pos_ & 7) * 8);
  const unsigned last = rate_bytes_ - 1;
  state_[last >> 3] ^= 0x80ull << ((last & 7) * 8);
  permute();
  pos_ = 0;
  squeezing_ = true;
}

void SpongeHasher::squeeze(std::span<std::uint8_t> out) {
  if (!squeezing_) {
    throw std::logic_error("sponge: squeeze before finish");
  }
  for (std::uint8_t& byte : out) {
    if (pos_ == rate_bytes_) {
      permute();
      pos_ = 0;
    }
    byte = static_cast<std::uint8_t>(state_[pos_ >> 3] >> ((pos_ & 7) * 8));
    ++pos_;
  }
}

void SpongeHasher::reset() {
  state_.fill(0);
  pos_ = 0;
  squeezing_ = false;
}

}  // namespace sha3
