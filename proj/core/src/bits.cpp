// SPDX-License-Identifier: Apache-2.0
#include "sha3/bits.hpp"

#include <stdexcept>

namespace sha3 {

BitString BitString::zeros(std::size_t nbits) {
  BitString s;
  s.nbits_ = nbits;
  s.bytes_.resize((nbits + 7) / 8, 0);
  return s;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes) {
  BitString s;
  s.bytes_.assign(bytes.begin(), bytes.end());
  s.nbits_ = bytes.size() * 8;
  return s;
}

BitString BitString::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
  if (nbits > bytes.size() * 8) {
    throw std::invalid_argument("BitString: bit length exceeds provided bytes");
  }
  BitString s;
  s.bytes_.assign(bytes.begin(), bytes.begin() + (nbits + 7) / 8);
  s.nbits_ = nbits;
  if (nbits % 8 != 0 && !s.bytes_.empty()) {
    s.bytes_.back() &= static_cast<std::uint8_t>((1u << (nbits % 8)) - 1);
  }
  return s;
}

BitString BitString::from_bits(std::string_view bits) {
  BitString s;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitString: expected only '0' and '1'");
    }
    s.append_bit(c == '1');
  }
  return s;
}

bool BitString::bit(std::size_t i) const {
  if (i >= nbits_) {
    throw std::out_of_range("BitString: bit index out of range");
  }
  return (bytes_[i >> 3] >> (i & 7)) & 1u;
}

void BitString::set_bit(std::size_t i, bool value) {
  if (i >= nbits_) {
    throw std::out_of_range("BitString: bit index out of range");
  }
  const std::uint8_t mask = static_cast<std::uint8_t>(1u << (i & 7));
  if (value) {
    bytes_[i >> 3] |= mask;
  } else {
    bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
  }
}

void BitString::append_bit(bool value) {
  if (nbits_ % 8 == 0) {
    bytes_.push_back(0);
  }
  if (value) {
    bytes_[nbits_ >> 3] |= static_cast<std::uint8_t>(1u << (nbits_ & 7));
  }
  ++nbits_;
}

void BitString::append(const BitString& other) {
  if (nbits_ % 8 == 0) {
    // Byte-aligned fast path: splice the backing bytes directly.
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    nbits_ += other.nbits_;
    return;
  }
  for (std::size_t i = 0; i < other.nbits_; ++i) {
    append_bit(other.bit(i));
  }
}

void BitString::append_bytes(std::span<const std::uint8_t> bytes) {
  append(from_bytes(bytes));
}

BitString BitString::prefix(std::size_t nbits) const {
  if (nbits > nbits_) {
    throw std::out_of_range("BitString: prefix longer than string");
  }
  BitString s = *this;
  s.truncate(nbits);
  return s;
}

void BitString::truncate(std::size_t nbits) {
  if (nbits > nbits_) {
    throw std::out_of_range("BitString: cannot truncate to a longer length");
  }
  nbits_ = nbits;
  bytes_.resize((nbits + 7) / 8);
  if (nbits % 8 != 0 && !bytes_.empty()) {
    bytes_.back() &= static_cast<std::uint8_t>((1u << (nbits % 8)) - 1);
  }
}

}  // namespace sha3
