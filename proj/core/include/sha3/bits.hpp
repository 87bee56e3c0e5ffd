// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace sha3 {

// A bit string: a byte sequence plus an exact bit length.  Bit i lives in
// byte i/8 at position i%8, least significant bit first, so byte-aligned
// strings are plain little-endian byte sequences.
class BitString {
 public:
  BitString() = default;

  static BitString zeros(std::size_t nbits);
  static BitString from_bytes(std::span<const std::uint8_t> bytes);
  static BitString from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);
  // Builds from a literal like "10110"; anything but '0'/'1' is rejected.
  static BitString from_bits(std::string_view bits);

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool bit(std::size_t i) const;
  void set_bit(std::size_t i, bool value);

  void append_bit(bool value);
  void append(const BitString& other);
  void append_bytes(std::span<const std::uint8_t> bytes);

  BitString prefix(std::size_t nbits) const;
  void truncate(std::size_t nbits);

  // Backing bytes; bits past size() in the last byte are always zero.
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t nbits_ = 0;
};

}  // namespace sha3
