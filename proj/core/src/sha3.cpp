// SPDX-License-Identifier: Apache-2.0
#include "sha3/sha3.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace sha3 {

namespace {

constexpr std::array<FunctionVariant, 6> kVariants = {{
    {Algorithm::sha3_224, "sha3-224", 448, 0x02, 2, 224},
    {Algorithm::sha3_256, "sha3-256", 512, 0x02, 2, 256},
    {Algorithm::sha3_384, "sha3-384", 768, 0x02, 2, 384},
    {Algorithm::sha3_512, "sha3-512", 1024, 0x02, 2, 512},
    {Algorithm::shake128, "shake128", 256, 0x0f, 4, 0},
    {Algorithm::shake256, "shake256", 512, 0x0f, 4, 0},
}};

std::string lowered(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

const FunctionVariant& variant_info(Algorithm algorithm) {
  return kVariants[static_cast<std::size_t>(algorithm)];
}

std::span<const FunctionVariant> all_variants() {
  return kVariants;
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  const std::string n = lowered(name);
  for (const FunctionVariant& v : kVariants) {
    if (n == v.name) {
      return v.id;
    }
  }
  if (n == "shake-128") return Algorithm::shake128;
  if (n == "shake-256") return Algorithm::shake256;
  return std::nullopt;
}

BitString keccak_c(unsigned capacity_bits, const BitString& input,
                   std::uint64_t output_bits) {
  if (capacity_bits == 0 || capacity_bits >= 1600) {
    throw std::invalid_argument("keccak[c]: capacity must satisfy 0 < c < 1600");
  }
  return sponge(SpongeParams::create(1600 - capacity_bits, capacity_bits), input,
                output_bits);
}

std::vector<std::uint8_t> sha3_digest(Algorithm hash_variant,
                                      std::span<const std::uint8_t> message) {
  const FunctionVariant& v = variant_info(hash_variant);
  if (v.is_xof()) {
    throw std::invalid_argument("sha3_digest: expected a fixed-output variant");
  }
  SpongeHasher h(v.rate() / 8);
  h.update(message);
  h.finish(v.suffix, v.suffix_bits);
  std::vector<std::uint8_t> digest(v.digest_bits / 8);
  h.squeeze(digest);
  return digest;
}

std::vector<std::uint8_t> shake(Algorithm xof_variant,
                                std::span<const std::uint8_t> message,
                                std::uint64_t output_bits) {
  const FunctionVariant& v = variant_info(xof_variant);
  if (!v.is_xof()) {
    throw std::invalid_argument("shake: expected an extendable-output variant");
  }
  if (output_bits == 0) {
    throw std::invalid_argument("shake: output length must be at least one bit");
  }
  SpongeHasher h(v.rate() / 8);
  h.update(message);
  h.finish(v.suffix, v.suffix_bits);
  std::vector<std::uint8_t> out((output_bits + 7) / 8);
  h.squeeze(out);
  if (output_bits % 8 != 0) {
    out.back() &= static_cast<std::uint8_t>((1u << (output_bits % 8)) - 1);
  }
  return out;
}

Hasher::Hasher(Algorithm algorithm)
    : info_(&variant_info(algorithm)), sponge_(info_->rate() / 8) {}

void Hasher::update(std::span<const std::uint8_t> data) {
  sponge_.update(data);
}

std::vector<std::uint8_t> Hasher::digest() {
  if (info_->is_xof()) {
    throw std::logic_error("Hasher: digest() is for fixed-output variants; use finish()/read()");
  }
  sponge_.finish(info_->suffix, info_->suffix_bits);
  std::vector<std::uint8_t> out(info_->digest_bits / 8);
  sponge_.squeeze(out);
  return out;
}

void Hasher::finish() {
  if (!info_->is_xof()) {
    throw std::logic_error("Hasher: finish()/read() is for XOF variants; use digest()");
  }
  sponge_.finish(info_->suffix, info_->suffix_bits);
}

void Hasher::read(std::span<std::uint8_t> out) {
  if (!info_->is_xof()) {
    throw std::logic_error("Hasher: finish()/read() is for XOF variants; use digest()");
  }
  sponge_.squeeze(out);
}

void Hasher::reset() {
  sponge_.reset();
}

}  // namespace sha3
