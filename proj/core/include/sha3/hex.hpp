// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sha3 {

std::string to_hex(std::span<const std::uint8_t> bytes);

// Accepts upper or lower case; nullopt on odd length or non-hex characters.
std::optional<std::vector<std::uint8_t>> from_hex(std::string_view hex);

}  // namespace sha3
