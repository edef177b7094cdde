#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "iaa/mask.hpp"

namespace iaa {

/// Luminance above this value (0-255 scale) is foreground.
inline constexpr int kForegroundThreshold = 127;

/// Decodes a PNG (gray, gray+alpha, RGB, RGBA or paletted, any bit depth).
///
/// Color pixels are reduced to luminance with integer BT.601 weights
/// (299 R + 587 G + 114 B) / 1000; alpha is ignored. `origin` only labels
/// error messages. Throws DecodeError for malformed data and DimensionError
/// for a zero-sized image.
BinaryMask decode_mask(std::span<const std::uint8_t> bytes, const std::string& origin = "<memory>");

/// 8-bit grayscale PNG with foreground 255 and background 0.
std::vector<std::uint8_t> encode_mask(const BinaryMask& mask);

std::vector<std::uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, std::span<const std::uint8_t> bytes);

BinaryMask read_mask(const std::string& path);
void write_mask(const std::string& path, const BinaryMask& mask);

}  // namespace iaa
