#pragma once

#include "iaa/mask.hpp"

namespace iaa {

/// Flat square structuring element with its origin at the center pixel.
class StructuringElement {
 public:
  static constexpr int kDefaultSide = 5;

  /// Throws std::invalid_argument unless side is odd and >= 1.
  explicit StructuringElement(int side = kDefaultSide);

  int side() const { return side_; }
  int radius() const { return side_ / 2; }

  friend bool operator==(StructuringElement, StructuringElement) = default;

 private:
  int side_;
};

// Pixels outside the image count as background for every operator.

BinaryMask erode(const BinaryMask& mask, StructuringElement se = StructuringElement{});
BinaryMask dilate(const BinaryMask& mask, StructuringElement se = StructuringElement{});
/// Erosion followed by dilation; removes foreground detail smaller than the element.
BinaryMask open(const BinaryMask& mask, StructuringElement se = StructuringElement{});
/// Dilation followed by erosion; fills background holes and gaps.
BinaryMask close(const BinaryMask& mask, StructuringElement se = StructuringElement{});

}  // namespace iaa
