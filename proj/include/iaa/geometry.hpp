#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iaa/mask.hpp"

namespace iaa {

/// Pixel center in integer grid coordinates.
struct PixelPoint {
  std::int64_t row = 0;
  std::int64_t col = 0;

  friend bool operator==(const PixelPoint&, const PixelPoint&) = default;
};

/// Inclusive axis-aligned pixel extents.
struct Box {
  Eigen::Index row_min = 0;
  Eigen::Index row_max = 0;
  Eigen::Index col_min = 0;
  Eigen::Index col_max = 0;

  friend bool operator==(const Box&, const Box&) = default;
};

/// Vertices of the convex hull of the foreground pixel centers, counter-clockwise
/// in (col, row) coordinates with collinear points dropped. Empty for an empty
/// mask; one vertex for a single pixel; two for collinear foreground.
std::vector<PixelPoint> convex_hull(const BinaryMask& mask);

/// Foreground = pixels whose centers lie inside or on the hull polygon.
/// Empty masks are returned unchanged.
BinaryMask convex_hull_mask(const BinaryMask& mask);

std::optional<Box> bounding_box(const BinaryMask& mask);

/// Foreground = the bounding box region. Empty masks are returned unchanged.
BinaryMask bounding_box_mask(const BinaryMask& mask);

}  // namespace iaa
