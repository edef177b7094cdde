#include "iaa/conditioning.hpp"

#include "iaa/geometry.hpp"

namespace iaa {

std::string_view to_string(ConditioningKind kind) {
  switch (kind) {
    case ConditioningKind::kOriginal:
      return "original";
    case ConditioningKind::kOpening:
      return "opening";
    case ConditioningKind::kClosing:
      return "closing";
    case ConditioningKind::kConvexHull:
      return "convex_hull";
    case ConditioningKind::kOpeningConvexHull:
      return "opening_convex_hull";
    case ConditioningKind::kClosingConvexHull:
      return "closing_convex_hull";
    case ConditioningKind::kBoundingBox:
      return "bounding_box";
  }
  return "unknown";
}

std::optional<ConditioningKind> parse_conditioning(std::string_view name) {
  for (ConditioningKind k : kAllConditionings) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

BinaryMask apply(const ConditioningSpec& spec, const BinaryMask& mask) {
  switch (spec.kind) {
    case ConditioningKind::kOriginal:
      return mask;
    case ConditioningKind::kOpening:
      return open(mask, spec.se);
    case ConditioningKind::kClosing:
      return close(mask, spec.se);
    case ConditioningKind::kConvexHull:
      return convex_hull_mask(mask);
    case ConditioningKind::kOpeningConvexHull:
      return convex_hull_mask(open(mask, spec.se));
    case ConditioningKind::kClosingConvexHull:
      return convex_hull_mask(close(mask, spec.se));
    case ConditioningKind::kBoundingBox:
      return bounding_box_mask(mask);
  }
  return mask;
}

}  // namespace iaa
