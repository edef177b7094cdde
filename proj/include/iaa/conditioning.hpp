#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "iaa/mask.hpp"
#include "iaa/morphology.hpp"

namespace iaa {

/// Treatments applied to ground-truth masks before measuring agreement.
enum class ConditioningKind {
  kOriginal,
  kOpening,
  kClosing,
  kConvexHull,
  kOpeningConvexHull,
  kClosingConvexHull,
  kBoundingBox,
};

inline constexpr std::array<ConditioningKind, 7> kAllConditionings = {
    ConditioningKind::kOriginal,          ConditioningKind::kOpening,
    ConditioningKind::kClosing,           ConditioningKind::kConvexHull,
    ConditioningKind::kOpeningConvexHull, ConditioningKind::kClosingConvexHull,
    ConditioningKind::kBoundingBox,
};

/// Snake-case name used in files and on the command line, e.g. "opening_convex_hull".
std::string_view to_string(ConditioningKind kind);
std::optional<ConditioningKind> parse_conditioning(std::string_view name);

struct ConditioningSpec {
  ConditioningKind kind = ConditioningKind::kOriginal;
  /// Shared by the opening and closing steps.
  StructuringElement se{};
};

/// Composite kinds run the morphological step first, then the hull.
BinaryMask apply(const ConditioningSpec& spec, const BinaryMask& mask);

}  // namespace iaa
