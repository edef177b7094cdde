#include "iaa/mask.hpp"

#include <string>

namespace iaa {

namespace {

void check_dimensions(Eigen::Index rows, Eigen::Index cols) {
  if (rows < 1 || cols < 1) {
    throw DimensionError("mask dimensions must be at least 1x1, got " + std::to_string(cols) +
                         "x" + std::to_string(rows));
  }
}

}  // namespace

BinaryMask::BinaryMask(Eigen::Index rows, Eigen::Index cols) {
  check_dimensions(rows, cols);
  cells_ = MaskArray::Constant(rows, cols, false);
}

BinaryMask::BinaryMask(MaskArray cells) : cells_(std::move(cells)) {
  check_dimensions(cells_.rows(), cells_.cols());
}

BinaryMask BinaryMask::complement() const { return BinaryMask(MaskArray(!cells_)); }

bool BinaryMask::subset_of(const BinaryMask& other) const {
  return same_shape(other) && !(cells_ && !other.cells_).any();
}

void validate_group(const LesionGroup& group) {
  if (group.masks.empty()) {
    throw DimensionError("lesion group '" + group.lesion_id + "' has no masks");
  }
  const BinaryMask& first = group.masks.front();
  for (const BinaryMask& m : group.masks) {
    if (!m.same_shape(first)) {
      std::string msg = "lesion group '" + group.lesion_id + "' has masks of different dimensions";
      for (std::size_t i = 0; i < group.masks.size(); ++i) {
        msg += i == 0 ? ": " : ", ";
        if (i < group.paths.size()) msg += group.paths[i] + " ";
        msg += "(" + std::to_string(group.masks[i].cols()) + "x" +
               std::to_string(group.masks[i].rows()) + ")";
      }
      throw DimensionError(msg);
    }
  }
}

DatasetSummary summarize_counts(const std::vector<std::size_t>& annotation_counts) {
  DatasetSummary s;
  for (std::size_t k : annotation_counts) {
    switch (k) {
      case 0:
        continue;
      case 1:
        ++s.one;
        break;
      case 2:
        ++s.two;
        break;
      case 3:
        ++s.three;
        break;
      default:
        ++s.four_plus;
    }
    ++s.total;
  }
  return s;
}

DatasetSummary summarize_dataset(const std::vector<LesionGroup>& groups) {
  std::vector<std::size_t> counts;
  counts.reserve(groups.size());
  for (const LesionGroup& g : groups) counts.push_back(g.masks.size());
  return summarize_counts(counts);
}

}  // namespace iaa
