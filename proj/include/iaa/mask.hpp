#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <vector>

#include "iaa/error.hpp"

namespace iaa {

/// Row-major boolean grid; rows index image rows (y), cols index image columns (x).
using MaskArray = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// One segmentation annotation: true marks lesion (foreground) pixels.
///
/// A mask always has at least one row and one column. The underlying array is
/// exposed read-only through array() so that Eigen expressions (&&, ||, !,
/// count()) compose directly over masks.
class BinaryMask {
 public:
  /// All-background mask. Throws DimensionError unless rows, cols >= 1.
  BinaryMask(Eigen::Index rows, Eigen::Index cols);
  explicit BinaryMask(MaskArray cells);

  template <typename Derived>
  static BinaryMask from_expression(const Eigen::ArrayBase<Derived>& expr) {
    return BinaryMask(MaskArray(expr));
  }

  Eigen::Index rows() const { return cells_.rows(); }
  Eigen::Index cols() const { return cells_.cols(); }
  Eigen::Index size() const { return cells_.size(); }
  Eigen::Index width() const { return cols(); }
  Eigen::Index height() const { return rows(); }

  bool operator()(Eigen::Index row, Eigen::Index col) const { return cells_(row, col); }
  void set(Eigen::Index row, Eigen::Index col, bool value = true) { cells_(row, col) = value; }

  const MaskArray& array() const { return cells_; }

  Eigen::Index count() const { return cells_.count(); }
  bool empty() const { return !cells_.any(); }
  bool same_shape(const BinaryMask& other) const {
    return rows() == other.rows() && cols() == other.cols();
  }

  BinaryMask complement() const;

  /// True when every foreground pixel of *this is foreground in other.
  bool subset_of(const BinaryMask& other) const;

  friend bool operator==(const BinaryMask& a, const BinaryMask& b) {
    return a.same_shape(b) && (a.cells_ == b.cells_).all();
  }

 private:
  MaskArray cells_;
};

/// Masks of one lesion, all sharing the same dimensions.
struct LesionGroup {
  std::string lesion_id;
  std::vector<BinaryMask> masks;
  /// Source file per mask, parallel to masks; empty for in-memory groups.
  std::vector<std::string> paths;
};

/// Throws DimensionError if the group is empty or its masks differ in shape.
void validate_group(const LesionGroup& group);

/// Annotation-count histogram of a dataset (buckets 1, 2, 3 and 4+).
struct DatasetSummary {
  std::size_t one = 0;
  std::size_t two = 0;
  std::size_t three = 0;
  std::size_t four_plus = 0;
  std::size_t total = 0;

  /// Lesions usable for agreement analysis (two or more annotations).
  std::size_t eligible() const { return two + three + four_plus; }

  friend bool operator==(const DatasetSummary&, const DatasetSummary&) = default;
};

DatasetSummary summarize_counts(const std::vector<std::size_t>& annotation_counts);
DatasetSummary summarize_dataset(const std::vector<LesionGroup>& groups);

}  // namespace iaa
