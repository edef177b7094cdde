#include "iaa/morphology.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace iaa {

StructuringElement::StructuringElement(int side) : side_(side) {
  if (side < 1 || side % 2 == 0) {
    throw std::invalid_argument("structuring element side must be odd and >= 1, got " +
                                std::to_string(side));
  }
}

namespace {

enum class Reduce { kAll, kAny };

// One separable pass along a line of `n` samples spaced `stride` apart.
// kAll: true iff the whole window [i-r, i+r] is inside the line and set.
// kAny: true iff any in-bounds sample of the window is set.
void line_pass(const bool* in, bool* out, Eigen::Index n, Eigen::Index stride, Eigen::Index r,
               Reduce op, std::vector<Eigen::Index>& prefix) {
  prefix.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i] + (in[i * stride] ? 1 : 0);
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index lo = i - r;
    const Eigen::Index hi = i + r;
    bool v;
    if (op == Reduce::kAll) {
      v = lo >= 0 && hi < n && prefix[hi + 1] - prefix[lo] == 2 * r + 1;
    } else {
      const Eigen::Index a = lo < 0 ? 0 : lo;
      const Eigen::Index b = hi >= n ? n - 1 : hi;
      v = prefix[b + 1] - prefix[a] > 0;
    }
    out[i * stride] = v;
  }
}

BinaryMask separable(const BinaryMask& mask, StructuringElement se, Reduce op) {
  const Eigen::Index r = se.radius();
  if (r == 0) return mask;
  const Eigen::Index rows = mask.rows();
  const Eigen::Index cols = mask.cols();

  const MaskArray& src = mask.array();
  MaskArray horizontal(rows, cols);
  MaskArray result(rows, cols);
  std::vector<Eigen::Index> prefix;
  for (Eigen::Index y = 0; y < rows; ++y) {
    line_pass(src.data() + y * cols, horizontal.data() + y * cols, cols, 1, r, op, prefix);
  }
  for (Eigen::Index x = 0; x < cols; ++x) {
    line_pass(horizontal.data() + x, result.data() + x, rows, cols, r, op, prefix);
  }
  return BinaryMask(std::move(result));
}

}  // namespace

BinaryMask erode(const BinaryMask& mask, StructuringElement se) {
  return separable(mask, se, Reduce::kAll);
}

BinaryMask dilate(const BinaryMask& mask, StructuringElement se) {
  return separable(mask, se, Reduce::kAny);
}

BinaryMask open(const BinaryMask& mask, StructuringElement se) { return dilate(erode(mask, se), se); }

// The frame is a window onto an unbounded background plane. Dilation can
// reach up to `radius` pixels past the frame and erosion must see those
// pixels, so closing runs on a background-padded canvas and is cropped back.
// Without the padding, closing would erase foreground along the frame.
BinaryMask close(const BinaryMask& mask, StructuringElement se) {
  const Eigen::Index r = se.radius();
  if (r == 0) return mask;
  MaskArray canvas = MaskArray::Constant(mask.rows() + 2 * r, mask.cols() + 2 * r, false);
  canvas.block(r, r, mask.rows(), mask.cols()) = mask.array();
  const BinaryMask closed = erode(dilate(BinaryMask(std::move(canvas)), se), se);
  return BinaryMask(MaskArray(closed.array().block(r, r, mask.rows(), mask.cols())));
}

}  // namespace iaa
