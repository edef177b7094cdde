#include "iaa/geometry.hpp"

#include <algorithm>

namespace iaa {

namespace {

std::int64_t cross(const PixelPoint& o, const PixelPoint& a, const PixelPoint& b) {
  return (a.col - o.col) * (b.row - o.row) - (a.row - o.row) * (b.col - o.col);
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

// The leftmost and rightmost foreground pixel of each row span the same hull
// as the full foreground set.
std::vector<PixelPoint> row_extremes(const BinaryMask& mask) {
  std::vector<PixelPoint> pts;
  const MaskArray& a = mask.array();
  for (Eigen::Index r = 0; r < mask.rows(); ++r) {
    Eigen::Index first = -1;
    Eigen::Index last = -1;
    for (Eigen::Index c = 0; c < mask.cols(); ++c) {
      if (a(r, c)) {
        if (first < 0) first = c;
        last = c;
      }
    }
    if (first < 0) continue;
    pts.push_back({r, first});
    if (last != first) pts.push_back({r, last});
  }
  return pts;
}

}  // namespace

std::vector<PixelPoint> convex_hull(const BinaryMask& mask) {
  std::vector<PixelPoint> pts = row_extremes(mask);
  std::sort(pts.begin(), pts.end(), [](const PixelPoint& p, const PixelPoint& q) {
    return p.col != q.col ? p.col < q.col : p.row < q.row;
  });
  if (pts.size() <= 1) return pts;

  // Andrew's monotone chain; `<= 0` drops collinear points.
  std::vector<PixelPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const PixelPoint& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

BinaryMask convex_hull_mask(const BinaryMask& mask) {
  const std::optional<Box> box = bounding_box(mask);
  if (!box) return mask;
  const std::vector<PixelPoint> hull = convex_hull(mask);

  MaskArray out = MaskArray::Constant(mask.rows(), mask.cols(), false);
  const std::size_t n = hull.size();
  for (Eigen::Index y = box->row_min; y <= box->row_max; ++y) {
    std::int64_t lo = box->col_min;
    std::int64_t hi = box->col_max;
    // Each directed edge A->B keeps points with cross(A, B, P) >= 0, i.e.
    // dy * (x - Ax) <= dx * (y - Ay); on a fixed row this bounds x.
    for (std::size_t i = 0; i < n && lo <= hi && n >= 2; ++i) {
      const PixelPoint& a = hull[i];
      const PixelPoint& b = hull[(i + 1) % n];
      const std::int64_t dx = b.col - a.col;
      const std::int64_t dy = b.row - a.row;
      const std::int64_t rhs = dx * (y - a.row);
      if (dy > 0) {
        hi = std::min(hi, a.col + floor_div(rhs, dy));
      } else if (dy < 0) {
        lo = std::max(lo, a.col + ceil_div(rhs, dy));
      } else if (rhs < 0) {
        hi = lo - 1;
      }
    }
    if (lo <= hi) out.row(y).segment(lo, hi - lo + 1).setConstant(true);
  }
  return BinaryMask(std::move(out));
}

std::optional<Box> bounding_box(const BinaryMask& mask) {
  const MaskArray& a = mask.array();
  const Eigen::Array<bool, Eigen::Dynamic, 1> row_has = a.rowwise().any();
  const Eigen::Array<bool, 1, Eigen::Dynamic> col_has = a.colwise().any();
  if (!row_has.any()) return std::nullopt;

  Box box;
  box.row_min = 0;
  while (!row_has(box.row_min)) ++box.row_min;
  box.row_max = mask.rows() - 1;
  while (!row_has(box.row_max)) --box.row_max;
  box.col_min = 0;
  while (!col_has(box.col_min)) ++box.col_min;
  box.col_max = mask.cols() - 1;
  while (!col_has(box.col_max)) --box.col_max;
  return box;
}

BinaryMask bounding_box_mask(const BinaryMask& mask) {
  const std::optional<Box> box = bounding_box(mask);
  if (!box) return mask;
  MaskArray out = MaskArray::Constant(mask.rows(), mask.cols(), false);
  out.block(box->row_min, box->col_min, box->row_max - box->row_min + 1,
            box->col_max - box->col_min + 1)
      .setConstant(true);
  return BinaryMask(std::move(out));
}

}  // namespace iaa
