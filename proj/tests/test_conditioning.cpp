#include <doctest.h>

#include "iaa/conditioning.hpp"
#include "iaa/geometry.hpp"
#include "test_support.hpp"

using namespace iaa;
using namespace iaa::testing;

namespace {

BinaryMask disk(long rows, long cols, double cy, double cx, double radius) {
  BinaryMask m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c)
      if ((r - cy) * (r - cy) + (c - cx) * (c - cx) <= radius * radius) m.set(r, c);
  return m;
}

}  // namespace

TEST_CASE("names round-trip") {
  for (ConditioningKind k : kAllConditionings) CHECK(parse_conditioning(to_string(k)) == k);
  CHECK(to_string(ConditioningKind::kOpeningConvexHull) == "opening_convex_hull");
  CHECK_FALSE(parse_conditioning("erosion").has_value());
}

TEST_CASE("original is identity") {
  Rng rng(31);
  const BinaryMask m = random_mask(rng, 5, 30);
  CHECK(apply({ConditioningKind::kOriginal}, m) == m);
}

TEST_CASE("opening before the hull discards a distant speck") {
  const BinaryMask blob = disk(40, 40, 12, 12, 7);
  BinaryMask speck = blob;
  speck.set(35, 36);

  const ConditioningSpec hull{ConditioningKind::kConvexHull};
  const ConditioningSpec open_hull{ConditioningKind::kOpeningConvexHull};
  CHECK(apply(hull, speck)(30, 30));  // the plain hull is stretched toward the speck
  CHECK_FALSE(apply(open_hull, speck)(30, 30));
  CHECK_FALSE(apply(open_hull, speck)(35, 36));
  CHECK(apply(open_hull, speck) == apply(open_hull, blob));
}

TEST_CASE("bounding box conditioning fills the extents") {
  BinaryMask ell(10, 10);
  for (long r = 2; r <= 7; ++r) ell.set(r, 2);
  for (long c = 2; c <= 6; ++c) ell.set(7, c);
  const BinaryMask box = apply({ConditioningKind::kBoundingBox}, ell);
  CHECK(box.count() == 6 * 5);
  CHECK(box == bounding_box_mask(ell));
}

TEST_CASE("property: orderings, determinism and idempotence") {
  Rng rng(32);
  for (int i = 0; i < 40; ++i) {
    const BinaryMask m = random_mask(rng, 1, 36);
    const StructuringElement se(static_cast<int>(1 + 2 * rng.range(0, 2)));
    auto run = [&](ConditioningKind k, const BinaryMask& x) { return apply({k, se}, x); };
    using K = ConditioningKind;

    CHECK(m.subset_of(run(K::kClosingConvexHull, m)));
    CHECK(run(K::kOpening, m).subset_of(m));
    CHECK(m.subset_of(run(K::kClosing, m)));
    CHECK(run(K::kConvexHull, m).subset_of(run(K::kBoundingBox, m)));

    for (K k : kAllConditionings) {
      const BinaryMask once = run(k, m);
      CHECK(once.same_shape(m));
      CHECK(run(k, m) == once);
      if (k == K::kOpeningConvexHull || k == K::kClosingConvexHull) {
        CHECK(run(K::kConvexHull, once) == once);
      } else {
        CHECK(run(k, once) == once);
      }
    }
  }
}
