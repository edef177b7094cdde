#include <doctest.h>

#include <algorithm>

#include "iaa/agreement.hpp"
#include "test_support.hpp"

using namespace iaa;
using namespace iaa::testing;

namespace {

BinaryMask from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  BinaryMask m(static_cast<long>(rows.size()), static_cast<long>(rows.begin()->size()));
  long r = 0;
  for (const auto& row : rows) {
    long c = 0;
    for (int v : row) m.set(r, c++, v != 0);
    ++r;
  }
  return m;
}

LesionGroup group_of(std::string id, std::vector<BinaryMask> masks) {
  return LesionGroup{std::move(id), std::move(masks), {}};
}

}  // namespace

TEST_CASE("kappa examples") {
  SUBCASE("identical non-constant masks") {
    const BinaryMask m = from_rows({{1, 0, 1}, {0, 0, 1}});
    CHECK(cohen_kappa(m, m) == 1.0);
  }
  SUBCASE("2x2 fixture") {
    const BinaryMask a = from_rows({{1, 1}, {0, 0}});
    const BinaryMask b = from_rows({{1, 0}, {0, 0}});
    const ConfusionCounts t = confusion_counts(a, b);
    CHECK(t.both == 1);
    CHECK(t.first_only == 1);
    CHECK(t.second_only == 0);
    CHECK(t.neither == 2);
    CHECK(naive_kappa(a, b) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cohen_kappa(a, b) == doctest::Approx(0.5).epsilon(1e-15));
  }
  SUBCASE("left half vs right half is -1") {
    BinaryMask left(6, 8), right(6, 8);
    for (long r = 0; r < 6; ++r)
      for (long c = 0; c < 8; ++c) (c < 4 ? left : right).set(r, c);
    CHECK(naive_kappa(left, right) == -1.0);
    CHECK(cohen_kappa(left, right) == -1.0);
  }
  SUBCASE("equal constant masks score 1") {
    CHECK(cohen_kappa(BinaryMask(3, 3), BinaryMask(3, 3)) == 1.0);
    const BinaryMask full(MaskArray::Constant(3, 3, true));
    CHECK(cohen_kappa(full, full) == 1.0);
    CHECK(cohen_kappa(full, BinaryMask(3, 3)) == 0.0);
  }
}

TEST_CASE("kappa errors") {
  CHECK_THROWS_AS(cohen_kappa(BinaryMask(2, 2), BinaryMask(2, 3)), DimensionError);
  CHECK_THROWS_AS(cohen_kappa(ConfusionCounts{}), DimensionError);
}

TEST_CASE("property: kappa matches the pixel-loop oracle, bounded, symmetric, complement-invariant") {
  Rng rng(41);
  for (int i = 0; i < 200; ++i) {
    const long rows = rng.range(1, 96), cols = rng.range(1, 96);
    const BinaryMask a = noise_mask(rng, rows, cols, rng.uniform());
    const BinaryMask b = rng.chance(0.5) ? noise_mask(rng, rows, cols, rng.uniform())
                                         : BinaryMask(MaskArray(a.array() != noise_mask(rng, rows, cols, 0.05).array()));
    const double k = cohen_kappa(a, b);
    CHECK(std::abs(k - naive_kappa(a, b)) <= 1e-12);
    CHECK(k >= -1.0);
    CHECK(k <= 1.0);
    CHECK(k == cohen_kappa(b, a));
    CHECK(k == cohen_kappa(a.complement(), b.complement()));
  }
}

TEST_CASE("lesion mean kappa averages every pair") {
  Rng rng(42);
  const BinaryMask a = noise_mask(rng, 20, 20, 0.4);
  const BinaryMask b = noise_mask(rng, 20, 20, 0.5);
  const BinaryMask c = noise_mask(rng, 20, 20, 0.6);
  const ConditioningSpec original{};

  const auto two = lesion_mean_kappa(group_of("L", {a, b}), original);
  REQUIRE(two);
  CHECK(two->n_pairs == 1);
  CHECK(two->mean_kappa == cohen_kappa(a, b));

  const auto same = lesion_mean_kappa(group_of("L", {a, a, a}), original);
  REQUIRE(same);
  CHECK(same->n_pairs == 3);
  CHECK(same->mean_kappa == 1.0);

  const auto three = lesion_mean_kappa(group_of("L", {a, b, c}), original);
  REQUIRE(three);
  const double oracle = (naive_kappa(a, b) + naive_kappa(a, c) + naive_kappa(b, c)) / 3.0;
  CHECK(std::abs(three->mean_kappa - oracle) <= 1e-12);
  CHECK(three->n_pairs == 3);

  CHECK_FALSE(lesion_mean_kappa(group_of("single", {a}), original).has_value());
}

TEST_CASE("dataset agreements are sorted and skip single-mask groups") {
  Rng rng(43);
  auto m = [&] { return noise_mask(rng, 8, 8, 0.5); };
  std::vector<LesionGroup> groups = {group_of("c", {m(), m()}), group_of("a", {m(), m(), m()}),
                                     group_of("solo", {m()}), group_of("b", {m(), m()})};
  const auto recs = dataset_agreements(groups, {});
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].lesion_id == "a");
  CHECK(recs[1].lesion_id == "b");
  CHECK(recs[2].lesion_id == "c");

  std::reverse(groups.begin(), groups.end());
  CHECK(dataset_agreements(groups, {}) == recs);

  CHECK(dataset_agreements({group_of("x", {m()}), group_of("y", {m()})}, {}).empty());
}
