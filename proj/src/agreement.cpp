#include "iaa/agreement.hpp"

#include <algorithm>

namespace iaa {

ConfusionCounts confusion_counts(const BinaryMask& first, const BinaryMask& second) {
  if (!first.same_shape(second)) {
    throw DimensionError("cannot compare a " + std::to_string(first.cols()) + "x" +
                         std::to_string(first.rows()) + " mask with a " +
                         std::to_string(second.cols()) + "x" + std::to_string(second.rows()) +
                         " mask");
  }
  const MaskArray& x = first.array();
  const MaskArray& y = second.array();
  ConfusionCounts t;
  t.both = (x && y).count();
  const std::int64_t fg_first = x.count();
  const std::int64_t fg_second = y.count();
  t.first_only = fg_first - t.both;
  t.second_only = fg_second - t.both;
  t.neither = first.size() - t.both - t.first_only - t.second_only;
  return t;
}

double cohen_kappa(const ConfusionCounts& t) {
  const std::int64_t n = t.total();
  if (n <= 0) throw DimensionError("cohen_kappa needs at least one pixel");

  // Scaled by N^2: kappa = (N (a + d) - E) / (N^2 - E), with
  // E = (a + b)(a + c) + (c + d)(b + d). Integers up to 2^64 are exact in long double.
  using Wide = long double;
  const Wide a = t.both;
  const Wide b = t.first_only;
  const Wide c = t.second_only;
  const Wide d = t.neither;
  const Wide nn = static_cast<Wide>(n);
  const Wide chance = (a + b) * (a + c) + (c + d) * (b + d);
  const Wide denom = nn * nn - chance;
  if (denom == 0) return 1.0;
  const Wide kappa = (nn * (a + d) - chance) / denom;
  return static_cast<double>(std::clamp<Wide>(kappa, -1, 1));
}

double cohen_kappa(const BinaryMask& first, const BinaryMask& second) {
  return cohen_kappa(confusion_counts(first, second));
}

double mean_pairwise_kappa(const std::vector<BinaryMask>& masks, std::int64_t* n_pairs) {
  double sum = 0.0;
  std::int64_t pairs = 0;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      sum += cohen_kappa(masks[i], masks[j]);
      ++pairs;
    }
  }
  if (n_pairs != nullptr) *n_pairs = pairs;
  return pairs > 0 ? sum / static_cast<double>(pairs) : 0.0;
}

std::optional<AgreementRecord> lesion_mean_kappa(const LesionGroup& group,
                                                 const ConditioningSpec& spec) {
  if (group.masks.size() < 2) return std::nullopt;
  std::vector<BinaryMask> conditioned;
  conditioned.reserve(group.masks.size());
  for (const BinaryMask& m : group.masks) conditioned.push_back(apply(spec, m));

  AgreementRecord rec;
  rec.lesion_id = group.lesion_id;
  rec.conditioning = spec.kind;
  rec.mean_kappa = mean_pairwise_kappa(conditioned, &rec.n_pairs);
  return rec;
}

std::vector<AgreementRecord> dataset_agreements(const std::vector<LesionGroup>& groups,
                                                const ConditioningSpec& spec) {
  std::vector<AgreementRecord> out;
  for (const LesionGroup& g : groups) {
    if (auto rec = lesion_mean_kappa(g, spec)) out.push_back(std::move(*rec));
  }
  std::sort(out.begin(), out.end(),
            [](const AgreementRecord& x, const AgreementRecord& y) { return x.lesion_id < y.lesion_id; });
  return out;
}

}  // namespace iaa
