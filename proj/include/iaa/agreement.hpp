#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iaa/conditioning.hpp"
#include "iaa/mask.hpp"

namespace iaa {

/// 2x2 contingency table of two binary annotations over the same pixels.
struct ConfusionCounts {
  std::int64_t both = 0;        // foreground in both
  std::int64_t first_only = 0;  // foreground in the first mask only
  std::int64_t second_only = 0; // foreground in the second mask only
  std::int64_t neither = 0;     // background in both

  std::int64_t total() const { return both + first_only + second_only + neither; }
};

/// Throws DimensionError when the masks differ in shape.
ConfusionCounts confusion_counts(const BinaryMask& first, const BinaryMask& second);

/// Cohen's kappa (p_o - p_e) / (1 - p_e) from a contingency table.
///
/// When chance agreement is total (p_e = 1, both masks constant and equal) the
/// score is defined as 1. Throws DimensionError for an empty table.
double cohen_kappa(const ConfusionCounts& counts);
double cohen_kappa(const BinaryMask& first, const BinaryMask& second);

struct AgreementRecord {
  std::string lesion_id;
  ConditioningKind conditioning = ConditioningKind::kOriginal;
  double mean_kappa = 0.0;
  std::int64_t n_pairs = 0;

  friend bool operator==(const AgreementRecord&, const AgreementRecord&) = default;
};

/// Mean kappa over all unordered mask pairs after conditioning every mask.
/// Returns nullopt for groups with fewer than two masks.
std::optional<AgreementRecord> lesion_mean_kappa(const LesionGroup& group,
                                                 const ConditioningSpec& spec);

/// Mean pairwise kappa of already-conditioned masks.
double mean_pairwise_kappa(const std::vector<BinaryMask>& masks, std::int64_t* n_pairs = nullptr);

/// One record per group with two or more masks, sorted by lesion id.
std::vector<AgreementRecord> dataset_agreements(const std::vector<LesionGroup>& groups,
                                                const ConditioningSpec& spec);

}  // namespace iaa
