#pragma once

#include <cstdint>
#include <vector>

#include "iaa/conditioning.hpp"
#include "iaa/dataset.hpp"
#include "iaa/report.hpp"

namespace iaa {

struct AnalysisConfig {
  std::vector<ConditioningKind> conditionings{kAllConditionings.begin(), kAllConditionings.end()};
  int se_side = StructuringElement::kDefaultSide;
  int bins = 40;
  std::uint64_t jitter_seed = 0;
  /// Worker threads; 0 picks hardware concurrency. Never affects results.
  unsigned threads = 0;
};

struct AnalysisOutcome {
  AnalysisReport report;
  /// Groups that failed to load, in lesion_id order.
  std::vector<GroupDiagnostic> rejected;
};

/// Agreement records of one group for every requested conditioning; empty
/// for groups with fewer than two masks.
std::vector<AgreementRecord> group_agreements(const LesionGroup& group,
                                              const std::vector<ConditioningKind>& conditionings,
                                              StructuringElement se);

/// Loads and analyzes every lesion with two or more annotation files. Groups
/// are processed in parallel; output order depends only on lesion ids.
/// Throws Error when no eligible lesion could be analyzed.
AnalysisOutcome analyze_sources(const std::vector<LesionSource>& sources,
                                const AnalysisConfig& config);

/// Same pipeline over groups already in memory.
AnalysisReport analyze_groups(const std::vector<LesionGroup>& groups, const AnalysisConfig& config);

}  // namespace iaa
