#include "iaa/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

namespace iaa {

namespace {

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Runs job(i) for i in [0, count) on `threads` workers. Each job writes only
// its own slot, so no synchronization beyond the index counter is needed.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& job) {
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) job(i);
  };
  if (threads <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
}

ReportMetadata make_metadata(const AnalysisConfig& config, const DatasetSummary& dataset) {
  ReportMetadata m;
  m.se_side = config.se_side;
  m.bins = config.bins;
  m.jitter_seed = config.jitter_seed;
  m.dataset = dataset;
  return m;
}

}  // namespace

std::vector<AgreementRecord> group_agreements(const LesionGroup& group,
                                              const std::vector<ConditioningKind>& conditionings,
                                              StructuringElement se) {
  std::vector<AgreementRecord> out;
  if (group.masks.size() < 2) return out;
  validate_group(group);
  for (ConditioningKind kind : conditionings) {
    if (auto rec = lesion_mean_kappa(group, {kind, se})) out.push_back(std::move(*rec));
  }
  return out;
}

AnalysisOutcome analyze_sources(const std::vector<LesionSource>& sources,
                                const AnalysisConfig& config) {
  const StructuringElement se(config.se_side);
  std::vector<const LesionSource*> eligible;
  for (const LesionSource& s : sources) {
    if (s.paths.size() >= 2) eligible.push_back(&s);
  }
  std::sort(eligible.begin(), eligible.end(),
            [](const LesionSource* a, const LesionSource* b) { return a->lesion_id < b->lesion_id; });

  std::vector<std::vector<AgreementRecord>> results(eligible.size());
  std::vector<std::optional<std::string>> failures(eligible.size());
  parallel_for(eligible.size(), worker_count(config.threads, eligible.size()), [&](std::size_t i) {
    try {
      results[i] = group_agreements(load_group(*eligible[i]), config.conditionings, se);
    } catch (const Error& e) {
      failures[i] = e.what();
    }
  });

  AnalysisOutcome outcome;
  std::vector<AgreementRecord> records;
  ReportMetadata meta = make_metadata(config, summarize_sources(sources));
  for (std::size_t i = 0; i < eligible.size(); ++i) {
    if (failures[i]) {
      outcome.rejected.push_back({eligible[i]->lesion_id, *failures[i]});
      meta.rejected_lesions.push_back(eligible[i]->lesion_id);
    } else {
      std::move(results[i].begin(), results[i].end(), std::back_inserter(records));
    }
  }
  if (records.empty()) {
    throw Error("no eligible lesion group (two or more valid masks) to analyze");
  }
  outcome.report = build_report(config.conditionings, std::move(records), std::move(meta));
  return outcome;
}

AnalysisReport analyze_groups(const std::vector<LesionGroup>& groups, const AnalysisConfig& config) {
  const StructuringElement se(config.se_side);
  for (const LesionGroup& g : groups) validate_group(g);
  std::vector<std::vector<AgreementRecord>> results(groups.size());
  parallel_for(groups.size(), worker_count(config.threads, groups.size()), [&](std::size_t i) {
    results[i] = group_agreements(groups[i], config.conditionings, se);
  });
  std::vector<AgreementRecord> records;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(records));
  if (records.empty()) {
    throw Error("no eligible lesion group (two or more valid masks) to analyze");
  }
  return build_report(config.conditionings, std::move(records),
                      make_metadata(config, summarize_dataset(groups)));
}

}  // namespace iaa
