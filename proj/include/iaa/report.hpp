#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iaa/agreement.hpp"
#include "iaa/conditioning.hpp"
#include "iaa/mask.hpp"
#include "iaa/stats.hpp"

namespace iaa {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kJitterRng = "std::mt19937_64, u = (x >> 11) * 2^-53";

struct ReportMetadata {
  std::string tool_version = kToolVersion;
  int se_side = 5;
  int bins = 40;
  int kde_points = 512;
  std::string bandwidth_rule = kBandwidthRule;
  std::string quantile_rule = kQuantileRule;
  std::string ks_method = kKsMethod;
  std::string jitter_rng = kJitterRng;
  std::uint64_t jitter_seed = 0;
  DatasetSummary dataset;
  /// Lesions excluded at load time, sorted.
  std::vector<std::string> rejected_lesions;

  friend bool operator==(const ReportMetadata&, const ReportMetadata&) = default;
};

/// K-S comparison of two conditionings; `first` sorts before `second` by name.
struct KsEntry {
  ConditioningKind first = ConditioningKind::kOriginal;
  ConditioningKind second = ConditioningKind::kOriginal;
  KsResult result;

  friend bool operator==(const KsEntry&, const KsEntry&) = default;
};

struct AnalysisReport {
  /// Conditionings analyzed, in canonical order.
  std::vector<ConditioningKind> conditionings;
  /// Sorted by (lesion_id, conditioning name).
  std::vector<AgreementRecord> per_lesion;
  std::map<ConditioningKind, DistributionSummary> summaries;
  /// Every unordered pair of conditionings once, sorted by (first, second) name.
  std::vector<KsEntry> ks;
  ReportMetadata metadata;

  /// Mean kappas of one conditioning in lesion_id order.
  std::vector<double> sample(ConditioningKind kind) const;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Assembles summaries and the K-S matrix from per-lesion records. Throws
/// Error when some conditioning has no records.
AnalysisReport build_report(std::vector<ConditioningKind> conditionings,
                            std::vector<AgreementRecord> records, ReportMetadata metadata);

/// Six-decimal fixed notation shared by every CSV writer and the CLI.
std::string format_fixed6(double value);

// CSV ---------------------------------------------------------------------

std::string per_lesion_csv(const AnalysisReport& report);
std::string percentiles_csv(const AnalysisReport& report);
std::string ks_csv(const AnalysisReport& report);

/// Writes per_lesion.csv, percentiles.csv and ks.csv into `dir`.
void write_csv(const AnalysisReport& report, const std::string& dir);

// JSON --------------------------------------------------------------------

/// Keys sorted, doubles printed with round-trip precision.
std::string report_to_json(const AnalysisReport& report);
AnalysisReport report_from_json(std::string_view text);
void write_json(const AnalysisReport& report, const std::string& path);

// SVG ---------------------------------------------------------------------

/// Overlaid normalized histograms (translucent) and KDE polylines per
/// conditioning on a shared [-1, 1] axis. Throws Error when there is nothing to plot.
std::string distributions_svg(const AnalysisReport& report);
void plot_distributions(const AnalysisReport& report, const std::string& path);

/// Geometry of the strip plot's kappa axis, exposed so callers can map
/// between plot coordinates and kappa values.
struct StripAxis {
  double top = 40.0;      // y of kappa = +1
  double bottom = 460.0;  // y of kappa = -1
  double to_y(double kappa) const { return bottom - (kappa + 1.0) / 2.0 * (bottom - top); }
  double to_kappa(double y) const { return (bottom - y) / (bottom - top) * 2.0 - 1.0; }
};

/// One column per conditioning: jittered sample dots, a symmetric KDE outline
/// (violin) and a mean marker. Jitter comes from `jitter_seed`.
std::string strips_svg(const AnalysisReport& report, std::uint64_t jitter_seed);
void plot_strips(const AnalysisReport& report, std::uint64_t jitter_seed, const std::string& path);

// Ranking -----------------------------------------------------------------

enum class Direction { kAscending, kDescending };

/// Lesions ordered by mean kappa, ties broken by lesion_id (reversed as a
/// whole for descending). Throws std::invalid_argument if the conditioning
/// was not analyzed.
std::vector<std::pair<std::string, double>> rank_lesions(const AnalysisReport& report,
                                                         ConditioningKind kind,
                                                         Direction direction);

/// Up to `per_band` lesions from each kappa band [edges[i], edges[i+1]) (the
/// last band closed), picked from an ascending ranking, lowest first.
std::vector<std::vector<std::pair<std::string, double>>> exemplars_by_band(
    const std::vector<std::pair<std::string, double>>& ascending, const std::vector<double>& edges,
    std::size_t per_band);

}  // namespace iaa
