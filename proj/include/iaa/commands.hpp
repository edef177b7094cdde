#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "iaa/conditioning.hpp"

namespace iaa {

/// Process exit statuses of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitUsage = 2,
  /// Finished, but some lesion groups were rejected and excluded.
  kExitPartial = 3,
};

enum class OutputFormat { kCsv, kJson, kSvg };

struct RunConfig {
  std::string input;
  std::string output_dir;
  std::vector<ConditioningKind> conditionings{kAllConditionings.begin(), kAllConditionings.end()};
  int se_side = 5;
  int bins = 40;
  std::vector<OutputFormat> formats{OutputFormat::kCsv, OutputFormat::kJson, OutputFormat::kSvg};
  std::uint64_t jitter_seed = 0;
  unsigned threads = 0;
};

/// Parses a comma-separated conditioning list ("all" selects every kind).
/// Throws std::invalid_argument naming the first unknown entry.
std::vector<ConditioningKind> parse_conditioning_list(const std::string& text);
std::vector<OutputFormat> parse_format_list(const std::string& text);

/// Full pipeline. Writes per_lesion.csv, percentiles.csv, ks.csv, report.json,
/// distributions.svg and strips.svg (per requested format) into output_dir.
int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Writes `<stem>_<kind>.png` into out_dir for every mask of `input` (a PNG
/// file, a directory of PNGs, or a manifest CSV).
int cmd_condition(const std::string& input, const std::string& kind, int se_side,
                  const std::string& out_dir, std::ostream& out, std::ostream& err);

/// Prints the kappa of two mask files with six decimals.
int cmd_kappa(const std::string& path_a, const std::string& path_b, std::ostream& out,
              std::ostream& err);

/// Prints the annotation-count table of a dataset.
int cmd_summary(const std::string& input, std::ostream& out, std::ostream& err);

}  // namespace iaa
