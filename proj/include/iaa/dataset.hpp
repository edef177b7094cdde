#pragma once

#include <string>
#include <vector>

#include "iaa/mask.hpp"

namespace iaa {

/// A lesion and the files holding its annotations, before decoding.
struct LesionSource {
  std::string lesion_id;
  std::vector<std::string> paths;  // sorted

  friend bool operator==(const LesionSource&, const LesionSource&) = default;
};

/// A group that could not be loaded (unreadable file, malformed PNG, or
/// masks of differing dimensions). The group is excluded from analysis.
struct GroupDiagnostic {
  std::string lesion_id;
  std::string message;
};

struct IngestResult {
  std::vector<LesionGroup> groups;
  std::vector<GroupDiagnostic> rejected;
};

/// Name of the manifest picked up automatically inside a dataset directory.
inline constexpr const char* kManifestName = "manifest.csv";

/// Lists lesions without decoding any pixels.
///
/// `source` is either a manifest CSV (header `lesion_id,mask_path`, paths
/// relative to the manifest's directory) or a directory. A directory holding
/// `manifest.csv` is read through the manifest; otherwise every
/// `<lesion_id>_segmentation*.png` file is grouped by the text before the
/// first `_segmentation`. Lesions come back sorted by id, paths sorted within.
///
/// Throws IoError for a missing source or malformed manifest, and Error if
/// nothing was found (unless allow_empty).
std::vector<LesionSource> scan_dataset(const std::string& source, bool allow_empty = false);

/// Decodes every mask of one lesion. Throws DecodeError / DimensionError /
/// IoError; the message names the offending paths.
LesionGroup load_group(const LesionSource& source);

/// scan_dataset + load_group for every lesion. Per-group failures are
/// collected in `rejected` instead of aborting.
IngestResult ingest_dataset(const std::string& source);

DatasetSummary summarize_sources(const std::vector<LesionSource>& sources);

}  // namespace iaa
