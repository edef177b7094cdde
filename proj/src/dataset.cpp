#include "iaa/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>

#include "iaa/png_io.hpp"

namespace fs = std::filesystem;

namespace iaa {

namespace {

constexpr std::string_view kSegmentationTag = "_segmentation";

std::string trim(std::string s) {
  const auto not_space = [](unsigned char ch) { return !std::isspace(ch); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string unquote(std::string s) {
  s = trim(std::move(s));
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    s = s.substr(1, s.size() - 2);
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      out += s[i];
      if (s[i] == '"' && i + 1 < s.size() && s[i + 1] == '"') ++i;
    }
    return out;
  }
  return s;
}

// Splits a CSV line into two fields, honoring double quotes.
bool split_two(const std::string& line, std::string& first, std::string& second) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == ',' && !quoted) {
      first = unquote(line.substr(0, i));
      second = unquote(line.substr(i + 1));
      return true;
    }
  }
  return false;
}

std::map<std::string, std::vector<std::string>> read_manifest(const fs::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw IoError("cannot open manifest " + manifest.string());
  const fs::path base = manifest.parent_path();

  std::map<std::string, std::vector<std::string>> groups;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    std::string id;
    std::string path;
    if (!split_two(line, id, path)) {
      throw IoError(manifest.string() + ":" + std::to_string(line_no) + ": expected two fields");
    }
    if (!header_seen) {
      if (id != "lesion_id" || path != "mask_path") {
        throw IoError(manifest.string() + ": header must be 'lesion_id,mask_path'");
      }
      header_seen = true;
      continue;
    }
    if (id.empty()) {
      throw IoError(manifest.string() + ":" + std::to_string(line_no) + ": empty lesion_id");
    }
    fs::path p(path);
    if (p.is_relative()) p = base / p;
    groups[id].push_back(p.lexically_normal().string());
  }
  if (!header_seen) throw IoError(manifest.string() + ": missing header");
  return groups;
}

std::map<std::string, std::vector<std::string>> read_directory(const fs::path& dir) {
  std::map<std::string, std::vector<std::string>> groups;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (entry.path().extension() != ".png") continue;
    const std::size_t tag = name.find(kSegmentationTag);
    if (tag == std::string::npos || tag == 0) continue;
    groups[name.substr(0, tag)].push_back(entry.path().string());
  }
  return groups;
}

}  // namespace

std::vector<LesionSource> scan_dataset(const std::string& source, bool allow_empty) {
  const fs::path src(source);
  std::error_code ec;
  if (!fs::exists(src, ec)) throw IoError("input not found: " + source);

  std::map<std::string, std::vector<std::string>> groups;
  if (fs::is_directory(src)) {
    const fs::path manifest = src / kManifestName;
    groups = fs::is_regular_file(manifest) ? read_manifest(manifest) : read_directory(src);
  } else {
    groups = read_manifest(src);
  }

  std::vector<LesionSource> out;
  out.reserve(groups.size());
  for (auto& [id, paths] : groups) {
    std::sort(paths.begin(), paths.end());
    out.push_back({id, std::move(paths)});
  }
  if (out.empty() && !allow_empty) throw Error("no lesion masks found in " + source);
  return out;
}

LesionGroup load_group(const LesionSource& source) {
  LesionGroup group;
  group.lesion_id = source.lesion_id;
  group.paths = source.paths;
  group.masks.reserve(source.paths.size());
  for (const std::string& path : source.paths) {
    group.masks.push_back(read_mask(path));
  }
  validate_group(group);
  return group;
}

IngestResult ingest_dataset(const std::string& source) {
  IngestResult result;
  for (const LesionSource& s : scan_dataset(source)) {
    try {
      result.groups.push_back(load_group(s));
    } catch (const Error& e) {
      result.rejected.push_back({s.lesion_id, e.what()});
    }
  }
  return result;
}

DatasetSummary summarize_sources(const std::vector<LesionSource>& sources) {
  std::vector<std::size_t> counts;
  counts.reserve(sources.size());
  for (const LesionSource& s : sources) counts.push_back(s.paths.size());
  return summarize_counts(counts);
}

}  // namespace iaa
