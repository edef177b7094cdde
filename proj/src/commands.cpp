#include "iaa/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "iaa/agreement.hpp"
#include "iaa/analysis.hpp"
#include "iaa/dataset.hpp"
#include "iaa/png_io.hpp"
#include "iaa/report.hpp"

namespace fs = std::filesystem;

namespace iaa {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

bool wants(const RunConfig& config, OutputFormat f) {
  return std::find(config.formats.begin(), config.formats.end(), f) != config.formats.end();
}

// Mask files addressed by a `condition` input, sorted.
std::vector<std::string> condition_inputs(const std::string& input) {
  const fs::path p(input);
  if (fs::is_directory(p) && !fs::is_regular_file(p / kManifestName)) {
    std::vector<std::string> files;
    for (const fs::directory_entry& e : fs::directory_iterator(p)) {
      if (e.is_regular_file() && e.path().extension() == ".png") files.push_back(e.path().string());
    }
    std::sort(files.begin(), files.end());
    return files;
  }
  if (fs::is_regular_file(p) && p.extension() == ".png") return {input};
  std::vector<std::string> files;
  for (const LesionSource& s : scan_dataset(input)) {
    files.insert(files.end(), s.paths.begin(), s.paths.end());
  }
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

std::vector<ConditioningKind> parse_conditioning_list(const std::string& text) {
  std::vector<ConditioningKind> kinds;
  for (const std::string& name : split_list(text)) {
    if (name == "all") {
      kinds.insert(kinds.end(), kAllConditionings.begin(), kAllConditionings.end());
      continue;
    }
    const auto k = parse_conditioning(name);
    if (!k) throw std::invalid_argument("unknown conditioning '" + name + "'");
    kinds.push_back(*k);
  }
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
  if (kinds.empty()) throw std::invalid_argument("no conditioning selected");
  return kinds;
}

std::vector<OutputFormat> parse_format_list(const std::string& text) {
  std::vector<OutputFormat> formats;
  for (const std::string& name : split_list(text)) {
    if (name == "csv") {
      formats.push_back(OutputFormat::kCsv);
    } else if (name == "json") {
      formats.push_back(OutputFormat::kJson);
    } else if (name == "svg") {
      formats.push_back(OutputFormat::kSvg);
    } else {
      throw std::invalid_argument("unknown format '" + name + "' (expected csv, json or svg)");
    }
  }
  if (formats.empty()) throw std::invalid_argument("no output format selected");
  return formats;
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.conditionings.empty()) {
    err << "error: no conditioning selected\n";
    return kExitUsage;
  }
  if (config.se_side < 1 || config.se_side % 2 == 0) {
    err << "error: --se-side must be odd and >= 1\n";
    return kExitUsage;
  }
  if (config.bins < 1) {
    err << "error: --bins must be >= 1\n";
    return kExitUsage;
  }

  AnalysisOutcome outcome;
  try {
    const std::vector<LesionSource> sources = scan_dataset(config.input);
    AnalysisConfig ac;
    ac.conditionings = config.conditionings;
    ac.se_side = config.se_side;
    ac.bins = config.bins;
    ac.jitter_seed = config.jitter_seed;
    ac.threads = config.threads;
    outcome = analyze_sources(sources, ac);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  for (const GroupDiagnostic& d : outcome.rejected) {
    err << "warning: rejected lesion " << d.lesion_id << ": " << d.message << "\n";
  }

  const AnalysisReport& report = outcome.report;
  try {
    fs::create_directories(config.output_dir);
    const fs::path dir(config.output_dir);
    if (wants(config, OutputFormat::kCsv)) write_csv(report, dir.string());
    if (wants(config, OutputFormat::kJson)) write_json(report, (dir / "report.json").string());
    if (wants(config, OutputFormat::kSvg)) {
      plot_distributions(report, (dir / "distributions.svg").string());
      plot_strips(report, config.jitter_seed, (dir / "strips.svg").string());
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }

  const std::size_t analyzed = report.summaries.begin()->second.n;
  out << "analyzed " << analyzed << " lesions, " << report.conditionings.size()
      << " conditionings -> " << config.output_dir << "\n";
  return outcome.rejected.empty() ? kExitOk : kExitPartial;
}

int cmd_condition(const std::string& input, const std::string& kind, int se_side,
                  const std::string& out_dir, std::ostream& out, std::ostream& err) {
  const auto parsed = parse_conditioning(kind);
  if (!parsed) {
    err << "error: unknown conditioning '" << kind << "'\n";
    return kExitUsage;
  }
  if (se_side < 1 || se_side % 2 == 0) {
    err << "error: --se-side must be odd and >= 1\n";
    return kExitUsage;
  }
  const ConditioningSpec spec{*parsed, StructuringElement(se_side)};

  std::vector<std::string> files;
  try {
    files = condition_inputs(input);
    fs::create_directories(out_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  if (files.empty()) {
    err << "error: no PNG masks found in " << input << "\n";
    return kExitError;
  }

  int status = kExitOk;
  std::size_t written = 0;
  for (const std::string& file : files) {
    try {
      const fs::path src(file);
      const fs::path dst = fs::path(out_dir) / (src.stem().string() + "_" + kind + ".png");
      write_mask(dst.string(), apply(spec, read_mask(file)));
      ++written;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      status = kExitError;
    }
  }
  out << "wrote " << written << " " << kind << " masks to " << out_dir << "\n";
  return status;
}

int cmd_kappa(const std::string& path_a, const std::string& path_b, std::ostream& out,
              std::ostream& err) {
  try {
    out << format_fixed6(cohen_kappa(read_mask(path_a), read_mask(path_b))) << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_summary(const std::string& input, std::ostream& out, std::ostream& err) {
  DatasetSummary s;
  try {
    s = summarize_sources(scan_dataset(input, /*allow_empty=*/true));
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  out << "annotations,lesions\n"
      << "1," << s.one << "\n"
      << "2," << s.two << "\n"
      << "3," << s.three << "\n"
      << "4+," << s.four_plus << "\n"
      << "total," << s.total << "\n";
  return kExitOk;
}

}  // namespace iaa
