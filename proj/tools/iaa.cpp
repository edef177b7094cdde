// Command-line front end: analyze | condition | kappa | summary.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "iaa/commands.hpp"
#include "iaa/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Inter-annotator agreement analysis for binary lesion segmentation masks"};
  app.set_version_flag("--version", std::string(iaa::kToolVersion));
  app.require_subcommand(1);

  iaa::RunConfig run;
  std::string conditionings = "all";
  std::string formats = "csv,json,svg";
  auto* analyze = app.add_subcommand("analyze", "Agreement distributions under every conditioning");
  analyze->add_option("--input", run.input, "Dataset directory or manifest CSV")->required();
  analyze->add_option("--out", run.output_dir, "Output directory")->required();
  analyze->add_option("--conditionings", conditionings, "Comma-separated kinds, or 'all'")
      ->capture_default_str();
  analyze->add_option("--se-side", run.se_side, "Square structuring element side (odd)")
      ->capture_default_str();
  analyze->add_option("--bins", run.bins, "Histogram bins over [-1, 1]")->capture_default_str();
  analyze->add_option("--formats", formats, "Comma-separated subset of csv,json,svg")
      ->capture_default_str();
  analyze->add_option("--jitter-seed", run.jitter_seed, "Seed for strip-plot jitter")
      ->capture_default_str();
  analyze->add_option("--threads", run.threads, "Worker threads (0 = auto)")->capture_default_str();

  std::string cond_input;
  std::string cond_kind;
  std::string cond_out;
  int cond_se = 5;
  auto* condition = app.add_subcommand("condition", "Write conditioned copies of masks");
  condition->add_option("--input", cond_input, "PNG mask, directory of PNGs, or manifest CSV")
      ->required();
  condition->add_option("--kind", cond_kind, "Conditioning kind")->required();
  condition->add_option("--se-side", cond_se, "Square structuring element side (odd)")
      ->capture_default_str();
  condition->add_option("--out", cond_out, "Output directory")->required();

  std::string kappa_a;
  std::string kappa_b;
  auto* kappa = app.add_subcommand("kappa", "Cohen's kappa between two mask files");
  kappa->add_option("mask_a", kappa_a)->required();
  kappa->add_option("mask_b", kappa_b)->required();

  std::string summary_input;
  auto* summary = app.add_subcommand("summary", "Annotation counts per lesion");
  summary->add_option("--input", summary_input, "Dataset directory or manifest CSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : iaa::kExitUsage;
  }

  if (*analyze) {
    try {
      run.conditionings = iaa::parse_conditioning_list(conditionings);
      run.formats = iaa::parse_format_list(formats);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return iaa::kExitUsage;
    }
    return iaa::cmd_analyze(run, std::cout, std::cerr);
  }
  if (*condition) return iaa::cmd_condition(cond_input, cond_kind, cond_se, cond_out, std::cout, std::cerr);
  if (*kappa) return iaa::cmd_kappa(kappa_a, kappa_b, std::cout, std::cerr);
  return iaa::cmd_summary(summary_input, std::cout, std::cerr);
}
