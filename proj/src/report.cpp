#include "iaa/report.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "iaa/png_io.hpp"

namespace iaa {

using nlohmann::json;

namespace {

std::string name_of(ConditioningKind k) { return std::string(to_string(k)); }

ConditioningKind kind_of(const std::string& name) {
  const auto k = parse_conditioning(name);
  if (!k) throw Error("unknown conditioning '" + name + "'");
  return *k;
}

void write_text(const std::string& path, const std::string& text) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace

std::vector<double> AnalysisReport::sample(ConditioningKind kind) const {
  std::vector<double> out;
  for (const AgreementRecord& r : per_lesion) {
    if (r.conditioning == kind) out.push_back(r.mean_kappa);
  }
  return out;
}

AnalysisReport build_report(std::vector<ConditioningKind> conditionings,
                            std::vector<AgreementRecord> records, ReportMetadata metadata) {
  std::sort(conditionings.begin(), conditionings.end());
  conditionings.erase(std::unique(conditionings.begin(), conditionings.end()), conditionings.end());
  if (conditionings.empty()) throw Error("no conditionings selected");

  AnalysisReport report;
  report.conditionings = std::move(conditionings);
  report.metadata = std::move(metadata);
  std::sort(report.metadata.rejected_lesions.begin(), report.metadata.rejected_lesions.end());

  std::sort(records.begin(), records.end(), [](const AgreementRecord& a, const AgreementRecord& b) {
    if (a.lesion_id != b.lesion_id) return a.lesion_id < b.lesion_id;
    return to_string(a.conditioning) < to_string(b.conditioning);
  });
  report.per_lesion = std::move(records);

  SummaryOptions opts;
  opts.bins = report.metadata.bins;
  opts.kde_points = report.metadata.kde_points;
  std::map<ConditioningKind, std::vector<double>> samples;
  for (ConditioningKind k : report.conditionings) {
    samples[k] = report.sample(k);
    if (samples[k].empty()) {
      throw Error("no agreement records for conditioning " + name_of(k));
    }
    report.summaries[k] = summarize(samples[k], opts);
  }
  for (const AgreementRecord& r : report.per_lesion) {
    if (!report.summaries.contains(r.conditioning)) {
      throw Error("record for unselected conditioning " + name_of(r.conditioning));
    }
  }

  const auto& ks = report.conditionings;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      ConditioningKind a = ks[i];
      ConditioningKind b = ks[j];
      if (to_string(b) < to_string(a)) std::swap(a, b);
      report.ks.push_back({a, b, ks_test(samples[a], samples[b])});
    }
  }
  std::sort(report.ks.begin(), report.ks.end(), [](const KsEntry& x, const KsEntry& y) {
    return std::pair(to_string(x.first), to_string(x.second)) <
           std::pair(to_string(y.first), to_string(y.second));
  });
  return report;
}

std::string format_fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

namespace {

// p-values reach far below 1e-6; six decimals in scientific notation keep them.
std::string format_sci6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", value);
  return buf;
}

}  // namespace

std::string per_lesion_csv(const AnalysisReport& report) {
  std::string out = "lesion_id,conditioning,mean_kappa,n_pairs\n";
  for (const AgreementRecord& r : report.per_lesion) {
    out += r.lesion_id + "," + name_of(r.conditioning) + "," + format_fixed6(r.mean_kappa) + "," +
           std::to_string(r.n_pairs) + "\n";
  }
  return out;
}

std::string percentiles_csv(const AnalysisReport& report) {
  std::vector<ConditioningKind> kinds = report.conditionings;
  std::sort(kinds.begin(), kinds.end(),
            [](ConditioningKind a, ConditioningKind b) { return to_string(a) < to_string(b); });
  std::string out = "conditioning,p25,p50,p75,p95,mean,n\n";
  for (ConditioningKind k : kinds) {
    const DistributionSummary& s = report.summaries.at(k);
    out += name_of(k);
    for (double q : s.quantiles) out += "," + format_fixed6(q);
    out += "," + format_fixed6(s.mean) + "," + std::to_string(s.n) + "\n";
  }
  return out;
}

std::string ks_csv(const AnalysisReport& report) {
  std::string out = "conditioning_a,conditioning_b,d,p_value\n";
  for (const KsEntry& e : report.ks) {
    out += name_of(e.first) + "," + name_of(e.second) + "," + format_fixed6(e.result.d_statistic) +
           "," + format_sci6(e.result.p_value) + "\n";
  }
  return out;
}

void write_csv(const AnalysisReport& report, const std::string& dir) {
  const std::filesystem::path base(dir);
  write_text((base / "per_lesion.csv").string(), per_lesion_csv(report));
  write_text((base / "percentiles.csv").string(), percentiles_csv(report));
  write_text((base / "ks.csv").string(), ks_csv(report));
}

// JSON ----------------------------------------------------------------------

namespace {

json summary_to_json(const DistributionSummary& s) {
  json q = json::object();
  for (std::size_t i = 0; i < kQuantileLevels.size(); ++i) {
    q["p" + std::to_string(static_cast<int>(kQuantileLevels[i] * 100 + 0.5))] = s.quantiles[i];
  }
  json hist = json::array();
  for (const HistogramBin& b : s.histogram) hist.push_back({b.left, b.right, b.density});
  json kde = json::array();
  for (const DensityPoint& p : s.kde) kde.push_back({p.x, p.density});
  return {{"n", s.n}, {"mean", s.mean},         {"quantiles", q},
          {"histogram", hist}, {"bandwidth", s.bandwidth}, {"kde", kde}};
}

DistributionSummary summary_from_json(const json& j) {
  DistributionSummary s;
  s.n = j.at("n").get<std::size_t>();
  s.mean = j.at("mean").get<double>();
  for (std::size_t i = 0; i < kQuantileLevels.size(); ++i) {
    s.quantiles[i] = j.at("quantiles")
                         .at("p" + std::to_string(static_cast<int>(kQuantileLevels[i] * 100 + 0.5)))
                         .get<double>();
  }
  for (const json& b : j.at("histogram")) {
    s.histogram.push_back({b.at(0).get<double>(), b.at(1).get<double>(), b.at(2).get<double>()});
  }
  s.bandwidth = j.at("bandwidth").get<double>();
  for (const json& p : j.at("kde")) s.kde.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
  return s;
}

json dataset_to_json(const DatasetSummary& d) {
  return {{"1", d.one}, {"2", d.two}, {"3", d.three}, {"4+", d.four_plus}, {"total", d.total}};
}

DatasetSummary dataset_from_json(const json& j) {
  DatasetSummary d;
  d.one = j.at("1").get<std::size_t>();
  d.two = j.at("2").get<std::size_t>();
  d.three = j.at("3").get<std::size_t>();
  d.four_plus = j.at("4+").get<std::size_t>();
  d.total = j.at("total").get<std::size_t>();
  return d;
}

}  // namespace

std::string report_to_json(const AnalysisReport& report) {
  json j;
  const ReportMetadata& m = report.metadata;
  j["metadata"] = {{"tool_version", m.tool_version},     {"se_side", m.se_side},
                   {"bins", m.bins},                     {"kde_points", m.kde_points},
                   {"bandwidth_rule", m.bandwidth_rule}, {"quantile_rule", m.quantile_rule},
                   {"ks_method", m.ks_method},           {"jitter_rng", m.jitter_rng},
                   {"jitter_seed", m.jitter_seed},       {"dataset", dataset_to_json(m.dataset)},
                   {"rejected_lesions", m.rejected_lesions}};

  json kinds = json::array();
  for (ConditioningKind k : report.conditionings) kinds.push_back(name_of(k));
  j["conditionings"] = kinds;

  json rows = json::array();
  for (const AgreementRecord& r : report.per_lesion) {
    rows.push_back({{"lesion_id", r.lesion_id},
                    {"conditioning", name_of(r.conditioning)},
                    {"mean_kappa", r.mean_kappa},
                    {"n_pairs", r.n_pairs}});
  }
  j["per_lesion"] = rows;

  json summaries = json::object();
  for (const auto& [k, s] : report.summaries) summaries[name_of(k)] = summary_to_json(s);
  j["summaries"] = summaries;

  json ks = json::array();
  for (const KsEntry& e : report.ks) {
    ks.push_back({{"conditioning_a", name_of(e.first)},
                  {"conditioning_b", name_of(e.second)},
                  {"d", e.result.d_statistic},
                  {"p_value", e.result.p_value},
                  {"n1", e.result.n1},
                  {"n2", e.result.n2}});
  }
  j["ks"] = ks;
  return j.dump(2) + "\n";
}

AnalysisReport report_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("invalid report JSON: ") + e.what());
  }
  try {
    AnalysisReport report;
    const json& m = j.at("metadata");
    ReportMetadata& meta = report.metadata;
    meta.tool_version = m.at("tool_version").get<std::string>();
    meta.se_side = m.at("se_side").get<int>();
    meta.bins = m.at("bins").get<int>();
    meta.kde_points = m.at("kde_points").get<int>();
    meta.bandwidth_rule = m.at("bandwidth_rule").get<std::string>();
    meta.quantile_rule = m.at("quantile_rule").get<std::string>();
    meta.ks_method = m.at("ks_method").get<std::string>();
    meta.jitter_rng = m.at("jitter_rng").get<std::string>();
    meta.jitter_seed = m.at("jitter_seed").get<std::uint64_t>();
    meta.dataset = dataset_from_json(m.at("dataset"));
    meta.rejected_lesions = m.at("rejected_lesions").get<std::vector<std::string>>();

    for (const json& k : j.at("conditionings")) {
      report.conditionings.push_back(kind_of(k.get<std::string>()));
    }
    for (const json& r : j.at("per_lesion")) {
      AgreementRecord rec;
      rec.lesion_id = r.at("lesion_id").get<std::string>();
      rec.conditioning = kind_of(r.at("conditioning").get<std::string>());
      rec.mean_kappa = r.at("mean_kappa").get<double>();
      rec.n_pairs = r.at("n_pairs").get<std::int64_t>();
      report.per_lesion.push_back(std::move(rec));
    }
    for (const auto& [name, s] : j.at("summaries").items()) {
      report.summaries[kind_of(name)] = summary_from_json(s);
    }
    for (const json& e : j.at("ks")) {
      KsEntry entry;
      entry.first = kind_of(e.at("conditioning_a").get<std::string>());
      entry.second = kind_of(e.at("conditioning_b").get<std::string>());
      entry.result.d_statistic = e.at("d").get<double>();
      entry.result.p_value = e.at("p_value").get<double>();
      entry.result.n1 = e.at("n1").get<std::size_t>();
      entry.result.n2 = e.at("n2").get<std::size_t>();
      report.ks.push_back(entry);
    }
    return report;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report JSON: ") + e.what());
  }
}

void write_json(const AnalysisReport& report, const std::string& path) {
  write_text(path, report_to_json(report));
}

// Ranking -------------------------------------------------------------------

std::vector<std::pair<std::string, double>> rank_lesions(const AnalysisReport& report,
                                                         ConditioningKind kind,
                                                         Direction direction) {
  if (std::find(report.conditionings.begin(), report.conditionings.end(), kind) ==
      report.conditionings.end()) {
    throw std::invalid_argument("conditioning " + name_of(kind) + " is not in the report");
  }
  std::vector<std::pair<std::string, double>> out;
  for (const AgreementRecord& r : report.per_lesion) {
    if (r.conditioning == kind) out.emplace_back(r.lesion_id, r.mean_kappa);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second < b.second : a.first < b.first;
  });
  if (direction == Direction::kDescending) std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::pair<std::string, double>>> exemplars_by_band(
    const std::vector<std::pair<std::string, double>>& ascending, const std::vector<double>& edges,
    std::size_t per_band) {
  if (edges.size() < 2) throw std::invalid_argument("exemplars_by_band: need at least two edges");
  std::vector<std::vector<std::pair<std::string, double>>> bands(edges.size() - 1);
  for (const auto& entry : ascending) {
    for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
      const bool last = b + 2 == edges.size();
      const double v = entry.second;
      if (v >= edges[b] && (v < edges[b + 1] || (last && v == edges[b + 1]))) {
        if (bands[b].size() < per_band) bands[b].push_back(entry);
        break;
      }
    }
  }
  return bands;
}

}  // namespace iaa
