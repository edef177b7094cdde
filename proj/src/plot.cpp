#include <algorithm>
#include <cstdio>
#include <random>
#include <string>

#include "iaa/png_io.hpp"
#include "iaa/report.hpp"

namespace iaa {

namespace {

// tab10, in canonical conditioning order.
const char* color_of(ConditioningKind k) {
  static constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                             "#9467bd", "#8c564b", "#e377c2"};
  return kPalette[static_cast<int>(k) % 7];
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

class SvgWriter {
 public:
  SvgWriter(double width, double height) {
    out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
            num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    out_ += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
            "\" fill=\"white\"/>\n";
  }

  SvgWriter& raw(const std::string& s) {
    out_ += s;
    out_ += "\n";
    return *this;
  }

  SvgWriter& line(double x1, double y1, double x2, double y2, const char* stroke = "black",
                  const char* extra = "") {
    out_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
            num(y2) + "\" stroke=\"" + stroke + "\"" + extra + "/>\n";
    return *this;
  }

  SvgWriter& text(double x, double y, const std::string& s, const char* anchor = "middle",
                  const std::string& extra = "") {
    out_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" "
            "font-size=\"12\" text-anchor=\"" + anchor + "\"" + extra + ">" + s + "</text>\n";
    return *this;
  }

  std::string finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  std::string out_;
};

void write_text(const std::string& path, const std::string& text) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

void require_summaries(const AnalysisReport& report) {
  if (report.summaries.empty() || report.conditionings.empty()) {
    throw Error("nothing to plot: the report has no distributions");
  }
}

}  // namespace

std::string distributions_svg(const AnalysisReport& report) {
  require_summaries(report);
  constexpr double kWidth = 900, kHeight = 520;
  constexpr double kLeft = 70, kRight = 700, kTop = 30, kBottom = 470;

  double ymax = 0.0;
  for (const auto& [kind, s] : report.summaries) {
    for (const HistogramBin& b : s.histogram) ymax = std::max(ymax, b.density);
    for (const DensityPoint& p : s.kde) {
      if (p.x >= -1.0 && p.x <= 1.0) ymax = std::max(ymax, p.density);
    }
  }
  ymax = ymax > 0.0 ? ymax * 1.05 : 1.0;
  const auto px = [&](double kappa) { return kLeft + (kappa + 1.0) / 2.0 * (kRight - kLeft); };
  const auto py = [&](double density) { return kBottom - density / ymax * (kBottom - kTop); };

  SvgWriter svg(kWidth, kHeight);
  svg.line(kLeft, kBottom, kRight, kBottom).line(kLeft, kTop, kLeft, kBottom);
  for (int i = 0; i <= 4; ++i) {
    const double k = -1.0 + 0.5 * i;
    svg.line(px(k), kBottom, px(k), kBottom + 5).text(px(k), kBottom + 18, num(k));
  }
  for (int i = 0; i <= 4; ++i) {
    const double d = ymax * i / 4.0;
    svg.line(kLeft - 5, py(d), kLeft, py(d)).text(kLeft - 8, py(d) + 4, num(d), "end");
  }
  svg.text((kLeft + kRight) / 2, kHeight - 12, "Cohen's kappa (mean over annotator pairs)");
  svg.text(18, (kTop + kBottom) / 2, "density", "middle",
           " transform=\"rotate(-90 18 " + num((kTop + kBottom) / 2) + ")\"");

  for (ConditioningKind kind : report.conditionings) {
    const DistributionSummary& s = report.summaries.at(kind);
    const std::string name(to_string(kind));
    std::string g = "<g class=\"histogram\" data-conditioning=\"" + name + "\" fill=\"" +
                    color_of(kind) + "\" fill-opacity=\"0.25\" stroke=\"none\">";
    for (const HistogramBin& b : s.histogram) {
      if (b.density <= 0.0) continue;
      g += "\n<rect x=\"" + num(px(b.left)) + "\" y=\"" + num(py(b.density)) + "\" width=\"" +
           num(px(b.right) - px(b.left)) + "\" height=\"" + num(kBottom - py(b.density)) + "\"/>";
    }
    svg.raw(g + "\n</g>");

    std::string points;
    for (const DensityPoint& p : s.kde) {
      if (p.x < -1.0 || p.x > 1.0) continue;
      if (!points.empty()) points += ' ';
      points += num(px(p.x)) + "," + num(py(p.density));
    }
    svg.raw("<polyline class=\"kde\" data-conditioning=\"" + name + "\" fill=\"none\" stroke=\"" +
            color_of(kind) + "\" stroke-width=\"1.5\" points=\"" + points + "\"/>");
  }

  std::string legend = "<g class=\"legend\">";
  double ly = kTop + 10;
  for (ConditioningKind kind : report.conditionings) {
    legend += "\n<rect x=\"720.00\" y=\"" + num(ly - 10) + "\" width=\"14.00\" height=\"10.00\" fill=\"" +
              color_of(kind) + "\" fill-opacity=\"0.6\"/>";
    legend += "\n<text x=\"740.00\" y=\"" + num(ly) +
              "\" font-family=\"sans-serif\" font-size=\"12\">" + std::string(to_string(kind)) +
              "</text>";
    ly += 20;
  }
  svg.raw(legend + "\n</g>");
  return svg.finish();
}

void plot_distributions(const AnalysisReport& report, const std::string& path) {
  write_text(path, distributions_svg(report));
}

std::string strips_svg(const AnalysisReport& report, std::uint64_t jitter_seed) {
  require_summaries(report);
  constexpr double kLeft = 70, kColumn = 120, kHalfViolin = 45, kJitter = 60;
  const StripAxis axis;
  const double width = kLeft + kColumn * static_cast<double>(report.conditionings.size()) + 30;
  const double height = axis.bottom + 50;

  double max_density = 0.0;
  for (const auto& [kind, s] : report.summaries) {
    for (const DensityPoint& p : s.kde) max_density = std::max(max_density, p.density);
  }

  SvgWriter svg(width, height);
  svg.line(kLeft, axis.top, kLeft, axis.bottom);
  for (int i = 0; i <= 4; ++i) {
    const double k = -1.0 + 0.5 * i;
    svg.line(kLeft - 5, axis.to_y(k), width - 30, axis.to_y(k), "#dddddd")
        .text(kLeft - 8, axis.to_y(k) + 4, num(k), "end");
  }
  svg.text(18, (axis.top + axis.bottom) / 2, "Cohen's kappa", "middle",
           " transform=\"rotate(-90 18 " + num((axis.top + axis.bottom) / 2) + ")\"");

  std::mt19937_64 rng(jitter_seed);
  const auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  for (std::size_t col = 0; col < report.conditionings.size(); ++col) {
    const ConditioningKind kind = report.conditionings[col];
    const DistributionSummary& s = report.summaries.at(kind);
    const std::string name(to_string(kind));
    const double cx = kLeft + kColumn * static_cast<double>(col) + kColumn / 2;

    svg.raw("<g class=\"strip\" data-conditioning=\"" + name + "\">");
    if (!s.kde.empty() && max_density > 0.0) {
      std::string right;
      std::string left;
      for (const DensityPoint& p : s.kde) {
        if (p.x < -1.0 || p.x > 1.0) continue;
        const double w = kHalfViolin * p.density / max_density;
        right += (right.empty() ? "M" : " L") + num(cx + w) + "," + num(axis.to_y(p.x));
        left = " L" + num(cx - w) + "," + num(axis.to_y(p.x)) + left;
      }
      if (!right.empty()) {
        svg.raw("<path class=\"violin\" d=\"" + right + left + " Z\" fill=\"" + color_of(kind) +
                "\" fill-opacity=\"0.3\" stroke=\"" + color_of(kind) + "\"/>");
      }
    }
    for (double v : report.sample(kind)) {
      const double x = cx + (uniform() - 0.5) * kJitter;
      svg.raw("<circle class=\"dot\" cx=\"" + num(x) + "\" cy=\"" + num(axis.to_y(v)) +
              "\" r=\"2\" fill=\"black\" fill-opacity=\"0.6\"/>");
    }
    svg.raw("<circle class=\"mean\" cx=\"" + num(cx) + "\" cy=\"" + num(axis.to_y(s.mean)) +
            "\" r=\"5\" fill=\"red\"/>");
    svg.text(cx, axis.bottom + 20, name);
    svg.raw("</g>");
  }
  return svg.finish();
}

void plot_strips(const AnalysisReport& report, std::uint64_t jitter_seed, const std::string& path) {
  write_text(path, strips_svg(report, jitter_seed));
}

}  // namespace iaa
