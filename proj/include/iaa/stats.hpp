#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace iaa {

/// Quantile levels reported for every distribution.
inline constexpr std::array<double, 4> kQuantileLevels = {0.25, 0.50, 0.75, 0.95};

inline constexpr const char* kQuantileRule = "linear interpolation at (n-1)*q between order statistics";
inline constexpr const char* kBandwidthRule = "scott: sample_sd * n^(-1/5)";
inline constexpr const char* kKsMethod =
    "asymptotic kolmogorov series, lambda = (sqrt(ne) + 0.12 + 0.11/sqrt(ne)) * D";

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  double density = 0.0;

  friend bool operator==(const HistogramBin&, const HistogramBin&) = default;
};

struct DensityPoint {
  double x = 0.0;
  double density = 0.0;

  friend bool operator==(const DensityPoint&, const DensityPoint&) = default;
};

struct SummaryOptions {
  int bins = 40;
  double hist_min = -1.0;
  double hist_max = 1.0;
  int kde_points = 512;
};

struct DistributionSummary {
  std::size_t n = 0;
  double mean = 0.0;
  /// Parallel to kQuantileLevels.
  std::array<double, 4> quantiles{};
  std::vector<HistogramBin> histogram;
  /// KDE bandwidth; 0 when no KDE was computed.
  double bandwidth = 0.0;
  /// Empty for n < 2 or a zero-spread sample.
  std::vector<DensityPoint> kde;

  friend bool operator==(const DistributionSummary&, const DistributionSummary&) = default;
};

struct KsResult {
  double d_statistic = 0.0;
  double p_value = 1.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;

  friend bool operator==(const KsResult&, const KsResult&) = default;
};

namespace detail {

template <typename Derived>
std::vector<typename Derived::Scalar> sorted_copy(const Eigen::DenseBase<Derived>& sample) {
  std::vector<typename Derived::Scalar> v(static_cast<std::size_t>(sample.size()));
  Eigen::Map<Eigen::Array<typename Derived::Scalar, Eigen::Dynamic, 1>>(v.data(), sample.size()) =
      sample.derived().reshaped();
  std::sort(v.begin(), v.end());
  return v;
}

template <typename Derived>
void require_nonempty(const Eigen::DenseBase<Derived>& sample, const char* what) {
  if (sample.size() == 0) throw std::invalid_argument(std::string(what) + ": empty sample");
}

}  // namespace detail

/// Quantile of an ascending sequence, interpolating linearly between the
/// order statistics around zero-based position (n - 1) * q.
template <typename Scalar>
Scalar sorted_quantile(const std::vector<Scalar>& sorted, Scalar q) {
  if (sorted.empty()) throw std::invalid_argument("quantile: empty sample");
  q = std::clamp(q, Scalar(0), Scalar(1));
  const Scalar pos = static_cast<Scalar>(sorted.size() - 1) * q;
  const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
  const Scalar frac = pos - static_cast<Scalar>(lo);
  if (lo + 1 >= sorted.size() || frac == Scalar(0)) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

template <typename Derived>
typename Derived::Scalar quantile(const Eigen::DenseBase<Derived>& sample,
                                  typename Derived::Scalar q) {
  detail::require_nonempty(sample, "quantile");
  return sorted_quantile(detail::sorted_copy(sample), q);
}

/// Scott's rule h = s * n^(-1/5) with s the (n - 1)-normalized standard deviation.
template <typename Derived>
typename Derived::Scalar scott_bandwidth(const Eigen::DenseBase<Derived>& sample) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = sample.size();
  if (n < 2) return Scalar(0);
  const Scalar mu = sample.mean();
  const Scalar var = (sample.derived().array() - mu).square().sum() / static_cast<Scalar>(n - 1);
  return std::sqrt(var) * std::pow(static_cast<Scalar>(n), Scalar(-0.2));
}

/// Gaussian kernel density estimate at x.
template <typename Derived>
typename Derived::Scalar gaussian_kde(const Eigen::DenseBase<Derived>& sample,
                                      typename Derived::Scalar bandwidth,
                                      typename Derived::Scalar x) {
  using Scalar = typename Derived::Scalar;
  const Scalar norm = Scalar(1) / (static_cast<Scalar>(sample.size()) * bandwidth *
                                   std::sqrt(Scalar(2) * std::numbers::pi_v<Scalar>));
  return norm * (Scalar(-0.5) * ((sample.derived().array() - x) / bandwidth).square()).exp().sum();
}

/// Normalized histogram over [hist_min, hist_max]; the last bin is closed and
/// values outside the range are counted in the nearest edge bin.
template <typename Derived>
std::vector<HistogramBin> histogram(const Eigen::DenseBase<Derived>& sample, int bins,
                                    double lo = -1.0, double hi = 1.0) {
  if (bins < 1) throw std::invalid_argument("histogram: bins must be >= 1");
  if (!(hi > lo)) throw std::invalid_argument("histogram: empty range");
  const double width = (hi - lo) / bins;
  std::vector<double> counts(static_cast<std::size_t>(bins), 0.0);
  for (Eigen::Index i = 0; i < sample.size(); ++i) {
    const double v = static_cast<double>(sample.derived().coeff(i));
    int idx = static_cast<int>(std::floor((v - lo) / width));
    idx = std::clamp(idx, 0, bins - 1);
    counts[static_cast<std::size_t>(idx)] += 1.0;
  }
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  const double scale = sample.size() > 0 ? 1.0 / (static_cast<double>(sample.size()) * width) : 0.0;
  for (int b = 0; b < bins; ++b) {
    out[b].left = lo + b * width;
    out[b].right = b + 1 == bins ? hi : lo + (b + 1) * width;
    out[b].density = counts[b] * scale;
  }
  return out;
}

/// Mean, quantiles, histogram and Gaussian KDE (Scott bandwidth) of a sample.
/// The KDE is evaluated at kde_points uniform points over [min - 3h, max + 3h].
template <typename Derived>
DistributionSummary summarize(const Eigen::DenseBase<Derived>& sample,
                              const SummaryOptions& opts = {}) {
  detail::require_nonempty(sample, "summarize");
  const Eigen::ArrayXd x = sample.derived().template cast<double>().reshaped();
  const std::vector<double> sorted = detail::sorted_copy(x);

  DistributionSummary s;
  s.n = sorted.size();
  s.mean = x.mean();
  for (std::size_t i = 0; i < kQuantileLevels.size(); ++i) {
    s.quantiles[i] = sorted_quantile(sorted, kQuantileLevels[i]);
  }
  s.histogram = histogram(x, opts.bins, opts.hist_min, opts.hist_max);

  const double h = scott_bandwidth(x);
  if (s.n >= 2 && h > 0.0 && std::isfinite(h) && opts.kde_points >= 2) {
    s.bandwidth = h;
    const double lo = sorted.front() - 3.0 * h;
    const double hi = sorted.back() + 3.0 * h;
    const double step = (hi - lo) / (opts.kde_points - 1);
    s.kde.resize(static_cast<std::size_t>(opts.kde_points));
    for (int i = 0; i < opts.kde_points; ++i) {
      const double at = i + 1 == opts.kde_points ? hi : lo + i * step;
      s.kde[i] = {at, gaussian_kde(x, h, at)};
    }
  }
  return s;
}

/// sup_t |F_a(t) - F_b(t)| over the two empirical CDFs.
template <typename DerivedA, typename DerivedB>
double ks_statistic(const Eigen::DenseBase<DerivedA>& a, const Eigen::DenseBase<DerivedB>& b) {
  detail::require_nonempty(a, "ks_statistic");
  detail::require_nonempty(b, "ks_statistic");
  const auto sa = detail::sorted_copy(a);
  const auto sb = detail::sorted_copy(b);
  const double n1 = static_cast<double>(sa.size());
  const double n2 = static_cast<double>(sb.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < sa.size() && j < sb.size()) {
    const double t = std::min<double>(sa[i], sb[j]);
    while (i < sa.size() && sa[i] <= t) ++i;
    while (j < sb.size() && sb[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / n1 - static_cast<double>(j) / n2));
  }
  return d;
}

/// Kolmogorov survival function Q(lambda) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2).
/// Stops once a term falls below 1e-12 (at most 100 terms); a series that has
/// not converged by then is treated as 1. Clamped to [0, 1].
double kolmogorov_survival(double lambda);

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value.
template <typename DerivedA, typename DerivedB>
KsResult ks_test(const Eigen::DenseBase<DerivedA>& a, const Eigen::DenseBase<DerivedB>& b) {
  KsResult r;
  r.d_statistic = ks_statistic(a, b);
  r.n1 = static_cast<std::size_t>(a.size());
  r.n2 = static_cast<std::size_t>(b.size());
  const double ne = static_cast<double>(r.n1) * static_cast<double>(r.n2) /
                    static_cast<double>(r.n1 + r.n2);
  const double root = std::sqrt(ne);
  r.p_value = kolmogorov_survival((root + 0.12 + 0.11 / root) * r.d_statistic);
  return r;
}

inline KsResult ks_test(const std::vector<double>& a, const std::vector<double>& b) {
  return ks_test(Eigen::Map<const Eigen::ArrayXd>(a.data(), static_cast<Eigen::Index>(a.size())),
                 Eigen::Map<const Eigen::ArrayXd>(b.data(), static_cast<Eigen::Index>(b.size())));
}

inline DistributionSummary summarize(const std::vector<double>& sample,
                                     const SummaryOptions& opts = {}) {
  return summarize(
      Eigen::Map<const Eigen::ArrayXd>(sample.data(), static_cast<Eigen::Index>(sample.size())),
      opts);
}

}  // namespace iaa
