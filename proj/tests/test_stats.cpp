#include <doctest.h>

#include "iaa/stats.hpp"
#include "test_support.hpp"

using namespace iaa;
using namespace iaa::testing;

TEST_CASE("summary of a constant sample") {
  const DistributionSummary s = summarize(std::vector<double>{0.5, 0.5, 0.5});
  CHECK(s.n == 3);
  CHECK(s.mean == 0.5);
  for (double q : s.quantiles) CHECK(q == 0.5);
  CHECK(s.kde.empty());  // zero spread: no bandwidth
}

TEST_CASE("quantiles use linear interpolation at (n-1)q") {
  const std::vector<double> two{0.0, 1.0};
  CHECK(sorted_quantile(two, 0.5) == 0.5);

  // Frozen from numpy.quantile (default linear method).
  const Eigen::ArrayXd s = (Eigen::ArrayXd(7) << 0.1, 0.7, 0.3, 0.9, 0.5, 0.2, -0.4).finished();
  CHECK(quantile(s, 0.25) == doctest::Approx(0.15).epsilon(1e-14));
  CHECK(quantile(s, 0.50) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(quantile(s, 0.75) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(quantile(s, 0.95) == doctest::Approx(0.84).epsilon(1e-14));

  // Single-precision samples go through the same template.
  const Eigen::ArrayXf f = s.cast<float>();
  CHECK(quantile(f, 0.5f) == doctest::Approx(0.3f));
}

TEST_CASE("property: quantiles are order statistics where (n-1)q is integral, and monotone") {
  Rng rng(51);
  for (int i = 0; i < 50; ++i) {
    const int n = 4 * static_cast<int>(rng.range(1, 30)) + 1;  // (n-1) * 0.25 integral
    std::vector<double> v(n);
    for (double& x : v) x = rng.normal();
    std::vector<double> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    const DistributionSummary s = summarize(v);
    CHECK(s.quantiles[0] == sorted[(n - 1) / 4]);
    CHECK(s.quantiles[1] == sorted[(n - 1) / 2]);
    CHECK(s.quantiles[2] == sorted[3 * (n - 1) / 4]);
    CHECK(std::is_sorted(s.quantiles.begin(), s.quantiles.end()));
  }
}

TEST_CASE("KDE uses Scott's bandwidth") {
  // Frozen from scipy.stats.gaussian_kde(bw_method="scott").
  const Eigen::ArrayXd s = (Eigen::ArrayXd(7) << 0.1, 0.7, 0.3, 0.9, 0.5, 0.2, -0.4).finished();
  const double h = scott_bandwidth(s);
  CHECK(h == doctest::Approx(0.28938107898332593).epsilon(1e-12));
  CHECK(gaussian_kde(s, h, 0.25) == doctest::Approx(0.7862325638500002).epsilon(1e-12));
  CHECK(gaussian_kde(s, h, -0.9) == doctest::Approx(0.04495057566119606).epsilon(1e-12));

  const DistributionSummary sum = summarize(s);
  REQUIRE(sum.kde.size() == 512);
  CHECK(sum.kde.front().x == doctest::Approx(-0.4 - 3 * h));
  CHECK(sum.kde.back().x == doctest::Approx(0.9 + 3 * h));
}

TEST_CASE("property: KDE is non-negative and integrates to about 1") {
  Rng rng(52);
  for (int i = 0; i < 20; ++i) {
    const int n = static_cast<int>(rng.range(30, 400));
    std::vector<double> v(n);
    for (double& x : v) x = std::tanh(rng.normal());
    const DistributionSummary s = summarize(v);
    double area = 0.0;
    for (std::size_t k = 1; k < s.kde.size(); ++k) {
      CHECK(s.kde[k].density >= 0.0);
      area += 0.5 * (s.kde[k].density + s.kde[k - 1].density) * (s.kde[k].x - s.kde[k - 1].x);
    }
    CHECK(std::abs(area - 1.0) <= 0.02);
  }
}

TEST_CASE("histogram densities integrate to one") {
  Rng rng(53);
  std::vector<double> v(257);
  for (double& x : v) x = 2.0 * rng.uniform() - 1.0;
  v.push_back(1.0);
  v.push_back(-1.0);
  const DistributionSummary s = summarize(v);
  REQUIRE(s.histogram.size() == 40);
  double mass = 0.0;
  for (const HistogramBin& b : s.histogram) mass += b.density * (b.right - b.left);
  CHECK(std::abs(mass - 1.0) <= 1e-9);
  CHECK(s.histogram.front().left == -1.0);
  CHECK(s.histogram.back().right == 1.0);

  SummaryOptions opts;
  opts.bins = 7;
  CHECK(summarize(v, opts).histogram.size() == 7);
}

TEST_CASE("summary errors and n = 1") {
  CHECK_THROWS_AS(summarize(std::vector<double>{}), std::invalid_argument);
  const DistributionSummary one = summarize(std::vector<double>{0.25});
  CHECK(one.mean == 0.25);
  CHECK(one.kde.empty());
  CHECK(one.quantiles[3] == 0.25);
}

TEST_CASE("ks examples") {
  const std::vector<double> a{0.3, -0.2, 0.9, 0.9, 0.1};
  const KsResult same = ks_test(a, a);
  CHECK(same.d_statistic == 0.0);
  CHECK(same.p_value == 1.0);

  const KsResult apart = ks_test(std::vector<double>{1, 2, 3}, std::vector<double>{10, 11, 12});
  CHECK(apart.d_statistic == 1.0);
  CHECK(apart.n1 == 3);
  CHECK(apart.n2 == 3);
  CHECK_THROWS_AS(ks_test(std::vector<double>{}, a), std::invalid_argument);
}

TEST_CASE("kolmogorov survival against an independent long-double series") {
  CHECK(kolmogorov_survival(0.0) == 1.0);
  for (double lambda : {0.3, 0.5, 0.8, 1.0, 1.36, 2.0, 3.0, 5.0, 8.0}) {
    CAPTURE(lambda);
    const double ref = reference_kolmogorov_q(lambda);
    CHECK(std::abs(kolmogorov_survival(lambda) - ref) <= 1e-11 + 1e-9 * ref);
  }
  // Critical value for alpha = 0.05.
  CHECK(kolmogorov_survival(1.3581) == doctest::Approx(0.05).epsilon(1e-3));
}

TEST_CASE("property: D matches naive ECDF scan; symmetric; invariant under monotone maps; p monotone") {
  Rng rng(54);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> a(rng.range(1, 60)), b(rng.range(1, 60));
    const bool ties = rng.chance(0.3);
    for (double& x : a) x = ties ? std::round(rng.normal() * 3) : rng.normal();
    for (double& x : b) x = ties ? std::round(rng.normal() * 3 + 1) : rng.normal() + 0.5;
    const KsResult r = ks_test(a, b);
    CHECK(std::abs(r.d_statistic - naive_ks_d(a, b)) <= 1e-12);
    CHECK(r.d_statistic == ks_test(b, a).d_statistic);
    std::vector<double> ea(a), eb(b);
    for (double& x : ea) x = std::exp(x);
    for (double& x : eb) x = std::exp(x);
    CHECK(ks_test(ea, eb).d_statistic == r.d_statistic);
    CHECK(r.p_value >= 0.0);
    CHECK(r.p_value <= 1.0);
  }
  double prev = 1.0;
  for (int k = 0; k <= 400; ++k) {
    const double p = kolmogorov_survival(k * 0.02);
    // Partial sums near 1 carry rounding noise of a few ulps.
    CHECK(p <= prev + 1e-12);
    prev = p;
  }
}
