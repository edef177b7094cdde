#include "iaa/stats.hpp"

namespace iaa {

double kolmogorov_survival(double lambda) {
  if (!(lambda > 0.0)) return 1.0;
  constexpr int kMaxTerms = 100;
  constexpr double kTermFloor = 1e-12;
  const double a = -2.0 * lambda * lambda;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const double term = 2.0 * sign * std::exp(a * k * k);
    sum += term;
    if (std::abs(term) < kTermFloor) return std::clamp(sum, 0.0, 1.0);
    sign = -sign;
  }
  return 1.0;
}

}  // namespace iaa
