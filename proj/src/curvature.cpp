#include "flatsphere/curvature.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include <fmt/format.h>

#include "flatsphere/error.hpp"
#include "flatsphere/geometry.hpp"

namespace flatsphere {

namespace {

// Sums of all subsets of `k`, indexed by bitmask; each entry is one addition away from its
// parent mask with the highest bit cleared.
std::vector<double> subset_sums(std::span<const double> k) {
  std::vector<double> sums(std::size_t{1} << k.size(), 0.0);
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    const int top = std::bit_width(mask) - 1;
    sums[mask] = sums[mask & ~(std::size_t{1} << top)] + k[top];
  }
  return sums;
}

}  // namespace

double curvature_gap(std::span<const double> k) {
  const int n = static_cast<int>(k.size());
  if (n > kMaxGapSingularities) {
    throw Error(ErrorCode::BudgetExceeded,
                fmt::format("curvature_gap: {} singularities exceed the exhaustive budget of {}", n,
                            kMaxGapSingularities));
  }
  double total = 0.0;
  for (double x : k) {
    if (!(x < 1.0)) throw Error(ErrorCode::Domain, fmt::format("curvature_gap: curvature {} is not below 1", x));
    total += x;
  }
  if (std::abs(total - 2.0) > 1e-9) {
    throw Error(ErrorCode::Domain, fmt::format("curvature_gap: curvatures sum to {:.12g}, not 2", total));
  }

  const int lo_bits = n / 2;
  const auto lo = subset_sums(k.first(lo_bits));
  const auto hi = subset_sums(k.subspan(lo_bits));

  const auto scan = [&](std::size_t begin, std::size_t end) {
    double best = 1.0;
    for (std::size_t h = begin; h < end; ++h) {
      const double base = 1.0 - hi[h];
      for (double s : lo) best = std::min(best, std::abs(base - s));
    }
    return best;
  };

  const std::size_t work = hi.size() * lo.size();
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (work < (std::size_t{1} << 22) || threads == 1) return scan(0, hi.size());

  std::vector<double> partial(threads, 1.0);
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (hi.size() + threads - 1) / threads;
    for (unsigned i = 0; i < threads; ++i) {
      const std::size_t b = std::min(hi.size(), i * chunk);
      const std::size_t e = std::min(hi.size(), b + chunk);
      pool.emplace_back([&, i, b, e] { partial[i] = scan(b, e); });
    }
  }
  return *std::min_element(partial.begin(), partial.end());
}

CurvatureProfile make_profile(std::vector<double> k) {
  if (k.size() < 3) throw Error(ErrorCode::Domain, "curvature profile needs at least three singularities");
  const double gap = curvature_gap(k);
  return {std::move(k), gap};
}

bool cubic_case_check(std::span<const double> angles) {
  constexpr double step = 4.0 * kPi / 3.0;
  for (double a : angles) {
    const double m = std::round((a - kTwoPi) / step);
    if (m < -1.0 || std::abs(a - (kTwoPi + step * m)) > 1e-9) return false;
  }
  return true;
}

std::vector<double> sharp_family_curvatures(int m, double eps) {
  if (m < 1) throw Error(ErrorCode::Domain, "sharp family needs m >= 1");
  std::vector<double> k;
  k.insert(k.end(), m, eps);
  k.insert(k.end(), m - 1, -eps);
  k.insert(k.end(), 2, 1.0 - eps / 2.0);
  return k;
}

}  // namespace flatsphere
