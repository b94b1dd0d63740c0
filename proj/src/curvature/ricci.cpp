#include "aligned/curvature/ricci.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace aligned::curvature {

void require_positive(const DiagonalMetric& g) {
  if (g.x1 <= 0 || g.x2 <= 0 || g.x3 <= 0) throw std::invalid_argument("metric entries must be positive");
}

StructuralConstants structural_constants(const AlignedSpace& s) {
  const Rational& c1 = s.c1();
  const Rational n1(s.n1()), n2(s.n2()), d(s.d());
  StructuralConstants t;
  t.t111 = (1 - 2 * s.kappa1()) * n1;
  t.t222 = (1 - 2 * s.kappa2()) * n2;
  t.t333 = (c1 - 2) * (c1 - 2) * s.lambda() * d / (c1 - 1);
  t.t113 = (c1 - 1) * s.kappa1() * n1 / c1;
  t.t223 = s.kappa2() * n2 / c1;
  return t;
}

double unit_volume_x3(const AlignedSpace& s, double x1, double x2) {
  return std::exp(-(static_cast<double>(s.n1()) * std::log(x1) + static_cast<double>(s.n2()) * std::log(x2)) /
                  static_cast<double>(s.d()));
}

double unit_volume_scal(const AlignedSpace& s, double x1, double x2) {
  return scalar_curvature(s, Metric<double>{x1, x2, unit_volume_x3(s, x1, x2)});
}

std::vector<LandscapePoint> landscape_grid(const AlignedSpace& s, double x1_lo, double x1_hi, double x2_lo,
                                           double x2_hi, int steps, unsigned threads) {
  if (steps < 2) throw std::invalid_argument("landscape needs at least 2 steps per axis");
  if (!(x1_lo > 0 && x2_lo > 0)) throw std::invalid_argument("landscape range must be positive");
  if (x1_hi < x1_lo || x2_hi < x2_lo) throw std::invalid_argument("landscape range is reversed");
  const std::size_t n = static_cast<std::size_t>(steps);
  std::vector<LandscapePoint> out(n * n);
  auto axis = [&](double lo, double hi, std::size_t i) { return lo + (hi - lo) * static_cast<double>(i) / (steps - 1); };
  auto fill_rows = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double x1 = axis(x1_lo, x1_hi, i);
      for (std::size_t j = 0; j < n; ++j) {
        const double x2 = axis(x2_lo, x2_hi, j);
        const double x3 = unit_volume_x3(s, x1, x2);
        out[i * n + j] = {x1, x2, x3, scalar_curvature(s, Metric<double>{x1, x2, x3})};
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads == 1) {
    fill_rows(0, n);
    return out;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t b = 0; b < n; b += chunk) pool.emplace_back(fill_rows, b, std::min(n, b + chunk));
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace aligned::curvature
