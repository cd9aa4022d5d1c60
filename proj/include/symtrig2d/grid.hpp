#pragma once

#include <stdexcept>
#include <vector>

#include "types.hpp"

namespace symtrig2d {

enum class GridKind { full, anti, sym };

// Shifted square lattice: node (m, n) sits at a + (m + b) * t / n_points per
// axis.  `anti` keeps the strict lower triangle m > n, `sym` keeps m >= n.
struct GridSpec {
  double a = 0.0;
  double b = 0.5;
  int n = 1;
  double t = 1.0;

  void validate() const {
    if (n < 1) throw std::invalid_argument("grid: n must be >= 1");
    if (!(b >= 0.0 && b <= 1.0)) throw std::invalid_argument("grid: b must lie in [0, 1]");
    if (!(t > 0.0)) throw std::invalid_argument("grid: t must be positive");
  }

  Point2 node(int m, int n_idx) const {
    double step = t / static_cast<double>(n);
    return {a + (static_cast<double>(m) + b) * step,
            a + (static_cast<double>(n_idx) + b) * step};
  }
};

struct GridPoint {
  int m = 0;
  int n = 0;
  Point2 at;
};

inline std::size_t grid_size(GridKind kind, int n) {
  auto nn = static_cast<std::size_t>(n);
  switch (kind) {
    case GridKind::full: return nn * nn;
    case GridKind::anti: return nn * (nn - 1) / 2;
    default: return nn * (nn + 1) / 2;
  }
}

// Nodes in lexicographic (m, n) order, so serialized sample sets are stable.
inline std::vector<GridPoint> make_grid(const GridSpec& spec, GridKind kind) {
  spec.validate();
  std::vector<GridPoint> pts;
  pts.reserve(grid_size(kind, spec.n));
  for (int m = 0; m < spec.n; ++m) {
    int n_end = kind == GridKind::full ? spec.n - 1 : (kind == GridKind::anti ? m - 1 : m);
    for (int n = 0; n <= n_end; ++n) pts.push_back({m, n, spec.node(m, n)});
  }
  return pts;
}

// Open triangle 0 < y < x < 1, the fundamental domain of the antisymmetric
// family (the symmetric one adds the boundary).
inline bool fundamental_domain_contains(Point2 pt) {
  return pt.y > 0.0 && pt.x > pt.y && pt.x < 1.0;
}

}  // namespace symtrig2d
