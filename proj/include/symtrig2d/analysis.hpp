#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "basis.hpp"
#include "cosine.hpp"
#include "grid.hpp"
#include "interpolation.hpp"
#include "parallel.hpp"
#include "transforms.hpp"
#include "types.hpp"

namespace symtrig2d {

// exp(-((x - 0.707)^2 + (y - 0.293)^2) / (2 * 0.079^2))
inline double gaussian_model(Point2 pt) {
  double dx = pt.x - 0.707;
  double dy = pt.y - 0.293;
  return std::exp(-(dx * dx + dy * dy) / (2.0 * 0.079 * 0.079));
}

// (1/15) cos(40 sqrt((x - 0.707)^2 + (y - 0.293)^2))
inline double ripple_model(Point2 pt) {
  double dx = pt.x - 0.707;
  double dy = pt.y - 0.293;
  return std::cos(40.0 * std::sqrt(dx * dx + dy * dy)) / 15.0;
}

enum class QuadratureMode { half_square, triangle_filter };

// R x R midpoint cells over the unit square, reduced to the triangle either
// by halving (strict lower cells plus half-weighted diagonal cells — exact
// for swap-symmetric integrands) or by keeping only cells with center x > y.
struct QuadratureSpec {
  int resolution = 1000;
  QuadratureMode mode = QuadratureMode::half_square;

  void validate() const {
    if (resolution < 2) throw std::invalid_argument("quadrature: resolution must be >= 2");
  }

  std::vector<double> cell_centers() const {
    validate();
    std::vector<double> xs(resolution);
    for (int i = 0; i < resolution; ++i) xs[i] = (i + 0.5) / resolution;
    return xs;
  }
};

// Midpoint approximation of the integral of g over the open triangle
// 0 < y < x < 1.  g is only ever evaluated at cell centers with x >= y.
template <class G>
auto integrate_fundamental(G&& g, const QuadratureSpec& q) {
  auto xs = q.cell_centers();
  std::size_t r = xs.size();
  using V = std::decay_t<decltype(g(Point2{}) + g(Point2{}))>;
  V total = sum_terms<V>(r, [&](std::size_t j) {
    V row{};
    for (std::size_t i = j + 1; i < r; ++i) row += g(Point2{xs[i], xs[j]});
    if (q.mode == QuadratureMode::half_square) row += 0.5 * g(Point2{xs[j], xs[j]});
    return row;
  });
  return total / (static_cast<double>(r) * r);
}

// Expansion coefficient of f against one basis function, with the family
// normalization in front of the triangle integral: 1 (E^-), G^{-1} (E^+),
// 4 (cos^-), 4 G^{-1} (cos^+).
template <class F>
complexd continuous_coefficient(F&& f, Family family, FrequencyPair p,
                                const QuadratureSpec& q) {
  complexd integral = integrate_fundamental(
      [&](Point2 pt) { return complexd(f(pt)) * std::conj(eval_basis(family, p, pt)); }, q);
  double norm = is_exponential(family) ? 1.0 : 4.0;
  if (!is_antisymmetric(family)) norm /= diagonal_weight(p);
  return integral * norm;
}

// Gram matrix of the dominant exponential basis functions with indices up to
// `top`, under (1/sqrt(G_p G_q)) ∫_F E_p conj(E_q); returns the largest
// absolute deviation from the identity.  Evaluates every basis function once
// per cell from 1D phase tables, so the cost is cells x pairs^2 additions.
inline double continuous_gram_deviation(Family family, int top, const QuadratureSpec& q) {
  if (!is_exponential(family))
    throw std::invalid_argument("continuous_gram_deviation: exponential families only");
  bool anti = is_antisymmetric(family);
  auto xs = q.cell_centers();
  std::size_t r = xs.size();

  std::vector<IndexPair> pairs;
  for (int k = 0; k <= top; ++k)
    for (int l = 0; l <= (anti ? k - 1 : k); ++l) pairs.push_back({k, l});
  std::size_t np = pairs.size();

  // phases[k * r + i] = e^{2 pi i k xs[i]}
  std::vector<complexd> phases(static_cast<std::size_t>(top + 1) * r);
  for (int k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < r; ++i)
      phases[static_cast<std::size_t>(k) * r + i] = unit_phase(k * xs[i]);
  auto ph = [&](int k, std::size_t i) { return phases[static_cast<std::size_t>(k) * r + i]; };

  // row-wise partial Grams, combined in row order for determinism
  std::vector<std::vector<complexd>> partial(r);
  for_each_index(r, [&](std::size_t j) {
    std::vector<complexd> gram(np * np, complexd{});
    std::vector<complexd> u(np);
    auto accumulate = [&](std::size_t i, double w) {
      for (std::size_t p = 0; p < np; ++p) {
        auto [k, l] = pairs[p];
        complexd cross = ph(l, i) * ph(k, j);
        u[p] = ph(k, i) * ph(l, j) + (anti ? -cross : cross);
      }
      for (std::size_t p = 0; p < np; ++p) {
        complexd wp = w * u[p];
        for (std::size_t s = p; s < np; ++s) gram[p * np + s] += wp * std::conj(u[s]);
      }
    };
    for (std::size_t i = j + 1; i < r; ++i) accumulate(i, 1.0);
    if (q.mode == QuadratureMode::half_square) accumulate(j, 0.5);
    partial[j] = std::move(gram);
  });

  std::vector<complexd> gram(np * np, complexd{});
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t e = 0; e < np * np; ++e) gram[e] += partial[j][e];

  double cell = 1.0 / (static_cast<double>(r) * r);
  double dev = 0.0;
  for (std::size_t p = 0; p < np; ++p)
    for (std::size_t s = p; s < np; ++s) {
      double gp = anti ? 1.0 : diagonal_weight(pairs[p].k, pairs[p].l);
      double gs = anti ? 1.0 : diagonal_weight(pairs[s].k, pairs[s].l);
      complexd v = gram[p * np + s] * cell / std::sqrt(gp * gs);
      dev = std::max(dev, std::abs(v - (p == s ? 1.0 : 0.0)));
    }
  return dev;
}

// ∫_F |psi - f|^2
template <class Psi, class Ref>
double l2_error(Psi&& psi, Ref&& ref, const QuadratureSpec& q) {
  return integrate_fundamental(
      [&](Point2 pt) {
        complexd d = complexd(psi(pt)) - complexd(ref(pt));
        return std::norm(d);
      },
      q);
}

// |five-point FD Laplacian of the basis function - eigenvalue * value|
inline double laplace_residual(Family family, FrequencyPair p, Point2 pt, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("laplace_residual: h must be positive");
  auto f = [&](double x, double y) { return eval_basis(family, p, Point2{x, y}); };
  complexd center = f(pt.x, pt.y);
  complexd fd = (f(pt.x + h, pt.y) + f(pt.x - h, pt.y) + f(pt.x, pt.y + h) +
                 f(pt.x, pt.y - h) - 4.0 * center) /
                (h * h);
  return std::abs(fd - laplace_eigenvalue(family, p) * center);
}

// Mixed-derivative analogue: 9-point FD of d^4/dx^2 dy^2 against its
// eigenvalue.  The 1/h^4 scaling amplifies rounding noise, so budgets must
// allow an absolute floor of order eps/h^4 on top of the O(h^2) truncation.
inline double mixed_derivative_residual(Family family, FrequencyPair p, Point2 pt,
                                        double h) {
  if (!(h > 0.0)) throw std::invalid_argument("mixed_derivative_residual: h must be positive");
  auto f = [&](double x, double y) { return eval_basis(family, p, Point2{x, y}); };
  complexd center = f(pt.x, pt.y);
  complexd corners = f(pt.x + h, pt.y + h) + f(pt.x + h, pt.y - h) +
                     f(pt.x - h, pt.y + h) + f(pt.x - h, pt.y - h);
  complexd edges = f(pt.x + h, pt.y) + f(pt.x - h, pt.y) + f(pt.x, pt.y + h) +
                   f(pt.x, pt.y - h);
  complexd fd = (corners - 2.0 * edges + 4.0 * center) / (h * h * h * h);
  return std::abs(fd - mixed_derivative_eigenvalue(family, p) * center);
}

struct ErrorTableRow {
  int n = 0;
  double exp_anti = 0.0;
  double exp_sym = 0.0;
  double cos2_anti = 0.0;
  double cos2_sym = 0.0;
};

namespace detail {

// Quadrature of |psi - f|^2 with psi supplied row-by-row by a separable
// evaluator (complex or real rows).
template <class RowEval, class Ref>
double l2_error_rows(const RowEval& ev, Ref&& ref, const QuadratureSpec& q,
                     const std::vector<double>& xs) {
  std::size_t r = xs.size();
  double total = sum_terms<double>(r, [&](std::size_t j) {
    thread_local std::vector<typename RowEval::value_type> buf;
    ev.eval_row(j, buf);
    double row = 0.0;
    for (std::size_t i = j + 1; i < r; ++i)
      row += std::norm(complexd(buf[i]) - complexd(ref(Point2{xs[i], xs[j]})));
    if (q.mode == QuadratureMode::half_square)
      row += 0.5 * std::norm(complexd(buf[j]) - complexd(ref(Point2{xs[j], xs[j]})));
    return row;
  });
  return total / (static_cast<double>(r) * r);
}

}  // namespace detail

// The four interpolation errors of one row of the comparison table: psi^-_N
// and psi^+_N on L^-/L^+_{0,1/2,N,1}, and the variant-II cosine interpolants
// with M = N (whose node sets coincide with those grids).
template <class Model>
ErrorTableRow error_table_row(Model&& model, int n, const QuadratureSpec& q) {
  GridSpec spec{0.0, 0.5, n, 1.0};
  auto xs = q.cell_centers();

  ErrorTableRow row;
  row.n = n;
  {
    auto c = interp_anti(sample_on_grid(model, spec, GridKind::anti));
    InterpRowEvaluator ev(c, xs);
    row.exp_anti = detail::l2_error_rows(ev, model, q, xs);
  }
  {
    auto c = interp_sym(sample_on_grid(model, spec, GridKind::sym));
    InterpRowEvaluator ev(c, xs);
    row.exp_sym = detail::l2_error_rows(ev, model, q, xs);
  }
  {
    auto sp = amdct(sample_cosine_nodes(model, CosineVariant::II, n, Family::cos_anti),
                    CosineVariant::II);
    CosineRowEvaluator ev(sp, xs);
    row.cos2_anti = detail::l2_error_rows(ev, model, q, xs);
  }
  {
    auto sp = smdct(sample_cosine_nodes(model, CosineVariant::II, n, Family::cos_sym),
                    CosineVariant::II);
    CosineRowEvaluator ev(sp, xs);
    row.cos2_sym = detail::l2_error_rows(ev, model, q, xs);
  }
  return row;
}

template <class Model>
std::vector<ErrorTableRow> error_table(Model&& model, const std::vector<int>& ns,
                                       const QuadratureSpec& q) {
  std::vector<ErrorTableRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) rows.push_back(error_table_row(model, n, q));
  return rows;
}

enum class StripRegion { lower_edge, right_edge, diagonal };

// Sampled boundary strip: `samples` points along the border, `layers` offsets
// across the strip width (a single layer on the border itself when width = 0).
struct StripSpec {
  StripRegion region = StripRegion::lower_edge;
  double width = 0.02;
  int samples = 512;
  int layers = 8;

  std::vector<Point2> points() const {
    int nl = width == 0.0 ? 1 : layers;
    std::vector<Point2> pts;
    for (int li = 0; li < nl; ++li) {
      double off = nl == 1 ? 0.0 : width * li / (nl - 1);
      for (int si = 0; si < samples; ++si) {
        double t = static_cast<double>(si) / (samples - 1);
        Point2 p;
        switch (region) {
          case StripRegion::lower_edge: p = {t, off}; break;
          case StripRegion::right_edge: p = {1.0 - off, t * (1.0 - off)}; break;
          default: p = {t + off, t}; break;
        }
        if (p.x >= p.y && p.x <= 1.0 && p.y >= 0.0) pts.push_back(p);
      }
    }
    return pts;
  }
};

// max |psi - f| over the strip's sample points
template <class Psi, class Ref>
double gibbs_profile(Psi&& psi, Ref&& ref, const StripSpec& strip) {
  double worst = 0.0;
  for (Point2 p : strip.points())
    worst = std::max(worst, std::abs(complexd(psi(p)) - complexd(ref(p))));
  return worst;
}

}  // namespace symtrig2d
