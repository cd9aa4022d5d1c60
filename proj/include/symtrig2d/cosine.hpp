#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "basis.hpp"
#include "grid.hpp"
#include "interpolation.hpp"
#include "parallel.hpp"
#include "types.hpp"

namespace symtrig2d {

enum class CosineVariant : int { I = 1, II = 2, III = 3, IV = 4 };

inline CosineVariant cosine_variant_from_int(int v) {
  if (v < 1 || v > 4) throw std::invalid_argument("cosine: variant must be 1..4");
  return static_cast<CosineVariant>(v);
}

namespace detail {

// Node/frequency shape of one transform variant: variant I keeps the x = 1
// boundary (indices up to M, integer positions), II-IV stop at M-1 with
// half-shifted positions for II/IV.
struct CosineShape {
  int index_top;     // largest node/frequency index
  bool half_shift;   // nodes at (m + 1/2)/M instead of m/M
  bool node_d;       // d_{m,M} weights on nodes (variants I, III)
  bool freq_d;       // d_{k,M} weights on frequencies (variants I, II)
  bool half_labels;  // basis labels (k + 1/2, l + 1/2) (variants III, IV)
};

inline CosineShape cosine_shape(CosineVariant v) {
  switch (v) {
    case CosineVariant::I: return {0, false, true, true, false};   // top set below
    case CosineVariant::II: return {-1, true, false, true, false};
    case CosineVariant::III: return {-1, false, true, false, true};
    default: return {-1, true, false, false, true};
  }
}

inline int cosine_index_top(CosineVariant v, int m_points) {
  return v == CosineVariant::I ? m_points : m_points - 1;
}

}  // namespace detail

// Triangle nodes of one cosine transform variant: x_m = m/M (I, III) or
// (m + 1/2)/M (II, IV), with m > n (anti) or m >= n (sym).
inline std::vector<GridPoint> cosine_nodes(CosineVariant variant, int m_points,
                                           Family family) {
  if (m_points < 1) throw std::invalid_argument("cosine: M must be >= 1");
  if (is_exponential(family))
    throw std::invalid_argument("cosine: family must be cos-anti or cos-sym");
  bool anti = is_antisymmetric(family);
  bool half = detail::cosine_shape(variant).half_shift;
  int top = detail::cosine_index_top(variant, m_points);
  std::vector<GridPoint> pts;
  for (int m = 0; m <= top; ++m)
    for (int n = 0; n <= (anti ? m - 1 : m); ++n) {
      double x = (m + (half ? 0.5 : 0.0)) / m_points;
      double y = (n + (half ? 0.5 : 0.0)) / m_points;
      pts.push_back({m, n, {x, y}});
    }
  return pts;
}

struct CosineSamples {
  Family family = Family::cos_anti;
  CosineVariant variant = CosineVariant::II;
  int m_points = 0;
  std::vector<double> values;  // cosine_nodes order
};

template <class Fn>
CosineSamples sample_cosine_nodes(Fn&& fn, CosineVariant variant, int m_points,
                                  Family family) {
  CosineSamples out{family, variant, m_points, {}};
  auto pts = cosine_nodes(variant, m_points, family);
  out.values.reserve(pts.size());
  for (const auto& p : pts) out.values.push_back(fn(p.at));
  return out;
}

// Real cosine-transform coefficients over the variant's dominant pairs
// (strict k > l for cos-anti, k >= l for cos-sym, indices up to
// cosine_index_top).  Variants III/IV label basis functions at (k+1/2, l+1/2).
struct CosineSpectrum {
  Family family = Family::cos_anti;
  CosineVariant variant = CosineVariant::II;
  int m_points = 0;
  std::vector<double> coeffs;  // k-major triangle order

  int index_top() const { return detail::cosine_index_top(variant, m_points); }

  std::size_t index_of(int k, int l) const {
    auto p = static_cast<std::size_t>(k);
    return is_antisymmetric(family) ? p * (p - 1) / 2 + l : p * (p + 1) / 2 + l;
  }

  double at(int k, int l) const { return coeffs[index_of(k, l)]; }

  // basis label of coefficient (k, l)
  FrequencyPair label(int k, int l) const {
    bool half = detail::cosine_shape(variant).half_labels;
    return half ? freq_pair_half(k, l) : freq_pair(k, l);
  }

  std::vector<IndexPair> dominant_pairs() const {
    bool anti = is_antisymmetric(family);
    std::vector<IndexPair> out;
    for (int k = 0; k <= index_top(); ++k)
      for (int l = 0; l <= (anti ? k - 1 : k); ++l) out.push_back({k, l});
    return out;
  }
};

namespace detail {

inline CosineSpectrum cosine_transform(const CosineSamples& samples,
                                       CosineVariant variant, bool anti) {
  if (samples.variant != variant || samples.m_points < 1)
    throw std::invalid_argument("cosine transform: node-set mismatch");
  if (is_antisymmetric(samples.family) != anti || is_exponential(samples.family))
    throw std::invalid_argument("cosine transform: family mismatch");
  int m_pts = samples.m_points;
  auto nodes = cosine_nodes(variant, m_pts, samples.family);
  if (samples.values.size() != nodes.size())
    throw std::invalid_argument("cosine transform: node-set mismatch");
  auto shape = cosine_shape(variant);

  CosineSpectrum out{samples.family, variant, m_pts, {}};
  auto pairs = out.dominant_pairs();
  out.coeffs.resize(pairs.size());
  double inv_m2 = 1.0 / (static_cast<double>(m_pts) * m_pts);
  for_each_index(pairs.size(), [&](std::size_t i) {
    auto [k, l] = pairs[i];
    FrequencyPair label = out.label(k, l);
    double acc = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      double w = samples.values[j];
      if (shape.node_d)
        w *= cos_edge_weight(nodes[j].m, m_pts) * cos_edge_weight(nodes[j].n, m_pts);
      if (!anti) w /= diagonal_weight(nodes[j].m, nodes[j].n);
      acc += w * (anti ? eval_cos_anti_real(label, nodes[j].at)
                       : eval_cos_sym_real(label, nodes[j].at));
    }
    double scale = 4.0 * inv_m2;
    if (shape.freq_d) scale *= cos_edge_weight(k, m_pts) * cos_edge_weight(l, m_pts);
    if (!anti) scale /= diagonal_weight(k, l);
    out.coeffs[i] = acc * scale;
  });
  return out;
}

}  // namespace detail

// c^{v,-}_{kl} = 4 [d_k d_l] / M^2 * sum_{m>n} [d_m d_n] f cos^-_label, with
// the d factors present per variant (frequencies: I/II, nodes: I/III).
inline CosineSpectrum amdct(const CosineSamples& samples, CosineVariant variant) {
  return detail::cosine_transform(samples, variant, true);
}

// Symmetric analogue with G_kl in the normalization and G_mn^{-1} node
// weights, summed over the closed triangle m >= n.
inline CosineSpectrum smdct(const CosineSamples& samples, CosineVariant variant) {
  return detail::cosine_transform(samples, variant, false);
}

// psi^{v,±}_M(pt) = sum c_{kl} cos^±_label(pt).  The antisymmetric sum is
// bitwise zero on x == y: both cosine products are built from identical
// factor values there and cancel exactly.
inline double eval_cosine_interpolant(const CosineSpectrum& sp, Point2 pt) {
  double acc = 0.0;
  bool anti = is_antisymmetric(sp.family);
  auto pairs = sp.dominant_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    FrequencyPair label = sp.label(pairs[i].k, pairs[i].l);
    acc += sp.coeffs[i] * (anti ? eval_cos_anti_real(label, pt)
                                : eval_cos_sym_real(label, pt));
  }
  return acc;
}

// Separable row evaluator, cosine analogue of InterpRowEvaluator: the
// interpolant becomes sum_{k,l} Q_kl cos(pi lab_k x) cos(pi lab_l y) with Q
// the (anti)symmetrized coefficient matrix.
class CosineRowEvaluator {
 public:
  using value_type = double;

  CosineRowEvaluator(const CosineSpectrum& sp, std::vector<double> coords)
      : coords_(std::move(coords)) {
    bool anti = is_antisymmetric(sp.family);
    bool half = detail::cosine_shape(sp.variant).half_labels;
    span_ = sp.index_top() + 1;
    q_.assign(static_cast<std::size_t>(span_) * span_, 0.0);
    for (int k = 0; k < span_; ++k)
      for (int l = 0; l <= (anti ? k - 1 : k); ++l) {
        double c = sp.at(k, l);
        if (anti) {
          q_[idx(k, l)] = c;
          q_[idx(l, k)] = -c;
        } else {
          q_[idx(l, k)] = c;
          q_[idx(k, l)] = k == l ? 2.0 * c : c;
        }
      }
    table_.resize(coords_.size() * static_cast<std::size_t>(span_));
    for (std::size_t i = 0; i < coords_.size(); ++i)
      for (int k = 0; k < span_; ++k) {
        double lab = half ? k + 0.5 : k;
        table_[i * span_ + k] = std::cos(std::numbers::pi * lab * coords_[i]);
      }
  }

  std::size_t size() const { return coords_.size(); }

  void eval_row(std::size_t j, std::vector<double>& out) const {
    const double* cy = &table_[j * span_];
    std::vector<double> mix(span_);
    for (int k = 0; k < span_; ++k) {
      double acc = 0.0;
      for (int l = 0; l < span_; ++l) acc += q_[idx(k, l)] * cy[l];
      mix[k] = acc;
    }
    out.resize(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const double* cx = &table_[i * span_];
      double acc = 0.0;
      for (int k = 0; k < span_; ++k) acc += cx[k] * mix[k];
      out[i] = acc;
    }
  }

 private:
  std::size_t idx(int k, int l) const {
    return static_cast<std::size_t>(k) * span_ + l;
  }

  int span_ = 0;
  std::vector<double> q_;
  std::vector<double> coords_;
  std::vector<double> table_;
};

// E_L f: even reflection of f about both axes, from the L-square to the
// 2L-square.
template <class F>
auto extend_even(F f) {
  return [f](Point2 p) { return f(Point2{std::abs(p.x), std::abs(p.y)}); };
}

// Rf: odd reflection about x = 1 and y = 1, from the unit square to [0,2]^2.
template <class F>
auto extend_R(F f) {
  return [f](Point2 p) {
    double sign = 1.0;
    double x = p.x, y = p.y;
    if (x > 1.0) {
      x = 2.0 - x;
      sign = -sign;
    }
    if (y > 1.0) {
      y = 2.0 - y;
      sign = -sign;
    }
    return sign * f(Point2{x, y});
  };
}

// Verification path for the cosine transforms: extend f (antisymmetric or
// symmetric about the diagonal, then evenly about the axes, with the
// odd-about-1 reflection first for variants III/IV), sample the extension on
// the matching big grid, run the real trigonometric form, demand that the
// sin-carrying arrays vanish, and read the surviving cos-cos coefficients off
// as the cosine spectrum.
template <class F>
CosineSpectrum derive_from_trig(F f, CosineVariant variant, Family family, int m_points) {
  if (is_exponential(family))
    throw std::invalid_argument("derive_from_trig: family must be cos-anti or cos-sym");
  if (m_points < 1) throw std::invalid_argument("derive_from_trig: M must be >= 1");
  bool anti = is_antisymmetric(family);
  bool quad = variant == CosineVariant::III || variant == CosineVariant::IV;
  bool half = detail::cosine_shape(variant).half_shift;

  // big sampling grid carrying the reflected function
  GridSpec big{quad ? -2.0 : -1.0, half ? 0.5 : 1.0,
               (quad ? 4 : 2) * m_points, quad ? 4.0 : 2.0};

  // The reflections map every big-grid node onto a base node, the diagonal,
  // or the odd-reflection seam.  Fold the node *indices* in integer
  // arithmetic: coordinates of distinct nodes that meet under the fold (such
  // as x = 1/3 and y = -1/3) are not always bitwise negations of each other,
  // so a coordinate-based fold misclassifies diagonal and seam hits.
  auto fold = [&](int m) -> std::pair<int, int> {  // {sign, base index}; sign 0 pins zero
    if (!quad) {
      if (half) {
        int i = m - m_points;  // x = (i + 1/2) / M
        return {1, i >= 0 ? i : -i - 1};
      }
      return {1, std::abs(m + 1 - m_points)};  // x = i / M
    }
    if (half) {
      int h = std::abs(2 * (m - 2 * m_points) + 1);  // |x| * 2M, odd
      if (h < 2 * m_points) return {1, (h - 1) / 2};
      return {-1, (4 * m_points - h - 1) / 2};  // odd about x = 1
    }
    int i = std::abs(m + 1 - 2 * m_points);  // |x| * M
    if (i == m_points) return {0, 0};        // seam x = 1; the odd reflection pins 0
    if (i < m_points) return {1, i};
    return {-1, 2 * m_points - i};  // odd about x = 1 (x = 2 folds onto 0)
  };
  auto base_coord = [&](int j) { return (j + (half ? 0.5 : 0.0)) / m_points; };
  auto folded_value = [&](int mi, int ni) -> double {
    auto [sx, jx] = fold(mi);
    auto [sy, jy] = fold(ni);
    if (sx == 0 || sy == 0) return 0.0;
    double sign = sx * sy;
    if (jx == jy && anti) return 0.0;
    if (jx < jy) {
      std::swap(jx, jy);
      if (anti) sign = -sign;
    }
    return sign * f(Point2{base_coord(jx), base_coord(jy)});
  };

  SampleSet samples{big, anti ? GridKind::anti : GridKind::sym, {}};
  auto nodes = make_grid(big, samples.kind);
  samples.values.reserve(nodes.size());
  for (const auto& p : nodes) samples.values.push_back(folded_value(p.m, p.n));
  auto tf = trig_form(samples);

  // reflection symmetry must kill every sin-bearing term, and for the reduced
  // variants the dropped cos-cos indices too (k = M for II, even k for III/IV)
  double a_scale = 0.0;
  for (double v : tf.a) a_scale = std::max(a_scale, std::abs(v));
  double tol = 1e-9 * std::max(1.0, a_scale);
  auto a_dropped = [&](int k, int l) {
    if (variant == CosineVariant::II) return k == tf.m_half || l == tf.m_half;
    if (quad) return k % 2 == 0 || l % 2 == 0;
    return false;
  };
  for (int k = 0; k <= tf.m_half; ++k)
    for (int l = 0; l <= k; ++l) {
      std::size_t at = tf.index_of(k, l);
      double stray = std::max(std::max(std::abs(tf.b[at]), std::abs(tf.c[at])),
                              std::abs(tf.d[at]));
      if (a_dropped(k, l)) stray = std::max(stray, std::abs(tf.a[at]));
      if (stray > tol)
        throw std::runtime_error("derive_from_trig: extension symmetry violated");
    }

  CosineSpectrum out{family, variant, m_points, {}};
  auto pairs = out.dominant_pairs();
  out.coeffs.resize(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [k, l] = pairs[i];
    int kb = quad ? 2 * k + 1 : k;
    int lb = quad ? 2 * l + 1 : l;
    double w = zero_half_weight(kb) * zero_half_weight(lb) / diagonal_weight(kb, lb);
    out.coeffs[i] = w * tf.a[tf.index_of(kb, lb)];
  }
  return out;
}

}  // namespace symtrig2d
