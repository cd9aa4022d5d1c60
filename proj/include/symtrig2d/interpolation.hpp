#pragma once

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "grid.hpp"
#include "parallel.hpp"
#include "transforms.hpp"
#include "types.hpp"

namespace symtrig2d {

enum class InterpFamily { full, anti, sym };

namespace detail {

// e^{2 pi i k (a/t + (m+b)/n)} for k in [k_min, k_max], m in [0, n).
struct SignedPhaseTable {
  int k_min = 0;
  int n = 0;
  std::vector<complexd> tab;

  SignedPhaseTable(const GridSpec& spec, int kmin, int kmax)
      : k_min(kmin), n(spec.n), tab(static_cast<std::size_t>(kmax - kmin + 1) * spec.n) {
    for (int k = kmin; k <= kmax; ++k)
      for (int m = 0; m < n; ++m)
        tab[static_cast<std::size_t>(k - kmin) * n + m] =
            unit_phase(k * (spec.a / spec.t + (m + spec.b) / n));
  }

  complexd operator()(int k, int m) const {
    return tab[static_cast<std::size_t>(k - k_min) * n + m];
  }
};

}  // namespace detail

// Interpolation coefficients c_{kl} over k,l in [-M, M].  For even N = 2M the
// first row/column (index -M) is determined by the tau_N coupling conditions
// and is not stored; at() materializes those entries on demand.  Stored free
// sets: full {-M+1..M}^2, anti l < k, sym l <= k (lower bound -M for odd N).
struct InterpCoefficients {
  InterpFamily family = InterpFamily::full;
  GridSpec spec;
  int m_half = 0;  // M with N = 2M+1 (odd) or N = 2M (even)
  bool even = false;
  complexd tau{1.0, 0.0};  // e^{2 pi i (N a / T + b)}
  std::vector<complexd> values;

  int low() const { return even ? -m_half + 1 : -m_half; }

  std::size_t index_of(int k, int l) const {
    int lo = low();
    std::size_t p = static_cast<std::size_t>(k - lo);
    std::size_t q = static_cast<std::size_t>(l - lo);
    switch (family) {
      case InterpFamily::full: return p * static_cast<std::size_t>(m_half - lo + 1) + q;
      case InterpFamily::anti: return p * (p - 1) / 2 + q;
      default: return p * (p + 1) / 2 + q;
    }
  }

  static std::size_t count(InterpFamily family, int m_half, bool even) {
    std::size_t span = static_cast<std::size_t>(even ? 2 * m_half : 2 * m_half + 1);
    switch (family) {
      case InterpFamily::full: return span * span;
      case InterpFamily::anti: return span * (span - 1) / 2;
      default: return span * (span + 1) / 2;
    }
  }

  // c_{kl} for any k,l in [-M, M]; non-dominant and constrained entries are
  // resolved through the label symmetry and the tau_N conditions.
  complexd at(int k, int l) const {
    if (k < -m_half || k > m_half || l < -m_half || l > m_half)
      throw std::out_of_range("interp: pair outside [-M, M]");
    switch (family) {
      case InterpFamily::full:
        if (even && k == -m_half) return tau * at(m_half, l);
        if (even && l == -m_half) return tau * at(k, m_half);
        return values[index_of(k, l)];
      case InterpFamily::anti:
        if (k == l) return {0.0, 0.0};
        if (k < l) return -at(l, k);
        if (even && l == -m_half)
          return k == m_half ? complexd{0.0, 0.0} : -tau * at(m_half, k);
        return values[index_of(k, l)];
      default:
        if (k < l) std::swap(k, l);
        if (even && l == -m_half) {
          // the tau coupling lives on the full-equivalent matrix rows; the
          // G_{kk} = 2 convention on dominant pairs doubles the (M, -M)
          // corner and halves it back at (-M, -M)
          if (k == m_half) return 2.0 * tau * values[index_of(m_half, m_half)];
          if (k == -m_half) return tau * tau * values[index_of(m_half, m_half)];
          return tau * at(m_half, k);
        }
        return values[index_of(k, l)];
    }
  }

  // Full-equivalent coefficient matrix F with Sum_{k,l} F_{kl} e_k(x) e_l(y)
  // equal to the interpolant; antisymmetric with zero diagonal for `anti`,
  // symmetric with the diagonal carrying the G_{kk} = 2 factor for `sym`.
  // Row-major over k,l in [-M, M], i.e. F[(k+M)*(2M+1) + (l+M)].
  std::vector<complexd> expand() const {
    int span = 2 * m_half + 1;
    std::vector<complexd> f(static_cast<std::size_t>(span) * span);
    for (int k = -m_half; k <= m_half; ++k)
      for (int l = -m_half; l <= m_half; ++l) {
        complexd v = at(k, l);
        if (family == InterpFamily::sym && k == l) v *= 2.0;
        f[static_cast<std::size_t>(k + m_half) * span + (l + m_half)] = v;
      }
    return f;
  }

  std::vector<IndexPair> free_pairs() const {
    std::vector<IndexPair> out;
    out.reserve(values.size());
    int lo = low();
    for (int k = lo; k <= m_half; ++k) {
      if (family == InterpFamily::full)
        for (int l = lo; l <= m_half; ++l) out.push_back({k, l});
      else
        for (int l = lo; l <= (family == InterpFamily::anti ? k - 1 : k); ++l)
          out.push_back({k, l});
    }
    return out;
  }
};

namespace detail {

struct InterpShape {
  int m_half;
  bool even;
  complexd tau;
};

inline InterpShape interp_shape(const GridSpec& spec) {
  bool even = spec.n % 2 == 0;
  int m_half = even ? spec.n / 2 : (spec.n - 1) / 2;
  return {m_half, even, unit_phase(spec.n * spec.a / spec.t + spec.b)};
}

}  // namespace detail

// c_{kl} = g g (1/N^2) sum_{m,n} f_mn e^{-2 pi i k x_m / T} e^{-2 pi i l y_n / T}
// over all N^2 nodes; the g factors halve |k| = M entries for even N only.
inline InterpCoefficients interp_full(const SampleSet& samples) {
  if (samples.kind != GridKind::full)
    throw std::invalid_argument("interp_full: grid kind must be full");
  const GridSpec& spec = samples.spec;
  int n = spec.n;
  if (samples.values.size() != grid_size(GridKind::full, n))
    throw std::invalid_argument("interp_full: sample count does not match grid");
  auto [m_half, even, tau] = detail::interp_shape(spec);

  InterpCoefficients out{InterpFamily::full, spec, m_half, even, tau, {}};
  out.values.resize(InterpCoefficients::count(InterpFamily::full, m_half, even));
  detail::SignedPhaseTable e(spec, out.low(), m_half);
  double inv_n2 = 1.0 / (static_cast<double>(n) * n);
  auto pairs = out.free_pairs();
  for_each_index(pairs.size(), [&, m_half = m_half, even = even](std::size_t i) {
    auto [k, l] = pairs[i];
    complexd acc{};
    std::size_t idx = 0;
    for (int m = 0; m < n; ++m)
      for (int nn = 0; nn < n; ++nn)
        acc += samples.values[idx++] * std::conj(e(k, m) * e(l, nn));
    double g = even ? even_edge_weight(k, m_half) * even_edge_weight(l, m_half) : 1.0;
    out.values[out.index_of(k, l)] = acc * (g * inv_n2);
  });
  return out;
}

// c^-_{kl} = g g (1/N^2) sum_{m>n} f_mn conj(E^-_{(k,l)}) over the strict
// triangle, for the free dominant pairs l < k.
inline InterpCoefficients interp_anti(const SampleSet& samples) {
  if (samples.kind != GridKind::anti)
    throw std::invalid_argument("interp_anti: grid kind must be anti");
  const GridSpec& spec = samples.spec;
  int n = spec.n;
  if (samples.values.size() != grid_size(GridKind::anti, n))
    throw std::invalid_argument("interp_anti: sample count does not match grid");
  auto [m_half, even, tau] = detail::interp_shape(spec);

  InterpCoefficients out{InterpFamily::anti, spec, m_half, even, tau, {}};
  out.values.resize(InterpCoefficients::count(InterpFamily::anti, m_half, even));
  detail::SignedPhaseTable e(spec, out.low(), m_half);
  double inv_n2 = 1.0 / (static_cast<double>(n) * n);
  auto pairs = out.free_pairs();
  for_each_index(pairs.size(), [&, m_half = m_half, even = even](std::size_t i) {
    auto [k, l] = pairs[i];
    complexd acc{};
    std::size_t idx = 0;
    for (int m = 1; m < n; ++m)
      for (int nn = 0; nn < m; ++nn)
        acc += samples.values[idx++] * std::conj(e(k, m) * e(l, nn) - e(l, m) * e(k, nn));
    double g = even ? even_edge_weight(k, m_half) * even_edge_weight(l, m_half) : 1.0;
    out.values[out.index_of(k, l)] = acc * (g * inv_n2);
  });
  return out;
}

// c^+_{kl} = g g (1 / (G_kl N^2)) sum_{m>=n} G_mn^{-1} f_mn conj(E^+_{(k,l)})
// over the closed triangle, for the free dominant pairs l <= k.
inline InterpCoefficients interp_sym(const SampleSet& samples) {
  if (samples.kind != GridKind::sym)
    throw std::invalid_argument("interp_sym: grid kind must be sym");
  const GridSpec& spec = samples.spec;
  int n = spec.n;
  if (samples.values.size() != grid_size(GridKind::sym, n))
    throw std::invalid_argument("interp_sym: sample count does not match grid");
  auto [m_half, even, tau] = detail::interp_shape(spec);

  InterpCoefficients out{InterpFamily::sym, spec, m_half, even, tau, {}};
  out.values.resize(InterpCoefficients::count(InterpFamily::sym, m_half, even));
  detail::SignedPhaseTable e(spec, out.low(), m_half);
  double inv_n2 = 1.0 / (static_cast<double>(n) * n);
  auto pairs = out.free_pairs();
  for_each_index(pairs.size(), [&, m_half = m_half, even = even](std::size_t i) {
    auto [k, l] = pairs[i];
    complexd acc{};
    std::size_t idx = 0;
    for (int m = 0; m < n; ++m)
      for (int nn = 0; nn <= m; ++nn) {
        complexd basis = e(k, m) * e(l, nn) + e(l, m) * e(k, nn);
        acc += samples.values[idx++] * std::conj(basis) / diagonal_weight(m, nn);
      }
    double g = even ? even_edge_weight(k, m_half) * even_edge_weight(l, m_half) : 1.0;
    out.values[out.index_of(k, l)] = acc * (g * inv_n2 / diagonal_weight(k, l));
  });
  return out;
}

// Index remap from transform coefficients beta (labels in [0, N)) to the
// centered interpolation labels in [-M, M]: labels above M fold down by N and
// pick up tau_N phases; g factors halve the |k| = M entries when N is even.
inline InterpCoefficients beta_to_c(const Spectrum& sp) {
  const GridSpec& spec = sp.spec;
  int n = spec.n;
  auto [m_half, even, tau] = detail::interp_shape(spec);
  bool anti = is_antisymmetric(sp.family);

  InterpCoefficients out{anti ? InterpFamily::anti : InterpFamily::sym,
                         spec, m_half, even, tau, {}};
  out.values.resize(InterpCoefficients::count(out.family, m_half, even));
  complexd tau2 = tau * tau;
  int m = m_half;
  auto g = [&, even = even](int k) { return even ? even_edge_weight(k, m) : 1.0; };
  // top edge of the folding for the mixed/negative blocks: M-1 when the
  // even-N constraints own the -M column, M itself for odd N
  int edge = even ? m - 1 : m;

  if (anti) {
    for (int k = 1; k <= m; ++k)
      for (int l = 0; l < k; ++l)
        out.values[out.index_of(k, l)] = g(k) * g(l) * sp.at(k, l);
    for (int k = 0; k <= m; ++k)
      for (int l = 1; l <= edge; ++l)
        out.values[out.index_of(k, -l)] = -g(k) * tau * sp.at(n - l, k);
    for (int k = 1; k <= edge; ++k)
      for (int l = k + 1; l <= edge; ++l)
        out.values[out.index_of(-k, -l)] = tau2 * sp.at(n - k, n - l);
  } else {
    for (int k = 0; k <= m; ++k)
      for (int l = 0; l <= k; ++l)
        out.values[out.index_of(k, l)] = g(k) * g(l) * sp.at(k, l);
    for (int k = 0; k <= m; ++k)
      for (int l = 1; l <= edge; ++l)
        out.values[out.index_of(k, -l)] = g(k) * tau * sp.at(n - l, k);
    for (int k = 1; k <= edge; ++k)
      for (int l = k; l <= edge; ++l)
        out.values[out.index_of(-k, -l)] = tau2 * sp.at(n - k, n - l);
  }
  return out;
}

namespace detail {

inline std::vector<complexd> point_phases(double coord_over_t, int m_half) {
  std::vector<complexd> e(static_cast<std::size_t>(2 * m_half + 1));
  for (int k = -m_half; k <= m_half; ++k) e[k + m_half] = unit_phase(k * coord_over_t);
  return e;
}

}  // namespace detail

// psi(x, y) as the finite sum over k,l in [-M, M], grouped by dominant pair.
// The antisymmetric sum pairs each term with its swapped twin, so it is
// exactly zero (in floating point, not just approximately) whenever x == y.
inline complexd eval_interpolant(const InterpCoefficients& c, Point2 pt) {
  int m = c.m_half;
  auto ex = detail::point_phases(pt.x / c.spec.t, m);
  auto ey = detail::point_phases(pt.y / c.spec.t, m);
  complexd acc{};
  switch (c.family) {
    case InterpFamily::full:
      for (int k = -m; k <= m; ++k)
        for (int l = -m; l <= m; ++l) acc += c.at(k, l) * ex[k + m] * ey[l + m];
      return acc;
    case InterpFamily::anti:
      for (int k = -m; k <= m; ++k)
        for (int l = -m; l < k; ++l)
          acc += c.at(k, l) * (ex[k + m] * ey[l + m] - ex[l + m] * ey[k + m]);
      return acc;
    default:
      for (int k = -m; k <= m; ++k)
        for (int l = -m; l <= k; ++l)
          acc += c.at(k, l) * (ex[k + m] * ey[l + m] + ex[l + m] * ey[k + m]);
      return acc;
  }
}

// Separable evaluator for dense rasters: psi on a row y = const costs O(M^2)
// once plus O(M) per point.  Thread-safe after construction.
class InterpRowEvaluator {
 public:
  using value_type = complexd;

  InterpRowEvaluator(const InterpCoefficients& c, std::vector<double> coords)
      : m_(c.m_half), t_(c.spec.t), full_(c.expand()), coords_(std::move(coords)) {
    int span = 2 * m_ + 1;
    phases_.resize(coords_.size() * static_cast<std::size_t>(span));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      auto e = detail::point_phases(coords_[i] / t_, m_);
      std::copy(e.begin(), e.end(), phases_.begin() + i * static_cast<std::size_t>(span));
    }
  }

  std::size_t size() const { return coords_.size(); }
  double coord(std::size_t i) const { return coords_[i]; }

  // out[i] = psi(coords[i], coords[j]) for all i
  void eval_row(std::size_t j, std::vector<complexd>& out) const {
    int span = 2 * m_ + 1;
    const complexd* py = &phases_[j * static_cast<std::size_t>(span)];
    std::vector<complexd> row_mix(span);
    for (int k = 0; k < span; ++k) {
      complexd acc{};
      for (int l = 0; l < span; ++l)
        acc += full_[static_cast<std::size_t>(k) * span + l] * py[l];
      row_mix[k] = acc;
    }
    out.resize(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      const complexd* px = &phases_[i * static_cast<std::size_t>(span)];
      complexd acc{};
      for (int k = 0; k < span; ++k) acc += px[k] * row_mix[k];
      out[i] = acc;
    }
  }

 private:
  int m_;
  double t_;
  std::vector<complexd> full_;
  std::vector<double> coords_;
  std::vector<complexd> phases_;
};

// Real trigonometric form: psi = Sum_{0<=l<=k<=M} h_k h_l G_kl^{-1} [bracket]
// with the bracket combining cos/sin products of both orderings with the
// family sign.  A, B, C, D are real for real samples; max_imag records the
// largest imaginary residue dropped during assembly.
struct TrigFormCoefficients {
  InterpFamily family = InterpFamily::anti;
  GridSpec spec;
  int m_half = 0;
  std::vector<double> a, b, c, d;  // 0 <= l <= k <= M, index k(k+1)/2 + l
  double max_imag = 0.0;

  std::size_t index_of(int k, int l) const {
    return static_cast<std::size_t>(k) * (k + 1) / 2 + l;
  }
};

// Explicit sums straight from the samples: (2/N)^2 times the antisymmetrized
// cos/sin products (anti), or (2/N)^2 times the symmetrized ones with
// G_mn^{-1} node weights (sym); g factors for even N.  The stored values
// follow the tensor-assembly convention of assemble_trig_form, so the two
// routes are directly comparable and eval_trig_form weights diagonal quarter
// entries with G_kl^{-1} for both families.
inline TrigFormCoefficients trig_form(const SampleSet& samples) {
  if (samples.kind == GridKind::full)
    throw std::invalid_argument("trig_form: grid kind must be anti or sym");
  bool anti = samples.kind == GridKind::anti;
  const GridSpec& spec = samples.spec;
  int n = spec.n;
  if (samples.values.size() != grid_size(samples.kind, n))
    throw std::invalid_argument("trig_form: sample count does not match grid");
  auto [m_half, even, tau] = detail::interp_shape(spec);
  (void)tau;

  TrigFormCoefficients out{anti ? InterpFamily::anti : InterpFamily::sym, spec, m_half,
                           {}, {}, {}, {}, 0.0};
  std::size_t quarter = static_cast<std::size_t>(m_half + 1) * (m_half + 2) / 2;
  out.a.resize(quarter);
  out.b.resize(quarter);
  out.c.resize(quarter);
  out.d.resize(quarter);

  // cs[k*n+m] = cos(2 pi k x_m / T), sn likewise
  std::vector<double> cs(static_cast<std::size_t>(m_half + 1) * n);
  std::vector<double> sn(cs.size());
  for (int k = 0; k <= m_half; ++k)
    for (int m = 0; m < n; ++m) {
      double arg = two_pi * k * (spec.a / spec.t + (m + spec.b) / n);
      cs[static_cast<std::size_t>(k) * n + m] = std::cos(arg);
      sn[static_cast<std::size_t>(k) * n + m] = std::sin(arg);
    }
  auto ct = [&](int k, int m) { return cs[static_cast<std::size_t>(k) * n + m]; };
  auto st = [&](int k, int m) { return sn[static_cast<std::size_t>(k) * n + m]; };

  std::vector<IndexPair> pairs;
  for (int k = 0; k <= m_half; ++k)
    for (int l = 0; l <= k; ++l) pairs.push_back({k, l});

  std::vector<double> imag_residue(pairs.size(), 0.0);
  double inv_n2 = 1.0 / (static_cast<double>(n) * n);
  for_each_index(pairs.size(), [&, m_half = m_half, even = even](std::size_t i) {
    auto [k, l] = pairs[i];
    complexd sa{}, sb{}, sc{}, sd{};
    std::size_t idx = 0;
    double sign = anti ? -1.0 : 1.0;
    for (int m = anti ? 1 : 0; m < n; ++m)
      for (int nn = 0; nn <= (anti ? m - 1 : m); ++nn) {
        complexd f = samples.values[idx++];
        if (!anti) f /= diagonal_weight(m, nn);
        sa += f * (ct(k, m) * ct(l, nn) + sign * ct(l, m) * ct(k, nn));
        sb += f * (st(k, m) * ct(l, nn) + sign * ct(l, m) * st(k, nn));
        sc += f * (ct(k, m) * st(l, nn) + sign * st(l, m) * ct(k, nn));
        sd += f * (st(k, m) * st(l, nn) + sign * st(l, m) * st(k, nn));
      }
    double scale = 4.0 * inv_n2;
    if (even) scale *= even_edge_weight(k, m_half) * even_edge_weight(l, m_half);
    std::size_t at = out.index_of(k, l);
    out.a[at] = sa.real() * scale;
    out.b[at] = sb.real() * scale;
    out.c[at] = sc.real() * scale;
    out.d[at] = sd.real() * scale;
    double im = std::max(std::max(std::abs(sa.imag()), std::abs(sb.imag())),
                         std::max(std::abs(sc.imag()), std::abs(sd.imag())));
    imag_residue[i] = im * scale;
  });
  for (double r : imag_residue) out.max_imag = std::max(out.max_imag, r);
  return out;
}

// Assembly of the same arrays from the complex coefficients, via the
// full-equivalent matrix: A = F(k,l)+F(-k,l)+F(k,-l)+F(-k,-l) and the
// i-weighted combinations for B, C, D.  Used as the cross-check partner of
// trig_form's direct sums.
inline TrigFormCoefficients assemble_trig_form(const InterpCoefficients& c) {
  if (c.family == InterpFamily::full)
    throw std::invalid_argument("assemble_trig_form: family must be anti or sym");
  TrigFormCoefficients out{c.family, c.spec, c.m_half, {}, {}, {}, {}, 0.0};
  std::size_t quarter = static_cast<std::size_t>(c.m_half + 1) * (c.m_half + 2) / 2;
  out.a.resize(quarter);
  out.b.resize(quarter);
  out.c.resize(quarter);
  out.d.resize(quarter);
  auto full = c.expand();
  int m = c.m_half, span = 2 * m + 1;
  auto f = [&](int k, int l) { return full[static_cast<std::size_t>(k + m) * span + (l + m)]; };
  const complexd iu{0.0, 1.0};
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= k; ++l) {
      complexd pp = f(k, l), np = f(-k, l), pn = f(k, -l), nn = f(-k, -l);
      complexd va = pp + np + pn + nn;
      complexd vb = iu * (pp - np + pn - nn);
      complexd vc = iu * (pp + np - pn - nn);
      complexd vd = -pp + np + pn - nn;
      std::size_t at = out.index_of(k, l);
      out.a[at] = va.real();
      out.b[at] = vb.real();
      out.c[at] = vc.real();
      out.d[at] = vd.real();
      for (complexd v : {va, vb, vc, vd})
        out.max_imag = std::max(out.max_imag, std::abs(v.imag()));
    }
  return out;
}

inline double eval_trig_form(const TrigFormCoefficients& tf, Point2 pt) {
  bool anti = tf.family == InterpFamily::anti;
  double sign = anti ? -1.0 : 1.0;
  int m = tf.m_half;
  std::vector<double> cx(m + 1), sx(m + 1), cy(m + 1), sy(m + 1);
  for (int k = 0; k <= m; ++k) {
    double ax = two_pi * k * pt.x / tf.spec.t;
    double ay = two_pi * k * pt.y / tf.spec.t;
    cx[k] = std::cos(ax);
    sx[k] = std::sin(ax);
    cy[k] = std::cos(ay);
    sy[k] = std::sin(ay);
  }
  double acc = 0.0;
  for (int k = 0; k <= m; ++k)
    for (int l = 0; l <= k; ++l) {
      std::size_t at = tf.index_of(k, l);
      double bracket = tf.a[at] * (cx[k] * cy[l] + sign * cx[l] * cy[k]) +
                       tf.b[at] * (sx[k] * cy[l] + sign * cx[l] * sy[k]) +
                       tf.c[at] * (cx[k] * sy[l] + sign * sx[l] * cy[k]) +
                       tf.d[at] * (sx[k] * sy[l] + sign * sx[l] * sy[k]);
      acc += zero_half_weight(k) * zero_half_weight(l) * bracket / diagonal_weight(k, l);
    }
  return acc;
}

// Af: f on the closed lower triangle x >= y, antisymmetrically reflected
// across the diagonal.
template <class F>
auto antisym_extend(F f) {
  return [f](Point2 p) {
    using R = std::invoke_result_t<F, Point2>;
    if (p.x > p.y) return R(f(p));
    if (p.x < p.y) return R(-f(Point2{p.y, p.x}));
    return R{};
  };
}

// Sf: f reflected symmetrically, Sf(x,y) = f(max(x,y), min(x,y)).
template <class F>
auto sym_extend(F f) {
  return [f](Point2 p) {
    return p.x >= p.y ? f(p) : f(Point2{p.y, p.x});
  };
}

}  // namespace symtrig2d
