#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "basis.hpp"
#include "grid.hpp"
#include "parallel.hpp"
#include "types.hpp"

namespace symtrig2d {

struct IndexPair {
  int k = 0;
  int l = 0;
};

// Complex samples over a triangular grid, stored in make_grid order.
struct SampleSet {
  GridSpec spec;
  GridKind kind = GridKind::anti;
  std::vector<complexd> values;
};

template <class Fn>
SampleSet sample_on_grid(Fn&& fn, const GridSpec& spec, GridKind kind) {
  SampleSet out{spec, kind, {}};
  auto pts = make_grid(spec, kind);
  out.values.reserve(pts.size());
  for (const auto& p : pts) out.values.push_back(complexd(fn(p.at)));
  return out;
}

namespace detail {

// e^{2 pi i k (a/t + (m+b)/n)} for k in [0, n), m in [0, n), flattened k*n+m.
// All transform kernels are products of entries of this table.
inline std::vector<complexd> node_phase_table(const GridSpec& spec) {
  int n = spec.n;
  std::vector<complexd> tab(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m)
      tab[static_cast<std::size_t>(k) * n + m] =
          unit_phase(k * (spec.a / spec.t + (m + spec.b) / n));
  return tab;
}

inline std::size_t anti_offset(int k, int l) {
  // k > l >= 0, row-major over the strict lower triangle
  return static_cast<std::size_t>(k) * (k - 1) / 2 + l;
}

inline std::size_t sym_offset(int k, int l) {
  // k >= l >= 0
  return static_cast<std::size_t>(k) * (k + 1) / 2 + l;
}

}  // namespace detail

// Transform coefficients over the dominant pairs of one exponential family:
// strict pairs k > l for exp_anti, k >= l for exp_sym, with k,l in [0, N).
// Values at non-dominant labels follow from the label (anti)symmetry.
struct Spectrum {
  Family family = Family::exp_anti;
  GridSpec spec;
  std::vector<complexd> coeffs;  // k-major triangle order

  std::size_t size() const { return coeffs.size(); }

  complexd at(int k, int l) const {
    bool anti = is_antisymmetric(family);
    if (k < 0 || l < 0 || k >= spec.n || l >= spec.n)
      throw std::out_of_range("spectrum: pair outside [0, N)");
    if (anti) {
      if (k == l) return {0.0, 0.0};
      if (k > l) return coeffs[detail::anti_offset(k, l)];
      return -coeffs[detail::anti_offset(l, k)];
    }
    if (k >= l) return coeffs[detail::sym_offset(k, l)];
    return coeffs[detail::sym_offset(l, k)];
  }

  complexd& dominant(int k, int l) {
    bool anti = is_antisymmetric(family);
    return coeffs[anti ? detail::anti_offset(k, l) : detail::sym_offset(k, l)];
  }

  std::vector<IndexPair> dominant_pairs() const {
    bool anti = is_antisymmetric(family);
    std::vector<IndexPair> out;
    out.reserve(coeffs.size());
    for (int k = 0; k < spec.n; ++k)
      for (int l = 0; l <= (anti ? k - 1 : k); ++l) out.push_back({k, l});
    return out;
  }
};

// beta_kl = (1/N^2) sum_{m>n} f_mn conj(E^-_{(k,l)}) over the strict triangle
// of L_{a,b,N,T}, for dominant k > l in [0, N).
inline Spectrum adft_forward(const SampleSet& samples) {
  if (samples.kind != GridKind::anti)
    throw std::invalid_argument("adft: grid kind must be anti");
  const GridSpec& spec = samples.spec;
  int n = spec.n;
  if (samples.values.size() != grid_size(GridKind::anti, n))
    throw std::invalid_argument("adft: sample count does not match grid");
  auto phase = detail::node_phase_table(spec);
  auto e = [&](int k, int m) { return phase[static_cast<std::size_t>(k) * n + m]; };

  Spectrum out{Family::exp_anti, spec, std::vector<complexd>(grid_size(GridKind::anti, n))};
  auto pairs = out.dominant_pairs();
  double scale = 1.0 / (static_cast<double>(n) * n);
  for_each_index(pairs.size(), [&](std::size_t i) {
    auto [k, l] = pairs[i];
    complexd acc{};
    std::size_t idx = 0;
    for (int m = 1; m < n; ++m)
      for (int nn = 0; nn < m; ++nn)
        acc += samples.values[idx++] * std::conj(e(k, m) * e(l, nn) - e(l, m) * e(k, nn));
    out.coeffs[i] = acc * scale;
  });
  return out;
}

// f_mn = sum_{k>l} beta_kl E^-_{(k,l)} at the strict-triangle nodes.
inline SampleSet adft_inverse(const Spectrum& spectrum) {
  if (spectrum.family != Family::exp_anti)
    throw std::invalid_argument("adft: spectrum family must be exp-anti");
  const GridSpec& spec = spectrum.spec;
  int n = spec.n;
  auto phase = detail::node_phase_table(spec);
  auto e = [&](int k, int m) { return phase[static_cast<std::size_t>(k) * n + m]; };

  SampleSet out{spec, GridKind::anti, std::vector<complexd>(grid_size(GridKind::anti, n))};
  auto pts = make_grid(spec, GridKind::anti);
  auto pairs = spectrum.dominant_pairs();
  for_each_index(pts.size(), [&](std::size_t i) {
    int m = pts[i].m, nn = pts[i].n;
    complexd acc{};
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      auto [k, l] = pairs[j];
      acc += spectrum.coeffs[j] * (e(k, m) * e(l, nn) - e(l, m) * e(k, nn));
    }
    out.values[i] = acc;
  });
  return out;
}

// beta_kl = (1 / (G_kl N^2)) sum_{m>=n} G_mn^{-1} f_mn conj(E^+_{(k,l)}) over
// the closed triangle, for dominant k >= l in [0, N).
inline Spectrum sdft_forward(const SampleSet& samples) {
  if (samples.kind != GridKind::sym)
    throw std::invalid_argument("sdft: grid kind must be sym");
  const GridSpec& spec = samples.spec;
  int n = spec.n;
  if (samples.values.size() != grid_size(GridKind::sym, n))
    throw std::invalid_argument("sdft: sample count does not match grid");
  auto phase = detail::node_phase_table(spec);
  auto e = [&](int k, int m) { return phase[static_cast<std::size_t>(k) * n + m]; };

  Spectrum out{Family::exp_sym, spec, std::vector<complexd>(grid_size(GridKind::sym, n))};
  auto pairs = out.dominant_pairs();
  double scale = 1.0 / (static_cast<double>(n) * n);
  for_each_index(pairs.size(), [&](std::size_t i) {
    auto [k, l] = pairs[i];
    complexd acc{};
    std::size_t idx = 0;
    for (int m = 0; m < n; ++m)
      for (int nn = 0; nn <= m; ++nn) {
        complexd basis = e(k, m) * e(l, nn) + e(l, m) * e(k, nn);
        acc += samples.values[idx++] * std::conj(basis) / diagonal_weight(m, nn);
      }
    out.coeffs[i] = acc * scale / diagonal_weight(k, l);
  });
  return out;
}

// f_mn = sum_{k>=l} beta_kl E^+_{(k,l)}; no node weights on synthesis.
inline SampleSet sdft_inverse(const Spectrum& spectrum) {
  if (spectrum.family != Family::exp_sym)
    throw std::invalid_argument("sdft: spectrum family must be exp-sym");
  const GridSpec& spec = spectrum.spec;
  int n = spec.n;
  auto phase = detail::node_phase_table(spec);
  auto e = [&](int k, int m) { return phase[static_cast<std::size_t>(k) * n + m]; };

  SampleSet out{spec, GridKind::sym, std::vector<complexd>(grid_size(GridKind::sym, n))};
  auto pts = make_grid(spec, GridKind::sym);
  auto pairs = spectrum.dominant_pairs();
  for_each_index(pts.size(), [&](std::size_t i) {
    int m = pts[i].m, nn = pts[i].n;
    complexd acc{};
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      auto [k, l] = pairs[j];
      acc += spectrum.coeffs[j] * (e(k, m) * e(l, nn) + e(l, m) * e(k, nn));
    }
    out.values[i] = acc;
  });
  return out;
}

// Weighted inner-product sum behind the transforms:
//   anti: sum_{m>n}  E^-_p conj(E^-_q)            -> N^2 delta_pq
//   sym:  sum_{m>=n} G_mn^{-1} E^+_p conj(E^+_q)  -> G_p N^2 delta_pq
// for dominant pairs with labels in [0, N), or in [-M, M] when N = 2M+1.
inline complexd check_discrete_orthogonality(const GridSpec& spec, GridKind kind,
                                             IndexPair p, IndexPair q) {
  spec.validate();
  if (kind == GridKind::full)
    throw std::invalid_argument("orthogonality: grid kind must be anti or sym");
  bool anti = kind == GridKind::anti;
  auto dominant_ok = [&](IndexPair r) {
    if (anti ? r.k <= r.l : r.k < r.l) return false;
    bool plain = r.l >= 0 && r.k < spec.n;
    int m_half = (spec.n - 1) / 2;
    bool centered = spec.n % 2 == 1 && r.l >= -m_half && r.k <= m_half;
    return plain || centered;
  };
  if (!dominant_ok(p) || !dominant_ok(q))
    throw std::out_of_range("orthogonality: pair outside the dominant range");

  auto pts = make_grid(spec, kind);
  auto eval = [&](IndexPair r, Point2 at) {
    Point2 scaled{at.x / spec.t, at.y / spec.t};
    FrequencyPair fp = freq_pair(r.k, r.l);
    return anti ? eval_exp_anti(fp, scaled) : eval_exp_sym(fp, scaled);
  };
  return sum_terms<complexd>(pts.size(), [&](std::size_t i) {
    complexd term = eval(p, pts[i].at) * std::conj(eval(q, pts[i].at));
    if (!anti) term /= diagonal_weight(pts[i].m, pts[i].n);
    return term;
  });
}

}  // namespace symtrig2d
