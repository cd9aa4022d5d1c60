#pragma once

#include <complex>
#include <numbers>

namespace symtrig2d {

using complexd = std::complex<double>;

inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Frequency label with denominator 1 or 2, stored as twice its value.  The
// half-integer labels of the type-III/IV cosine transforms stay exact this
// way and serialize without drift.
class Freq {
 public:
  constexpr Freq() = default;

  static constexpr Freq integer(int k) { return Freq(2 * k); }
  // k + 1/2
  static constexpr Freq half_offset(int k) { return Freq(2 * k + 1); }
  static constexpr Freq from_twice(int t) { return Freq(t); }

  constexpr int twice() const { return twice_; }
  constexpr bool integral() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * static_cast<double>(twice_); }

  friend constexpr bool operator==(Freq a, Freq b) { return a.twice_ == b.twice_; }
  friend constexpr bool operator!=(Freq a, Freq b) { return a.twice_ != b.twice_; }

 private:
  explicit constexpr Freq(int t) : twice_(t) {}
  int twice_ = 0;
};

// (lambda, mu) label of a basis function; dominance (lambda >= mu or strict)
// is a convention enforced by spectra, not by the raw evaluators.
struct FrequencyPair {
  Freq lambda;
  Freq mu;
};

constexpr FrequencyPair freq_pair(int k, int l) {
  return {Freq::integer(k), Freq::integer(l)};
}

// (k + 1/2, l + 1/2)
constexpr FrequencyPair freq_pair_half(int k, int l) {
  return {Freq::half_offset(k), Freq::half_offset(l)};
}

enum class Family { exp_anti, exp_sym, cos_anti, cos_sym };

constexpr bool is_exponential(Family f) {
  return f == Family::exp_anti || f == Family::exp_sym;
}

constexpr bool is_antisymmetric(Family f) {
  return f == Family::exp_anti || f == Family::cos_anti;
}

// Weight 2 on diagonal index pairs, 1 otherwise; shows up wherever the
// symmetric families count the diagonal once.
constexpr double diagonal_weight(int k, int l) { return k == l ? 2.0 : 1.0; }

inline double diagonal_weight(FrequencyPair p) {
  return p.lambda == p.mu ? 2.0 : 1.0;
}

// Halving weight at index zero used by the real trigonometric forms.
constexpr double zero_half_weight(int k) { return k == 0 ? 0.5 : 1.0; }

// Halving weight at the extreme frequencies |k| = M of even-N interpolation.
constexpr double even_edge_weight(int k, int m) {
  return (k == m || k == -m) ? 0.5 : 1.0;
}

// Halving weight at the boundary indices k = 0 and k = M of the cosine
// transforms.
constexpr double cos_edge_weight(int k, int m) {
  return (k == 0 || k == m) ? 0.5 : 1.0;
}

}  // namespace symtrig2d
