#include <symtrig2d/analysis.hpp>
#include <symtrig2d/basis.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace symtrig2d;

namespace {

std::mt19937 rng(20260814);

Point2 random_point(double lo = -2.0, double hi = 2.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  return {d(rng), d(rng)};
}

}  // namespace

TEST(Basis, PinnedValues) {
  // e^{pi i} - e^0 = -2
  complexd v = eval_exp_anti(freq_pair(1, 0), {0.5, 0.0});
  EXPECT_NEAR(v.real(), -2.0, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);

  // both terms are e^0
  v = eval_exp_sym(freq_pair(0, 0), {0.37, -1.2});
  EXPECT_NEAR(v.real(), 2.0, 1e-15);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);

  // cos(pi)cos(0) - cos(0)cos(0) = -2
  EXPECT_NEAR(eval_cos_anti_real(freq_pair(1, 0), {1.0, 0.0}), -2.0, 1e-15);
  // cos(pi)cos(0) + cos(0)cos(0) = 0
  EXPECT_NEAR(eval_cos_sym_real(freq_pair(1, 0), {1.0, 0.0}), 0.0, 1e-15);
}

TEST(Basis, ArgumentSwapSymmetry) {
  for (int trial = 0; trial < 20; ++trial) {
    Point2 p = random_point();
    Point2 swapped{p.y, p.x};
    FrequencyPair fp = freq_pair(rng() % 5, rng() % 5);
    complexd anti = eval_exp_anti(fp, p);
    EXPECT_LT(std::abs(eval_exp_anti(fp, swapped) + anti), 1e-12);
    complexd sym = eval_exp_sym(fp, p);
    EXPECT_LT(std::abs(eval_exp_sym(fp, swapped) - sym), 1e-12);
    EXPECT_NEAR(eval_cos_anti_real(fp, swapped), -eval_cos_anti_real(fp, p), 1e-12);
    EXPECT_NEAR(eval_cos_sym_real(fp, swapped), eval_cos_sym_real(fp, p), 1e-12);
  }
}

TEST(Basis, LabelSwapSymmetry) {
  for (int trial = 0; trial < 20; ++trial) {
    Point2 p = random_point();
    int k = static_cast<int>(rng() % 5), l = static_cast<int>(rng() % 5);
    FrequencyPair kl = freq_pair(k, l), lk = freq_pair(l, k);
    EXPECT_LT(std::abs(eval_exp_anti(lk, p) + eval_exp_anti(kl, p)), 1e-12);
    EXPECT_LT(std::abs(eval_exp_sym(lk, p) - eval_exp_sym(kl, p)), 1e-12);
    EXPECT_NEAR(eval_cos_anti_real(lk, p), -eval_cos_anti_real(kl, p), 1e-12);
    EXPECT_NEAR(eval_cos_sym_real(lk, p), eval_cos_sym_real(kl, p), 1e-12);
  }
}

TEST(Basis, Periodicity) {
  FrequencyPair fp = freq_pair(3, 1);
  for (int trial = 0; trial < 10; ++trial) {
    Point2 p = random_point(0.0, 1.0);
    // integer labels: E^+- has period 1 per argument, cos^+- period 2
    Point2 q{p.x + 2.0, p.y - 1.0};
    EXPECT_LT(std::abs(eval_exp_anti(fp, q) - eval_exp_anti(fp, p)), 1e-12);
    EXPECT_LT(std::abs(eval_exp_sym(fp, q) - eval_exp_sym(fp, p)), 1e-12);
    Point2 qc{p.x + 2.0, p.y - 4.0};
    EXPECT_NEAR(eval_cos_anti_real(fp, qc), eval_cos_anti_real(fp, p), 1e-11);
    EXPECT_NEAR(eval_cos_sym_real(fp, qc), eval_cos_sym_real(fp, p), 1e-11);
  }
}

TEST(Basis, DiagonalShiftPhase) {
  std::uniform_real_distribution<double> d(-1.5, 1.5);
  for (int trial = 0; trial < 25; ++trial) {
    Point2 p = random_point();
    double a = d(rng);
    int k = static_cast<int>(rng() % 6), l = static_cast<int>(rng() % 6);
    FrequencyPair fp = freq_pair(k, l);
    complexd phase = unit_phase((k + l) * a);
    Point2 shifted{p.x + a, p.y + a};
    EXPECT_LT(std::abs(eval_exp_anti(fp, shifted) - phase * eval_exp_anti(fp, p)), 1e-12);
    EXPECT_LT(std::abs(eval_exp_sym(fp, shifted) - phase * eval_exp_sym(fp, p)), 1e-12);
  }
}

TEST(Basis, CosineSignInvariance) {
  for (int trial = 0; trial < 20; ++trial) {
    Point2 p = random_point();
    int k = static_cast<int>(rng() % 5), l = static_cast<int>(rng() % 5);
    FrequencyPair fp = freq_pair(k, l);
    FrequencyPair fn = freq_pair(-k, l);
    for (Point2 q : {Point2{-p.x, p.y}, Point2{p.x, -p.y}, Point2{-p.x, -p.y}}) {
      EXPECT_NEAR(eval_cos_anti_real(fp, q), eval_cos_anti_real(fp, p), 1e-12);
      EXPECT_NEAR(eval_cos_sym_real(fp, q), eval_cos_sym_real(fp, p), 1e-12);
    }
    EXPECT_NEAR(eval_cos_anti_real(fn, p), eval_cos_anti_real(fp, p), 1e-12);
    EXPECT_NEAR(eval_cos_sym_real(fn, p), eval_cos_sym_real(fp, p), 1e-12);
  }
}

TEST(Basis, VanishesOnDiagonal) {
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    double t = d(rng);
    FrequencyPair fp = freq_pair(static_cast<int>(rng() % 6), static_cast<int>(rng() % 6));
    EXPECT_LE(std::abs(eval_exp_anti(fp, {t, t})), 1e-8);
    EXPECT_LE(std::abs(eval_cos_anti_real(fp, {t, t})), 1e-8);
  }
  // equal labels kill the antisymmetric families everywhere
  Point2 p = random_point();
  EXPECT_LE(std::abs(eval_exp_anti(freq_pair(3, 3), p)), 1e-8);
  EXPECT_LE(std::abs(eval_cos_anti_real(freq_pair(2, 2), p)), 1e-8);
}

TEST(Basis, NeumannBoundary) {
  // central difference along the outward normal, h small enough that the
  // O(h^2) truncation sits far below the 1e-8 gate
  double h = 1e-6;
  auto normal_derivative = [&](auto&& f, Point2 p, double nx, double ny) {
    return (f(Point2{p.x + h * nx, p.y + h * ny}) -
            f(Point2{p.x - h * nx, p.y - h * ny})) /
           (2.0 * h);
  };
  double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= k; ++l) {
      FrequencyPair fp = freq_pair(k, l);
      auto plus = [&](Point2 p) { return eval_cos_sym_real(fp, p); };
      auto minus = [&](Point2 p) { return eval_cos_anti_real(fp, p); };
      // cos^+ : Neumann on all three borders of the triangle
      EXPECT_LE(std::abs(normal_derivative(plus, {0.7, 0.7}, inv_sqrt2, -inv_sqrt2)), 1e-8);
      EXPECT_LE(std::abs(normal_derivative(plus, {0.4, 0.0}, 0.0, -1.0)), 1e-8);
      EXPECT_LE(std::abs(normal_derivative(plus, {1.0, 0.3}, 1.0, 0.0)), 1e-8);
      // cos^- : Neumann on y=0 and x=1 (it vanishes on x=y instead)
      EXPECT_LE(std::abs(normal_derivative(minus, {0.4, 0.0}, 0.0, -1.0)), 1e-8);
      EXPECT_LE(std::abs(normal_derivative(minus, {1.0, 0.3}, 1.0, 0.0)), 1e-8);
    }
}

TEST(Basis, LaplaceEigenvalues) {
  double h = 1e-3;
  struct Case {
    Family family;
    int k, l;
    Point2 pt;
  };
  for (const Case& c : {Case{Family::exp_anti, 2, 1, {0.6, 0.2}},
                        Case{Family::exp_sym, 3, 0, {0.55, 0.1}},
                        Case{Family::cos_anti, 1, 0, {0.5, 0.25}},
                        Case{Family::cos_sym, 2, 2, {0.8, 0.3}}}) {
    FrequencyPair fp = freq_pair(c.k, c.l);
    double eig = laplace_eigenvalue(c.family, fp);
    EXPECT_LE(laplace_residual(c.family, fp, c.pt, h), 1e-4 * (1.0 + std::abs(eig)));
  }
  // constant: cos^+_{(0,0)} = 2, eigenvalue 0
  EXPECT_EQ(laplace_eigenvalue(Family::cos_sym, freq_pair(0, 0)), 0.0);
  EXPECT_LE(laplace_residual(Family::cos_sym, freq_pair(0, 0), {0.6, 0.2}, h), 1e-8);
}

TEST(Basis, MixedDerivativeEigenvalues) {
  // the 1/h^4 stencil leaves rounding noise of order eps/h^4; budget for it
  double h = 1e-3;
  double noise_floor = 40.0 * std::numeric_limits<double>::epsilon() / (h * h * h * h);
  for (Family family : {Family::exp_anti, Family::exp_sym, Family::cos_anti,
                        Family::cos_sym}) {
    for (auto [k, l] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{1, 0}}) {
      FrequencyPair fp = freq_pair(k, l);
      double eig = mixed_derivative_eigenvalue(family, fp);
      double budget = 1e-4 * (1.0 + eig) + noise_floor;
      EXPECT_LE(mixed_derivative_residual(family, fp, {0.6, 0.2}, h), budget)
          << "family " << static_cast<int>(family) << " (" << k << "," << l << ")";
    }
  }
}

TEST(Basis, HalfIntegerLabels) {
  // Freq stores doubled values exactly
  Freq f = Freq::half_offset(1);
  EXPECT_EQ(f.twice(), 3);
  EXPECT_FALSE(f.integral());
  EXPECT_EQ(f.value(), 1.5);
  EXPECT_EQ(Freq::integer(2).value(), 2.0);

  // cos^- at (k+1/2, l+1/2) labels still vanishes on the diagonal
  FrequencyPair fp = freq_pair_half(2, 0);
  EXPECT_LE(std::abs(eval_cos_anti_real(fp, {0.37, 0.37})), 1e-12);
}
