#include <symtrig2d/analysis.hpp>
#include <symtrig2d/basis.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace symtrig2d;

namespace {

constexpr double kPi = 3.14159265358979323846;

// reference integration errors scale like 1/R^2 for smooth integrands; the
// loose budgets below just need to separate right answers from wrong ones
constexpr double kQuadTol = 5e-3;

double gaussian_on_diagonal_max(const StripSpec& strip) {
  double worst = 0.0;
  for (Point2 p : strip.points())
    worst = std::max(worst, std::abs(gaussian_model(p)));
  return worst;
}

}  // namespace

TEST(Analysis, QuadratureOfOneIsHalf) {
  // the half-weighted diagonal makes the constant integrand exact: each row
  // contributes (R - 1 - j) + 1/2 cells, summing to R^2 / 2
  QuadratureSpec q{128, QuadratureMode::half_square};
  auto v = integrate_fundamental([](Point2) { return 1.0; }, q);
  EXPECT_EQ(v, 0.5);

  // dropping the diagonal cells undercounts by exactly 1/(2R)
  QuadratureSpec strict{128, QuadratureMode::triangle_filter};
  auto u = integrate_fundamental([](Point2) { return 1.0; }, strict);
  EXPECT_DOUBLE_EQ(u, 0.5 - 1.0 / 256.0);

  EXPECT_THROW(integrate_fundamental([](Point2) { return 1.0; },
                                     QuadratureSpec{1, QuadratureMode::half_square}),
               std::invalid_argument);
}

TEST(Analysis, QuadratureModesAgree) {
  QuadratureSpec a{257, QuadratureMode::half_square};
  QuadratureSpec b{257, QuadratureMode::triangle_filter};
  double va = integrate_fundamental(gaussian_model, a);
  double vb = integrate_fundamental(gaussian_model, b);
  EXPECT_NEAR(va, vb, 5.0 / 257);
  EXPECT_GT(va, 0.0);
}

TEST(Analysis, ContinuousCoefficientRecoversBasis) {
  QuadratureSpec q{400, QuadratureMode::half_square};

  auto e21 = [](Point2 p) { return eval_exp_anti(freq_pair(2, 1), p); };
  EXPECT_NEAR(std::abs(continuous_coefficient(e21, Family::exp_anti, freq_pair(2, 1), q) -
                       1.0),
              0.0, 1e-3);
  EXPECT_NEAR(std::abs(continuous_coefficient(e21, Family::exp_anti, freq_pair(3, 1), q)),
              0.0, 1e-3);
  EXPECT_NEAR(std::abs(continuous_coefficient(e21, Family::exp_anti, freq_pair(3, 0), q)),
              0.0, 1e-3);

  auto s22 = [](Point2 p) { return eval_exp_sym(freq_pair(2, 2), p); };
  EXPECT_NEAR(std::abs(continuous_coefficient(s22, Family::exp_sym, freq_pair(2, 2), q) -
                       1.0),
              0.0, 1e-3);

  auto c31 = [](Point2 p) { return eval_cos_anti_real(freq_pair(3, 1), p); };
  EXPECT_NEAR(std::abs(continuous_coefficient(c31, Family::cos_anti, freq_pair(3, 1), q) -
                       1.0),
              0.0, kQuadTol);

  auto p22 = [](Point2 p) { return eval_cos_sym_real(freq_pair(2, 2), p); };
  EXPECT_NEAR(std::abs(continuous_coefficient(p22, Family::cos_sym, freq_pair(2, 2), q) -
                       1.0),
              0.0, kQuadTol);
}

TEST(Analysis, CosineNormCarriesEdgeWeights) {
  // ∫_F cos^+_p conj(cos^+_p) = G_p / (4 h_lambda h_mu): the zero-index edge
  // functions are short by the h factors, so the plain 4/G normalization of
  // continuous_coefficient returns 1/(h_lambda h_mu) on them instead of 1
  QuadratureSpec q{400, QuadratureMode::half_square};

  auto c20 = [](Point2 p) { return eval_cos_sym_real(freq_pair(2, 0), p); };
  double n20 = integrate_fundamental(
      [&](Point2 p) { return c20(p) * c20(p); }, q);
  EXPECT_NEAR(n20, 1.0 / (4.0 * zero_half_weight(2) * zero_half_weight(0)), 2e-3);
  EXPECT_NEAR(std::abs(continuous_coefficient(c20, Family::cos_sym, freq_pair(2, 0), q)),
              2.0, kQuadTol);

  auto c00 = [](Point2 p) { return eval_cos_sym_real(freq_pair(0, 0), p); };
  EXPECT_NEAR(std::abs(continuous_coefficient(c00, Family::cos_sym, freq_pair(0, 0), q)),
              4.0, kQuadTol);

  // interior indices carry no h deficit
  auto c21 = [](Point2 p) { return eval_cos_sym_real(freq_pair(2, 1), p); };
  double n21 = integrate_fundamental(
      [&](Point2 p) { return c21(p) * c21(p); }, q);
  EXPECT_NEAR(n21, 0.25, 2e-3);
}

TEST(Analysis, ContinuousGramNearIdentity) {
  QuadratureSpec q{400, QuadratureMode::half_square};
  EXPECT_LT(continuous_gram_deviation(Family::exp_anti, 2, q), kQuadTol);
  EXPECT_LT(continuous_gram_deviation(Family::exp_sym, 2, q), kQuadTol);
  EXPECT_THROW(continuous_gram_deviation(Family::cos_anti, 2, q), std::invalid_argument);
}

TEST(Analysis, L2ErrorBasics) {
  QuadratureSpec q{100, QuadratureMode::half_square};
  EXPECT_EQ(l2_error(gaussian_model, gaussian_model, q), 0.0);

  // constant offset c integrates to |c|^2 * area(F) = |c|^2 / 2, exactly
  auto shifted = [](Point2 p) { return gaussian_model(p) + 0.3; };
  EXPECT_NEAR(l2_error(shifted, gaussian_model, q), 0.09 * 0.5, 1e-12);
}

TEST(Analysis, LaplaceResiduals) {
  const Point2 pts[] = {{0.37, 0.22}, {0.81, 0.46}, {0.63, 0.11}};
  const double h = 1e-3;
  struct Case {
    Family family;
    FrequencyPair p;
  } cases[] = {
      {Family::exp_anti, freq_pair(2, 1)},  {Family::exp_anti, freq_pair(3, 0)},
      {Family::exp_sym, freq_pair(2, 2)},   {Family::cos_anti, freq_pair(3, 1)},
      {Family::cos_sym, freq_pair(2, 0)},   {Family::cos_anti, freq_pair_half(2, 1)},
      {Family::cos_sym, freq_pair_half(1, 0)},
  };
  for (const auto& c : cases) {
    double budget = 1e-4 * (1.0 + std::abs(laplace_eigenvalue(c.family, c.p)));
    for (Point2 pt : pts)
      EXPECT_LE(laplace_residual(c.family, c.p, pt, h), budget)
          << "family=" << static_cast<int>(c.family) << " at (" << pt.x << "," << pt.y
          << ")";
  }
  EXPECT_THROW(laplace_residual(Family::exp_anti, freq_pair(2, 1), {0.5, 0.2}, 0.0),
               std::invalid_argument);
}

TEST(Analysis, MixedDerivativeResiduals) {
  const Point2 pts[] = {{0.37, 0.22}, {0.81, 0.46}};
  const double h = 1e-3;
  // the 1/h^4 scaling turns double rounding into an absolute noise floor of
  // roughly 40 eps / h^4 ~ 1e-2 on top of the O(h^2 |eig|) truncation term
  const double noise_floor = 0.05;
  struct Case {
    Family family;
    FrequencyPair p;
  } cases[] = {
      {Family::exp_anti, freq_pair(2, 1)},
      {Family::exp_sym, freq_pair(1, 1)},
      {Family::cos_anti, freq_pair_half(2, 1)},
      {Family::cos_sym, freq_pair(2, 1)},
  };
  for (const auto& c : cases) {
    double budget =
        noise_floor + 1e-4 * (1.0 + std::abs(mixed_derivative_eigenvalue(c.family, c.p)));
    for (Point2 pt : pts)
      EXPECT_LE(mixed_derivative_residual(c.family, c.p, pt, h), budget)
          << "family=" << static_cast<int>(c.family);
  }
  EXPECT_THROW(
      mixed_derivative_residual(Family::exp_anti, freq_pair(2, 1), {0.5, 0.2}, -1.0),
      std::invalid_argument);
}

TEST(Analysis, ModelPinnedValues) {
  EXPECT_EQ(gaussian_model({0.707, 0.293}), 1.0);
  EXPECT_DOUBLE_EQ(gaussian_model({0.707 + 0.079, 0.293}), std::exp(-0.5));
  EXPECT_DOUBLE_EQ(ripple_model({0.707, 0.293}), 1.0 / 15.0);
  EXPECT_NEAR(ripple_model({0.707 + kPi / 40.0, 0.293}), -1.0 / 15.0, 1e-12);
}

TEST(Analysis, ErrorTableMatchesReference) {
  // reference squared-L2 interpolation errors of the Gaussian model in units
  // of 1e-7, on the b = 1/2 unit-cell grids
  QuadratureSpec q{300, QuadratureMode::half_square};

  auto r7 = error_table_row(gaussian_model, 7, q);
  EXPECT_NEAR(r7.exp_anti, 9841e-7, 0.15 * 9841e-7);
  EXPECT_NEAR(r7.exp_sym, 9812e-7, 0.15 * 9812e-7);
  EXPECT_NEAR(r7.cos2_anti, 14023e-7, 0.15 * 14023e-7);
  EXPECT_NEAR(r7.cos2_sym, 13915e-7, 0.15 * 13915e-7);

  auto r12 = error_table_row(gaussian_model, 12, q);
  EXPECT_NEAR(r12.exp_anti, 3e-7, 3e-7);
  EXPECT_NEAR(r12.exp_sym, 3e-7, 3e-7);
  EXPECT_NEAR(r12.cos2_anti, 11e-7, 4e-7);
  EXPECT_NEAR(r12.cos2_sym, 11e-7, 4e-7);
}

TEST(Analysis, ErrorTableDecreasesWithN) {
  QuadratureSpec q{150, QuadratureMode::half_square};
  auto rows = error_table(gaussian_model, {5, 7, 9, 11}, q);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(rows[i].exp_anti, rows[i - 1].exp_anti) << "N=" << rows[i].n;
    EXPECT_LT(rows[i].exp_sym, rows[i - 1].exp_sym) << "N=" << rows[i].n;
    EXPECT_LT(rows[i].cos2_anti, rows[i - 1].cos2_anti) << "N=" << rows[i].n;
    EXPECT_LT(rows[i].cos2_sym, rows[i - 1].cos2_sym) << "N=" << rows[i].n;
  }
}

TEST(Analysis, StripPointsStayInTriangle) {
  for (StripRegion r : {StripRegion::lower_edge, StripRegion::right_edge,
                        StripRegion::diagonal}) {
    StripSpec s{r, 0.02, 64, 4};
    auto pts = s.points();
    EXPECT_FALSE(pts.empty());
    for (Point2 p : pts) {
      EXPECT_GE(p.x, p.y);
      EXPECT_LE(p.x, 1.0);
      EXPECT_GE(p.y, 0.0);
    }
  }
  // width 0 collapses to a single layer on the border itself
  StripSpec border{StripRegion::lower_edge, 0.0, 64, 4};
  EXPECT_EQ(border.points().size(), 64u);
  for (Point2 p : border.points()) EXPECT_EQ(p.y, 0.0);
}

TEST(Analysis, GibbsProfileBasics) {
  StripSpec edge{StripRegion::lower_edge, 0.02, 128, 4};
  EXPECT_EQ(gibbs_profile(gaussian_model, gaussian_model, edge), 0.0);

  auto shifted = [](Point2 p) { return gaussian_model(p) + 0.25; };
  EXPECT_DOUBLE_EQ(gibbs_profile(shifted, gaussian_model, edge), 0.25);
}

TEST(Analysis, AntisymmetricDiagonalProfileIsModelMax) {
  // psi^- vanishes bitwise on x = y, so the width-0 diagonal profile equals
  // the largest |f| over the strip points with no floating-point slack
  GridSpec spec{0.0, 0.5, 7, 1.0};
  auto c = interp_anti(sample_on_grid(gaussian_model, spec, GridKind::anti));
  auto psi = [&](Point2 p) { return eval_interpolant(c, p); };

  StripSpec diag{StripRegion::diagonal, 0.0, 256, 1};
  double profile = gibbs_profile(psi, gaussian_model, diag);
  EXPECT_EQ(profile, gaussian_on_diagonal_max(diag));
  EXPECT_GT(profile, 1e-4);  // the model is small but nonzero on the diagonal
}
