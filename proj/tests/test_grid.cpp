#include <symtrig2d/grid.hpp>

#include <gtest/gtest.h>

using namespace symtrig2d;

TEST(Grid, AntiTriangleLayout) {
  GridSpec spec{0.0, 0.5, 4, 1.0};
  auto pts = make_grid(spec, GridKind::anti);
  ASSERT_EQ(pts.size(), 6u);
  // lexicographic (m, n): (1,0), (2,0), (2,1), (3,0), (3,1), (3,2)
  EXPECT_EQ(pts[0].m, 1);
  EXPECT_EQ(pts[0].n, 0);
  EXPECT_DOUBLE_EQ(pts[0].at.x, 0.375);
  EXPECT_DOUBLE_EQ(pts[0].at.y, 0.125);
  EXPECT_EQ(pts[5].m, 3);
  EXPECT_EQ(pts[5].n, 2);
  for (const auto& p : pts) EXPECT_GT(p.m, p.n);
}

TEST(Grid, SymTriangleLayout) {
  GridSpec spec{0.0, 0.5, 3, 1.0};
  auto pts = make_grid(spec, GridKind::sym);
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_EQ(pts[0].m, 0);
  EXPECT_EQ(pts[0].n, 0);
  EXPECT_NEAR(pts[0].at.x, 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(pts[0].at.y, 1.0 / 6.0, 1e-15);
  for (const auto& p : pts) EXPECT_GE(p.m, p.n);
}

TEST(Grid, DegenerateSinglePoint) {
  GridSpec spec{0.0, 0.0, 1, 1.0};
  auto pts = make_grid(spec, GridKind::full);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_DOUBLE_EQ(pts[0].at.x, 0.0);
  EXPECT_DOUBLE_EQ(pts[0].at.y, 0.0);
  EXPECT_TRUE(make_grid(spec, GridKind::anti).empty());
}

TEST(Grid, SizesMatchTriangleCounts) {
  for (int n = 1; n <= 9; ++n) {
    GridSpec spec{-0.3, 0.25, n, 1.0};
    EXPECT_EQ(make_grid(spec, GridKind::full).size(), static_cast<std::size_t>(n) * n);
    EXPECT_EQ(make_grid(spec, GridKind::anti).size(), grid_size(GridKind::anti, n));
    EXPECT_EQ(make_grid(spec, GridKind::sym).size(), grid_size(GridKind::sym, n));
  }
}

TEST(Grid, RescaledCell) {
  // node = a + (m + b) T / N on each axis
  GridSpec spec{1.0, 0.5, 4, 2.0};
  auto pts = make_grid(spec, GridKind::sym);
  EXPECT_DOUBLE_EQ(pts[0].at.x, 1.25);
  GridPoint last = pts.back();
  EXPECT_EQ(last.m, 3);
  EXPECT_DOUBLE_EQ(last.at.x, 1.0 + 3.5 * 2.0 / 4.0);
}

TEST(Grid, ValidationErrors) {
  EXPECT_THROW(make_grid(GridSpec{0.0, 0.5, 0, 1.0}, GridKind::full), std::invalid_argument);
  EXPECT_THROW(make_grid(GridSpec{0.0, -0.1, 3, 1.0}, GridKind::full), std::invalid_argument);
  EXPECT_THROW(make_grid(GridSpec{0.0, 1.5, 3, 1.0}, GridKind::full), std::invalid_argument);
  EXPECT_THROW(make_grid(GridSpec{0.0, 0.5, 3, 0.0}, GridKind::full), std::invalid_argument);
  EXPECT_NO_THROW(make_grid(GridSpec{0.0, 0.0, 3, 1.0}, GridKind::full));
  EXPECT_NO_THROW(make_grid(GridSpec{0.0, 1.0, 3, 1.0}, GridKind::full));
}

TEST(Grid, FundamentalDomain) {
  EXPECT_TRUE(fundamental_domain_contains({0.6, 0.2}));
  EXPECT_FALSE(fundamental_domain_contains({0.2, 0.6}));
  EXPECT_FALSE(fundamental_domain_contains({0.5, 0.5}));
  EXPECT_FALSE(fundamental_domain_contains({1.0, 0.5}));
  EXPECT_FALSE(fundamental_domain_contains({0.5, 0.0}));

  // the default shifted grid lands strictly inside the open triangle
  for (const auto& p : make_grid(GridSpec{0.0, 0.5, 6, 1.0}, GridKind::anti))
    EXPECT_TRUE(fundamental_domain_contains(p.at));
}
