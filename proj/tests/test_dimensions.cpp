#include <gtest/gtest.h>

#include "extdim/dimensions.hpp"
#include "extdim/dsl.hpp"

using namespace extdim;

namespace {
AlgebraPtr fixture(const std::string& name) {
  return load_algebra(std::string(EXTDIM_FIXTURES) + "/algebras/" + name + ".alg");
}
}  // namespace

TEST(Dimensions, ProjInjDims) {
  std::mt19937_64 rng(1);
  auto a1 = fixture("ex1_A");
  EXPECT_EQ(inj_dim(simple(a1, 0), 10, rng).str(), "2");
  EXPECT_EQ(proj_dim(projective(a1, 2), 10, rng).str(), "0");
  auto a3 = fixture("ex3_A");
  DimValue pd = proj_dim(simple(a3, 0), 10, rng);
  ASSERT_TRUE(pd.is_infinite());
  auto om = syzygies(simple(a3, 0), pd.period_to);
  EXPECT_TRUE(isomorphic(om[pd.period_from], om[pd.period_to], rng));
  EXPECT_TRUE(global_dim(a3, 10, rng).is_infinite());
  EXPECT_EQ(global_dim(fixture("ex1_B"), 10, rng).str(), "1");
}

TEST(Dimensions, SyzygySequence) {
  std::mt19937_64 rng(2);
  auto a = fixture("ex3_A");
  // 0 -> rad P(1) -> P(1) -> S(1) -> 0
  Rep p1 = projective(a, 0);
  Syzygy s = syzygy(simple(a, 0));
  ShortExact ses{s.omega, s.cover.p, simple(a, 0), s.inc, s.cover.map};
  ASSERT_TRUE(is_exact(ses));
  for (int i = 0; i < 3; ++i) {
    ShortExact t = syzygy_sequence(ses, i);
    EXPECT_TRUE(is_exact(t));
    auto oz = syzygies(ses.right, i + 1);
    auto oy = syzygies(ses.middle, i);
    EXPECT_TRUE(isomorphic(t.left, oz.back(), rng));
    EXPECT_TRUE(isomorphic(t.right, oy.back(), rng));
  }
}

TEST(Dimensions, EdBoundsFixtures) {
  std::mt19937_64 rng(5);
  EXPECT_EQ(ed_bounds(fixture("ex1_A"), KnitBudget{}, rng).str(), "[0, 0]");
  EXPECT_EQ(ed_bounds(fixture("ex1_B"), KnitBudget{}, rng).str(), "[1, 1]");
  EXPECT_EQ(ed_bounds(fixture("ex2_A"), KnitBudget{}, rng).str(), "[0, 0]");
  EXPECT_EQ(ed_bounds(fixture("ex3_B"), KnitBudget{}, rng).str(), "[1, 1]");
}

TEST(Dimensions, WrdWithRegularIsProjDim) {
  std::mt19937_64 rng(9);
  auto a = fixture("ex1_A");
  AddCategory reg(regular(a), rng);
  ARQuiver ar = knit(a, KnitBudget{}, rng);
  for (const auto& n : ar.nodes) {
    auto w = wrd_upper(reg, n.module, 8, rng);
    EXPECT_EQ(w.value.str(), proj_dim(n.module, 8, rng).str());
  }
}

TEST(Dimensions, ExhaustiveOverF2) {
  std::mt19937_64 rng(4);
  auto a = parse_algebra("field F2\nvertex 1\narrow x : 1 -> 1\nrel x.x\n");
  ARQuiver ar = knit(a, KnitBudget{}, rng);
  ASSERT_TRUE(ar.complete);
  ASSERT_EQ(ar.nodes.size(), 2u);
  SearchBounds sb;
  EXPECT_EQ(ed_exhaustive(ar, 2, sb, rng), 0);
  EXPECT_EQ(wrd_exhaustive(ar, 2, sb, rng), 0);
  // [S]_n never reaches the projective; [A]_n never reaches S
  int s = ar.nodes[0].projective ? 1 : 0;
  auto lv = filtration_levels(ar, {s}, 3, sb, rng);
  EXPECT_EQ(lv[1 - s], 1);
  lv = filtration_levels(ar, {1 - s}, 3, sb, rng);
  EXPECT_EQ(lv[s], -1);
  auto wl = wrd_levels(ar, {1 - s}, 3, sb, rng);
  EXPECT_EQ(wl[s], -1);
  wl = wrd_levels(ar, {s}, 3, sb, rng);
  EXPECT_EQ(wl[1 - s], -1);
}
