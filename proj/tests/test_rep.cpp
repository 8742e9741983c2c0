#include <gtest/gtest.h>

#include "extdim/dsl.hpp"
#include "extdim/rep.hpp"

using namespace extdim;

namespace {
AlgebraPtr fixture(const std::string& name) {
  return load_algebra(std::string(EXTDIM_FIXTURES) + "/algebras/" + name + ".alg");
}
}  // namespace

TEST(Rep, ProjectivesOfEx1) {
  auto a = fixture("ex1_A");
  std::vector<std::vector<int>> want = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0}, {0, 1, 0, 0, 1}};
  for (int i = 0; i < 5; ++i) {
    Rep p = projective(a, i);
    EXPECT_EQ(p.dims, want[i]);
    EXPECT_TRUE(p.is_valid());
  }
  Rep i2 = injective(a, 1);
  EXPECT_EQ(i2.dims, (std::vector<int>{0, 1, 1, 1, 1}));
  EXPECT_TRUE(i2.is_valid());
}

TEST(Rep, HomDimensions) {
  auto a = fixture("ex2_A");
  Rep p1 = projective(a, 0), p2 = projective(a, 1), s2 = simple(a, 1);
  EXPECT_EQ(hom_space(p2, p1).dim(), 1);
  EXPECT_EQ(hom_space(p1, p2).dim(), 0);
  EXPECT_EQ(hom_space(p1, p1).dim(), 1);
  EXPECT_EQ(hom_space(s2, p1).dim(), 1);
  auto reg = regular(a);
  EXPECT_EQ(hom_space(reg, reg).dim(), a->dim());
}

TEST(Rep, KernelCokernel) {
  auto a = fixture("ex2_A");
  Rep p1 = projective(a, 0), p2 = projective(a, 1);
  auto hs = hom_space(p2, p1);
  ASSERT_EQ(hs.dim(), 1);
  auto ck = cokernel(p2, p1, hs.basis[0]);
  EXPECT_EQ(ck.module.dims, (std::vector<int>{1, 0, 0}));
  auto kr = kernel(p2, p1, hs.basis[0]);
  EXPECT_TRUE(kr.module.is_zero());
  EXPECT_TRUE(is_morphism(p1, ck.module, ck.map));
}

TEST(Rep, DualAndSocle) {
  auto a = fixture("ex3_A");
  Rep p1 = projective(a, 0);
  EXPECT_TRUE(p1.is_valid());
  Rep d = dual(p1);
  EXPECT_TRUE(d.is_valid());
  EXPECT_EQ(top_dims(p1), (std::vector<int>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(dual(d), p1 = dual(d));
}

TEST(Rep, InvalidDetected) {
  auto a = fixture("ex2_A");
  Rep m = simple(a, 0);
  m.arrows[0] = Mat(2, 2);
  std::string why;
  EXPECT_FALSE(m.is_valid(&why));
  EXPECT_FALSE(why.empty());
}
