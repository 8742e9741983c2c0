#include <gtest/gtest.h>

#include "extdim/decompose.hpp"
#include "extdim/dsl.hpp"
#include "extdim/homological.hpp"

using namespace extdim;

namespace {
AlgebraPtr fixture(const std::string& name) {
  return load_algebra(std::string(EXTDIM_FIXTURES) + "/algebras/" + name + ".alg");
}
using DV = std::vector<int>;
}  // namespace

TEST(Homological, CoverAndSyzygy) {
  auto a = fixture("ex2_A");
  Rep s1 = simple(a, 0);
  Syzygy s = syzygy(s1);
  EXPECT_EQ(s.cover.p.dims, (DV{1, 1, 0}));
  EXPECT_EQ(s.omega.dims, (DV{0, 1, 0}));
  EXPECT_TRUE(is_morphism(s.omega, s.cover.p, s.inc));
  InjEnvelope e = injective_envelope(simple(a, 1));
  EXPECT_EQ(e.i.dims, (DV{1, 1, 1}));
  EXPECT_TRUE(is_morphism(simple(a, 1), e.i, e.map));
}

TEST(Homological, TauOnA3) {
  auto a = fixture("ex2_A");
  EXPECT_EQ(tau(simple(a, 0)).dims, (DV{0, 1, 1}));
  EXPECT_EQ(tau(simple(a, 2)).dims, (DV{1, 1, 0}));
  EXPECT_EQ(tau(injective(a, 1)).dims, (DV{0, 1, 0}));
  EXPECT_TRUE(tau(projective(a, 0)).is_zero());
  Rep t = tau_inverse(simple(a, 1));
  EXPECT_EQ(t.dims, (DV{1, 1, 1}));
  EXPECT_TRUE(t.is_valid());
  EXPECT_EQ(t.alg.get(), a.get());
}

TEST(Homological, ExtensionIsIndecomposable) {
  auto a = fixture("ex2_A");
  std::mt19937_64 rng(7);
  ExtSpace e = ext1(simple(a, 0), projective(a, 2));
  ASSERT_EQ(e.dim(), 1);
  ShortExact s = extension(e, e.classes[0]);
  EXPECT_EQ(s.middle.dims, (DV{1, 1, 1}));
  EXPECT_TRUE(s.middle.is_valid());
  EXPECT_TRUE(is_morphism(s.left, s.middle, s.f));
  EXPECT_TRUE(is_morphism(s.middle, s.right, s.g));
  EXPECT_TRUE(is_zero(compose(s.g, s.f)));
  EXPECT_TRUE(is_indecomposable(s.middle, rng));
  EXPECT_EQ(ext1_dim(projective(a, 0), simple(a, 1)), 0);
}

TEST(Homological, Ex3SyzygySplits) {
  auto a = fixture("ex3_A");
  std::mt19937_64 rng(3);
  Rep om = syzygy(simple(a, 0)).omega;
  auto parts = decompose(om, rng);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(isomorphic(om, direct_sum(simple(a, 0), projective(a, 3)), rng));
  EXPECT_FALSE(isomorphic(om, direct_sum(simple(a, 0), injective(a, 3)), rng));
}

TEST(Homological, DecomposeRegular) {
  auto a = fixture("ex1_A");
  std::mt19937_64 rng(5);
  auto parts = decompose(regular(a), rng);
  EXPECT_EQ(parts.size(), 5u);
  for (const auto& s : parts) {
    EXPECT_TRUE(is_morphism(s.module, regular(a), s.inc));
    EXPECT_TRUE(is_iso(s.module, s.module, compose(s.proj, s.inc)));
  }
  EXPECT_EQ(loewy_length(projective(a, 1)), 2);
  EXPECT_EQ(radical_layers(injective(a, 1)).size(), 2u);
}

TEST(Homological, NakayamaSendsProjectivesToInjectives) {
  auto a = fixture("ex3_A");
  std::mt19937_64 rng(1);
  for (int i = 0; i < a->num_vertices(); ++i) {
    Rep n = nakayama(projective(a, i));
    EXPECT_TRUE(n.is_valid());
    EXPECT_TRUE(isomorphic(n, injective(a, i), rng)) << i;
  }
}

TEST(Homological, HomMethodsAgree) {
  std::mt19937_64 rng(11);
  for (const char* name : {"ex1_A", "ex2_A", "ex3_A"}) {
    auto a = fixture(name);
    std::vector<Rep> mods;
    for (int i = 0; i < a->num_vertices(); ++i) {
      mods.push_back(simple(a, i));
      mods.push_back(projective(a, i));
      mods.push_back(injective(a, i));
    }
    mods.push_back(direct_sum(injective(a, 0), projective(a, a->num_vertices() - 1)));
    for (const auto& m : mods)
      for (const auto& n : mods) {
        HomSpace h = hom_space(m, n);
        ASSERT_EQ(h.dim(), hom_space_direct(m, n).dim()) << name;
        Vec c(h.dim());
        for (int k = 0; k < h.dim(); ++k) c[k] = Scalar(static_cast<int>(rng() % 7) - 3);
        Morphism f = h.combine(c, m, n);
        EXPECT_TRUE(is_morphism(m, n, f));
        EXPECT_EQ(h.coords(f), c);
      }
  }
}
