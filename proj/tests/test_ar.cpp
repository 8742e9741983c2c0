#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>

#include "extdim/ar.hpp"
#include "extdim/dsl.hpp"

using namespace extdim;

namespace {
AlgebraPtr fixture(const std::string& name) {
  return load_algebra(std::string(EXTDIM_FIXTURES) + "/algebras/" + name + ".alg");
}
using DV = std::vector<int>;

std::vector<DV> dims_of(const ARQuiver& q) {
  std::vector<DV> d;
  for (const auto& n : q.nodes) d.push_back(n.module.dims);
  std::sort(d.begin(), d.end());
  return d;
}
}  // namespace

TEST(AR, A3MeshAtInjective) {
  auto a = fixture("ex2_A");
  std::mt19937_64 rng(0);
  ShortExact s = almost_split_sequence(injective(a, 1), rng);
  EXPECT_EQ(s.left.dims, (DV{0, 1, 0}));
  EXPECT_EQ(s.middle.dims, (DV{1, 2, 1}));
  auto parts = decompose(s.middle, rng);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_TRUE(isomorphic(s.middle, direct_sum(projective(a, 0), projective(a, 2)), rng));
  EXPECT_THROW(almost_split_sequence(projective(a, 0), rng), std::invalid_argument);
}

TEST(AR, KnitA3) {
  auto a = fixture("ex2_A");
  std::mt19937_64 rng(0);
  ARQuiver q = knit(a, {}, rng);
  EXPECT_TRUE(q.complete);
  EXPECT_EQ(q.nodes.size(), 6u);
  int proj = 0;
  for (const auto& n : q.nodes) proj += n.projective;
  EXPECT_EQ(static_cast<int>(q.meshes.size()), 6 - proj);
}

TEST(AR, KnitEx1) {
  auto a = fixture("ex1_A");
  std::mt19937_64 rng(0);
  ARQuiver q = knit(a, {}, rng);
  ASSERT_TRUE(q.complete);
  std::vector<DV> want = {{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 1}, {0, 0, 1, 0, 0}, {1, 0, 0, 0, 0},
                          {0, 1, 0, 0, 0}, {0, 2, 1, 1, 1}, {0, 1, 1, 1, 1}, {0, 1, 0, 1, 0}, {0, 1, 1, 0, 1},
                          {0, 0, 0, 1, 0}, {0, 1, 0, 0, 1}, {0, 1, 1, 1, 0}, {0, 0, 0, 0, 1}};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(dims_of(q), want);
}

TEST(AR, Ex1BExhaustsBudget) {
  auto b = fixture("ex1_B");
  std::mt19937_64 rng(0);
  auto t0 = std::chrono::steady_clock::now();
  ARQuiver q = knit(b, {}, rng);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_FALSE(q.complete);
  EXPECT_GE(q.nodes.size(), 20u);
  EXPECT_LT(secs, 30.0);
  EXPECT_EQ(representation_finite(b, {}, rng).verdict, Tri::No);
}

TEST(AR, NodesOfEx3) {
  auto a = fixture("ex3_A");
  std::mt19937_64 rng(0);
  auto nodes = find_nodes(a, rng);
  std::vector<int> found;
  for (const auto& c : nodes)
    if (c.is_node()) found.push_back(c.vertex);
  EXPECT_EQ(found, (std::vector<int>{0}));
}

TEST(AR, HereditaryHasNoNodes) {
  auto b = fixture("ex1_B");
  std::mt19937_64 rng(0);
  for (const auto& c : find_nodes(b, rng)) EXPECT_FALSE(c.is_node());
}
