#include <gtest/gtest.h>

#include "extdim/dsl.hpp"
#include "extdim/verify.hpp"

using namespace extdim;

namespace {
AlgebraPtr fixture(const std::string& name) {
  return load_algebra(std::string(EXTDIM_FIXTURES) + "/algebras/" + name + ".alg");
}

ProjComplex one_arrow(const AlgebraPtr& a, int u, int v, int arrow_idx, std::vector<int> lower, std::vector<int> upper) {
  ProjComplex c;
  c.alg = a;
  c.lo = -1;
  c.terms = {{u}, {v}};
  c.terms[0].insert(c.terms[0].end(), lower.begin(), lower.end());
  c.terms[1].insert(c.terms[1].end(), upper.begin(), upper.end());
  ProjMatrix d = ProjMatrix::zero(*a, c.terms[1], c.terms[0]);
  d.at(0, 0) = a->unit(a->arrow_basis(arrow_idx));
  c.d = {d};
  return c;
}
}  // namespace

TEST(Verify, Ex2SiltingTheoremHolds) {
  std::mt19937_64 rng(0);
  auto a = fixture("ex2_A");
  auto r = verify_silting_theorem(one_arrow(a, 1, 0, 0, {1, 2}, {}), fixture("ex2_B"), KnitBudget{}, rng);
  EXPECT_TRUE(r.hypotheses);
  EXPECT_EQ(r.sep.separating, Tri::Yes);
  EXPECT_EQ(r.sep.splitting, Tri::Yes);
  EXPECT_EQ(r.sep.ext2_vanishes, Tri::Yes);
  EXPECT_EQ(r.theorem, Tri::Yes);
  EXPECT_EQ(r.ed_a.str(), "[0, 0]");
  EXPECT_EQ(r.ed_b.str(), "[0, 0]");
  auto d = derived_bound_from(r.ed_a, r.ed_b, 2);
  EXPECT_TRUE(d.strict);
}

TEST(Verify, Ex1HypothesisFails) {
  std::mt19937_64 rng(0);
  auto a = fixture("ex1_A");
  auto b = fixture("ex1_B");
  ProjComplex p = one_arrow(a, 0, 1, 0, {}, {1, 2, 3, 4});
  auto r = verify_silting_theorem(p, b, KnitBudget{}, rng);
  EXPECT_FALSE(r.hypotheses);
  EXPECT_EQ(r.failed_hypothesis, "id > 1 on F(P)");
  EXPECT_EQ(r.sep.f_id_bound.str(), "2");
  EXPECT_EQ(r.sep.separating, Tri::Yes);
  EXPECT_EQ(r.sep.splitting, Tri::No);
  EXPECT_EQ(r.sep.ext2_vanishes, Tri::No);
  EXPECT_EQ(r.ed_equal, Tri::No);
  auto d = verify_derived_bound(a, b, p, KnitBudget{}, rng);
  EXPECT_TRUE(d.end_matches);
  EXPECT_EQ(d.holds, Tri::Yes);
  EXPECT_TRUE(d.equality);
}
