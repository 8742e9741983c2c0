#include <gtest/gtest.h>

#include "extdim/dsl.hpp"
#include "extdim/silting.hpp"

using namespace extdim;

namespace {
AlgebraPtr fixture(const std::string& name) {
  return load_algebra(std::string(EXTDIM_FIXTURES) + "/algebras/" + name + ".alg");
}
int vtx(const AlgebraPtr& a, const std::string& v) { return a->quiver().vertex_index(v); }
int arrow(const AlgebraPtr& a, const std::string& l) { return a->arrow_basis(a->quiver().arrow_index(l)); }

// two-term complex: one map u -> v by arrow `x` plus stalks
ProjComplex two_term(const AlgebraPtr& a, const std::string& u, const std::string& v, const std::string& x,
                     const std::vector<std::string>& lower, const std::vector<std::string>& upper) {
  ProjComplex c;
  c.alg = a;
  c.lo = -1;
  c.terms = {{vtx(a, u)}, {vtx(a, v)}};
  for (const auto& s : lower) c.terms[0].push_back(vtx(a, s));
  for (const auto& s : upper) c.terms[1].push_back(vtx(a, s));
  ProjMatrix d = ProjMatrix::zero(*a, c.terms[1], c.terms[0]);
  d.at(0, 0) = a->unit(arrow(a, x));
  c.d = {d};
  return c;
}
}  // namespace

TEST(Silting, Ex2Report) {
  std::mt19937_64 rng(7);
  auto a = fixture("ex2_A");
  auto p = two_term(a, "2", "1", "alpha", {"2", "3"}, {});
  auto r = silting_report(p, rng);
  EXPECT_TRUE(r.two_term);
  EXPECT_TRUE(r.presilting);
  EXPECT_EQ(r.summand_classes, 3);
  EXPECT_TRUE(r.silting);
  EXPECT_TRUE(r.tilting);
  auto notsilt = two_term(a, "2", "1", "alpha", {"2"}, {});
  EXPECT_FALSE(silting_report(notsilt, rng).silting);
}

TEST(Silting, Ex2EndAndQ) {
  std::mt19937_64 rng(11);
  auto a = fixture("ex2_A");
  auto b = fixture("ex2_B");
  auto iq = induced_q(two_term(a, "2", "1", "alpha", {"2", "3"}, {}), rng);
  EXPECT_TRUE(iq.cone_in_add);
  EXPECT_EQ(iq.end.b()->dim(), 6);
  auto m = match_hereditary(*iq.end.b(), *b);
  ASSERT_TRUE(m.has_value());
  ProjComplex q = transport(iq.q, *m, b);
  ProjComplex expect = two_term(b, "a", "b", "u", {}, {"b", "c"});
  EXPECT_TRUE(complexes_isomorphic(q, expect, rng));
  EXPECT_TRUE(silting_report(q, rng).silting);

  ARQuiver ar = knit(a, KnitBudget{}, rng);
  auto tp = torsion_pair(iq.end.p, ar);
  EXPECT_EQ(tp.split, Tri::Yes);
  ASSERT_EQ(tp.torsion.size(), 1u);
  EXPECT_EQ(ar.nodes[tp.torsion[0]].module.dims, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(tp.torsion_free.size(), 5u);
  ARQuiver arb = knit(b, KnitBudget{}, rng);
  EXPECT_EQ(torsion_pair(q, arb).split, Tri::Yes);
}

TEST(Silting, Ex1EndAndQ) {
  std::mt19937_64 rng(3);
  auto a = fixture("ex1_A");
  auto b = fixture("ex1_B");
  auto p = two_term(a, "1", "2", "alpha", {}, {"2", "3", "4", "5"});
  auto r = silting_report(p, rng);
  EXPECT_TRUE(r.silting);
  auto iq = induced_q(p, rng);
  auto m = match_hereditary(*iq.end.b(), *b);
  ASSERT_TRUE(m.has_value());
  ProjComplex q = transport(iq.q, *m, b);
  ProjComplex expect = two_term(b, "b", "a", "x", {"b", "c", "d", "e"}, {});
  EXPECT_TRUE(complexes_isomorphic(q, expect, rng));
  EXPECT_FALSE(complexes_isomorphic(q, two_term(b, "b", "a", "x", {"b", "c", "d", "a"}, {}), rng));

  ARQuiver ar = knit(a, KnitBudget{}, rng);
  auto tp = torsion_pair(iq.end.p, ar);
  ASSERT_EQ(tp.torsion_free.size(), 1u);
  EXPECT_EQ(ar.nodes[tp.torsion_free[0]].module.dims, (std::vector<int>{1, 0, 0, 0, 0}));

  EXPECT_FALSE(almost_nu_stable(iq.end.p, shift(q, -1), rng).stable());
}

TEST(Silting, QuiverMatchRejects) {
  EXPECT_FALSE(match_hereditary(*fixture("ex1_B"), *fixture("ex2_B")).has_value());
  EXPECT_FALSE(match_hereditary(*fixture("ex1_A"), *fixture("ex1_B")).has_value());
}
