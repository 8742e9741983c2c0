#include <gtest/gtest.h>

#include <random>

#include "extdim/dsl.hpp"
#include "extdim/quiver.hpp"

using namespace extdim;

namespace {
AlgebraPtr fixture(const std::string& name) {
  return load_algebra(std::string(EXTDIM_FIXTURES) + "/algebras/" + name + ".alg");
}
}  // namespace

TEST(Parse, Ex1Dimension) {
  auto a = fixture("ex1_A");
  EXPECT_EQ(a->num_vertices(), 5);
  EXPECT_EQ(a->dim(), 9);
  EXPECT_EQ(a->loewy_length(), 2);
}

TEST(Parse, Ex3LoewyLength) {
  auto a = fixture("ex3_A");
  EXPECT_EQ(a->loewy_length(), 5);
  EXPECT_FALSE(a->is_hereditary_path_algebra());
}

TEST(Parse, OppositeReversesArrows) {
  auto a = fixture("ex2_A");
  auto o = a->opposite();
  const auto& q = o->quiver();
  ASSERT_EQ(q.num_arrows(), 2);
  EXPECT_EQ(q.arrows[0].src, 1);
  EXPECT_EQ(q.arrows[0].tgt, 0);
  EXPECT_EQ(o->opposite().get(), a.get());
}

TEST(Parse, ClassifiesEuclidean) {
  auto b1 = fixture("ex1_B");
  auto c1 = classify_components(b1->quiver());
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0].str(), "~D4");
  auto b3 = fixture("ex3_B");
  auto c3 = classify_components(b3->quiver());
  ASSERT_EQ(c3.size(), 1u);
  EXPECT_EQ(c3[0].str(), "~E6");
  EXPECT_TRUE(classify_components(fixture("ex2_B")->quiver())[0].is_dynkin());
}

TEST(Parse, ErrorPositions) {
  try {
    parse_algebra("field Q\nvertex 1 2\narrow a : 1 -> 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 3);
    EXPECT_EQ(e.col, 16);
  }
  EXPECT_THROW(parse_algebra(""), ParseError);
  EXPECT_THROW(parse_algebra("vertex 1\narrow a : 1 -> 1\nrel a"), ParseError);
  EXPECT_THROW(parse_algebra("field F 4\nvertex 1"), ParseError);
}

TEST(Parse, RoundTrip) {
  auto a = fixture("ex3_A");
  auto b = parse_algebra(to_dsl(*a));
  EXPECT_EQ(b->dim(), a->dim());
}

TEST(Algebra, TrivialExtensionOfField) {
  auto k = parse_algebra("vertex 1");
  std::mt19937_64 rng(1);
  auto t = trivial_extension(*k, rng);
  EXPECT_EQ(t->dim(), 2);
  EXPECT_EQ(t->num_arrows(), 1);
  EXPECT_EQ(t->loewy_length(), 2);
}

TEST(Algebra, FieldOverride) {
  auto a = load_algebra(std::string(EXTDIM_FIXTURES) + "/algebras/ex1_A.alg", parse_field("F2"));
  EXPECT_EQ(a->field().p, 2u);
  EXPECT_EQ(a->dim(), 9);
}
