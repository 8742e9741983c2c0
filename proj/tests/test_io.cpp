#include <gtest/gtest.h>

#include <fstream>

#include "extdim/dsl.hpp"
#include "extdim/manifest.hpp"

using namespace extdim;

namespace {
const std::string kFix = EXTDIM_FIXTURES;
AlgebraPtr fixture(const std::string& name) { return load_algebra(kFix + "/algebras/" + name + ".alg"); }
}  // namespace

TEST(Io, HashIsFnv1a) {
  EXPECT_EQ(content_hash(""), "cbf29ce484222325");
  EXPECT_EQ(content_hash("a"), "af63dc4c8601ec8c");
}

TEST(Io, AlgebraJson) {
  auto a = fixture("ex2_B");
  Json j = algebra_json(*a);
  EXPECT_EQ(j["dim"], 6);
  EXPECT_EQ(j["basis"][5]["path"], Json({"v", "u"}));
  // e_c * v = v
  bool found = false;
  for (const auto& t : j["table"])
    if (t[0] == 2 && t[1] == 4) found = t[2] == 4 && t[3] == 1;
  EXPECT_TRUE(found);
}

TEST(Io, ComplexRoundTrip) {
  auto a = fixture("ex1_A");
  Json j = Json::parse(read_file(kFix + "/complexes/ex1_P.json"));
  ProjComplex x = complex_from_json(j, a);
  EXPECT_EQ(x.lo, -1);
  EXPECT_EQ(x.terms[1].size(), 5u);
  Json back = complex_json(x, AlgebraRef{j["algebra"]["path"], j["algebra"]["fnv1a"]});
  EXPECT_EQ(back, j);
  std::string warn;
  normalize_loaded(x, &warn);
  EXPECT_TRUE(warn.empty());
}

TEST(Io, ComplexObjectEntriesAndWarnings) {
  auto a = fixture("ex2_A");
  // the identity summand P1 -> P1 is contractible
  Json j = Json::parse(R"({"lo": 0, "terms": [[["1", 1]], [["1", 1], ["2", 1]]],
                           "differentials": [[[{"e_1": 1}], [0]]]})");
  std::string warn;
  ProjComplex x = normalize_loaded(complex_from_json(j, a), &warn);
  EXPECT_FALSE(warn.empty());
  EXPECT_EQ(x.total_rank(), 1);
  Json bad = j;
  bad["differentials"][0][1][0] = Json::parse(R"({"alpha": 1})");
  EXPECT_THROW(complex_from_json(bad, a), InputError);  // alpha gives maps P2 -> P1 only
  bad = j;
  bad["terms"][0][0][0] = "9";
  EXPECT_THROW(complex_from_json(bad, a), InputError);
}

TEST(Io, ModuleRoundTrip) {
  auto a = fixture("ex1_A");
  Rep m = module_from_json(Json::parse(read_file(kFix + "/modules/ex1_M21111.json")), a);
  EXPECT_EQ(m.dims, (std::vector<int>{0, 2, 1, 1, 1}));
  std::mt19937_64 rng(0);
  EXPECT_TRUE(is_indecomposable(m, rng));
  Rep back = module_from_json(module_json(m, AlgebraRef{"x", "y"}), a);
  EXPECT_TRUE(back == m);
  Json bad = module_json(m, AlgebraRef{});
  bad["arrows"]["beta1"] = {{1, 2}};
  EXPECT_THROW(module_from_json(bad, a), InputError);
}

TEST(Io, ModuleViolatingRelations) {
  auto a = fixture("ex1_A");
  Json j = {{"dims", {1, 1, 1, 0, 0}}, {"arrows", {{"alpha", {{1}}}, {"beta1", {{1}}}}}};
  EXPECT_THROW(module_from_json(j, a), InputError);
}

TEST(Io, Beilinson) {
  auto b2 = parse_algebra(beilinson_dsl(2));
  EXPECT_EQ(b2->num_vertices(), 3);
  EXPECT_EQ(b2->num_arrows(), 6);
  EXPECT_EQ(b2->dim(), 15);
  EXPECT_EQ(b2->loewy_length(), 3);
  auto b1 = parse_algebra(beilinson_dsl(1, FieldSpec{2}));
  EXPECT_TRUE(b1->is_hereditary_path_algebra());
  EXPECT_EQ(b1->field().p, 2u);
}

TEST(Manifest, Ex2AllClaimsPass) {
  Manifest m = load_manifest(kFix + "/manifests/ex2.json");
  FixtureRun r = run_manifest(m);
  for (const auto& c : r.results) EXPECT_EQ(c.status, ClaimStatus::Pass) << c.claim.id << ": " << c.value.dump();
  EXPECT_EQ(r.json()["summary"]["pass"], static_cast<int>(m.claims.size()));
}

TEST(Manifest, FieldOverrideIsPerField) {
  Manifest m = load_manifest(kFix + "/manifests/ex2.json");
  RunOptions o;
  o.field = FieldSpec{3};
  FixtureRun r = run_manifest(m, o);
  EXPECT_EQ(r.field, "F3");
  EXPECT_EQ(r.count(ClaimStatus::Pass), static_cast<int>(m.claims.size()));
}

TEST(Manifest, FailedClaimIsReported) {
  Manifest m = load_manifest(kFix + "/manifests/ex2.json");
  m.claims.resize(1);
  m.claims[0].expect = "silting but not tilting";
  FixtureRun r = run_manifest(m);
  EXPECT_EQ(r.results[0].status, ClaimStatus::Fail);
  EXPECT_EQ(r.results[0].value, "tilting");
}

TEST(Manifest, HashMismatchIsInputError) {
  Json j = Json::parse(read_file(kFix + "/manifests/ex2.json"));
  for (auto* sec : {"algebras", "complexes"})
    for (auto& [_, e] : j[sec].items()) e["path"] = kFix + "/manifests/" + e["path"].get<std::string>();
  std::string ok_path = ::testing::TempDir() + "/ok_manifest.json";
  {
    std::ofstream(ok_path) << j.dump();
  }
  EXPECT_NO_THROW(load_manifest(ok_path));
  j["algebras"]["A"]["fnv1a"] = "0000000000000000";
  std::string path = ::testing::TempDir() + "/bad_manifest.json";
  {
    std::ofstream(path) << j.dump();
  }
  EXPECT_THROW(load_manifest(path), InputError);
}
