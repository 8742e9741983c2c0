#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extdim/dimensions.hpp"
#include "extdim/silting.hpp"

namespace extdim {

struct SepSplitReport {
  TorsionPairReport over_a;
  std::optional<TorsionPairReport> over_b;  // induced torsion pair of Q over B
  Tri separating = Tri::Unknown;
  Tri splitting = Tri::Unknown;
  std::string splitting_source;  // "torsion pair over B" or "Ext^2(T, F)"
  Tri ext2_vanishes = Tri::Unknown;
  DimValue f_id_bound;  // max id over the discovered members of F(P)
  DimValue t_pd_bound;  // max pd over the discovered members of T(Q), over B
  /// With id <= 1 on F(P): separating iff pd <= 1 on T(Q). Unknown when the hypothesis fails or data is partial.
  Tri pd_criterion_agrees = Tri::Unknown;
};
/// Q and its AR quiver are optional; without them splitting comes from Ext^2.
SepSplitReport check_separating_splitting(const ProjComplex& p, const ARQuiver& ar_a, const ProjComplex* q,
                                          const ARQuiver* ar_b, int cutoff, std::mt19937_64& rng);

struct DerivedBoundReport {
  EdBounds a, b;
  int length = 0;          // of the tilting complex
  Tri holds = Tri::Unknown;  // |ed A - ed B| <= length - 1 for every value in the intervals
  bool equality = false;   // both exact and |a - b| = length - 1
  bool strict = false;     // both exact and |a - b| < length - 1
  bool end_matches = false;
  std::string str() const;
};
/// b_alg must be (isomorphic to) the endomorphism algebra of t; the match is
/// checked through quiver presentations.
DerivedBoundReport verify_derived_bound(AlgebraPtr a, AlgebraPtr b_alg, const ProjComplex& t, const KnitBudget& budget,
                                        std::mt19937_64& rng);
DerivedBoundReport derived_bound_from(const EdBounds& a, const EdBounds& b, int length);

struct SiltingTheoremReport {
  SiltingReport silting;
  SepSplitReport sep;
  EdBounds ed_a, ed_b;
  bool hypotheses = false;      // separating and id <= 1 on F(P)
  std::string failed_hypothesis;  // empty when the hypotheses hold or are undecided
  Tri ed_equal = Tri::Unknown;
  /// Yes: hypotheses hold and ed(A) = ed(B); No: hypotheses hold and they differ
  /// (a counterexample to the theorem); Unknown otherwise.
  Tri theorem = Tri::Unknown;
};
/// B is the presented End algebra of P unless b_alg matches it (hereditary case),
/// in which case the fixture algebra is used.
SiltingTheoremReport verify_silting_theorem(const ProjComplex& p, AlgebraPtr b_alg, const KnitBudget& budget,
                                            std::mt19937_64& rng, int cutoff = 12);

struct StableExampleReport {
  std::vector<int> nodes;  // vertices whose simples are nodes
  int loewy_a = 0;
  DimValue gd_a, gd_b;
  DimValue pd_first_simple;
  EdBounds ed_a, ed_b;
};
StableExampleReport verify_stable_example(AlgebraPtr a, AlgebraPtr b, const KnitBudget& budget_a,
                                          const KnitBudget& budget_b, std::mt19937_64& rng, int cutoff = 12);

}  // namespace extdim
