#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extdim/ar.hpp"
#include "extdim/complex.hpp"

namespace extdim {

struct SiltingReport {
  bool two_term = false;
  bool presilting = false;
  bool silting = false;
  bool tilting = false;
  int hom_shift_plus = 0;   // dim Hom(P, P[1])
  int hom_shift_minus = 0;  // dim Hom(P, P[-1])
  int summand_classes = 0;  // non-isomorphic indecomposable summands in K^b
  int vertices = 0;
  std::string criterion = "2-term summand count";
};
SiltingReport silting_report(const ProjComplex& p, std::mt19937_64& rng);

/// End_K(P) with a quiver presentation. B's vertex j is the primitive
/// idempotent pres.images[j]; an element of e_i B e_j is a map X_j -> X_i.
struct EndK {
  ProjComplex p;
  HomK hom;
  FiniteAlgebra alg;  // product x*y = x o y
  IdempotentSplit split;
  Presentation pres;
  AlgebraPtr b() const { return pres.algebra; }
  ChainMap element(const Vec& c) const;
};
/// Requires P basic (pairwise non-isomorphic indecomposable summands).
EndK end_algebra(const ProjComplex& p, std::mt19937_64& rng);

ChainMap combine(const HomK& h, const Vec& c);

/// Hom_K(P, Y) as a representation over B; component j is Hom_K(P, Y) o e_j.
struct HomRep {
  Rep module;
  HomK hom;
  std::vector<Mat> basis;  // per vertex: columns in Hom_K(P, Y) class coordinates
};
HomRep hom_from_generator(const EndK& e, const ProjComplex& y);
Morphism hom_from_generator(const EndK& e, const HomRep& y1, const HomRep& y2, const ChainMap& f);

struct TorsionPairReport {
  std::vector<int> torsion, torsion_free, neither;  // node indices of the AR quiver
  Tri split = Tri::Unknown;
  bool partial = false;  // AR quiver incomplete: claims cover discovered modules only
};
/// T = {U : Hom(P, U[1]) = 0}, F = {U : Hom(P, U) = 0}.
TorsionPairReport torsion_pair(const ProjComplex& p, const ARQuiver& ar);

struct InducedQ {
  EndK end;
  ProjComplex q;        // over end.b(), degrees -1, 0
  ProjComplex cone_rnf; // radical normal form of the cone of the approximation
  bool cone_in_add = false;
  int approximation_rank = 0;
};
InducedQ induced_q(const ProjComplex& p, std::mt19937_64& rng);

/// Vertex and arrow bijection between two algebras with isomorphic quivers.
struct QuiverMatch {
  std::vector<int> vertex;  // source vertex -> target vertex
  std::vector<int> arrow;   // source arrow -> target arrow
};
std::optional<QuiverMatch> match_quivers(const Quiver& a, const Quiver& b);
/// Both hereditary with isomorphic quivers and equal dimension.
std::optional<QuiverMatch> match_hereditary(const Algebra& a, const Algebra& b);
/// Relabels a complex along a match; paths map to paths.
ProjComplex transport(const ProjComplex& x, const QuiverMatch& m, AlgebraPtr target);

/// Isomorphism of complexes (after radical normal form) witnessed by a random chain map.
/// Exhaustive over a finite field when the space of chain maps has at most 2^16 elements, randomized otherwise.
bool complexes_isomorphic(const ProjComplex& x, const ProjComplex& y, std::mt19937_64& rng, int tries = 12);

struct NuStableReport {
  bool shape_ok = false;
  bool left = false;   // add(T^{-i}, i>0) = add(nu T^{-i})
  bool right = false;  // add(Tbar^i, i>0) = add(nu Tbar^i)
  bool stable() const { return shape_ok && left && right; }
};
/// T in degrees [-n, 0] over A, Tbar in [0, n] over B.
NuStableReport almost_nu_stable(const ProjComplex& t, const ProjComplex& tbar, std::mt19937_64& rng);

}  // namespace extdim
