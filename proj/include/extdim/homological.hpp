#pragma once

#include <vector>

#include "extdim/rep.hpp"

namespace extdim {

/// Minimal projective cover P -> M; P = sum of P(vertices[k]) in that order.
struct ProjCover {
  Rep p;
  std::vector<int> vertices;
  std::vector<Vec> gens;  // image in M of the k-th top generator
  Morphism map;
};
ProjCover projective_cover(const Rep& m);

/// Map from the cover's projective sending the k-th generator to images[k] in N.
Morphism map_from_cover(const ProjCover& c, const Rep& n, const std::vector<Vec>& images);
/// A lift h: P -> N of g: P -> M through a surjection p: N -> M (p o h = g).
Morphism lift(const ProjCover& c, const Rep& n, const Morphism& p, const Morphism& g);
/// Unit vector of the k-th generator inside the cover's projective at its vertex.
Vec generator_in_cover(const ProjCover& c, int k);

/// Minimal injective envelope M -> I; I = sum of I(vertices[k]).
struct InjEnvelope {
  Rep i;
  std::vector<int> vertices;
  Morphism map;
};
InjEnvelope injective_envelope(const Rep& m);

/// 0 -> Omega M -> P0 -> M -> 0 (minimal).
struct Syzygy {
  ProjCover cover;
  Rep omega;
  Morphism inc;
};
Syzygy syzygy(const Rep& m);
/// 0 -> M -> I0 -> Omega^- M -> 0 (minimal).
struct Cosyzygy {
  InjEnvelope env;
  Rep coomega;
  Morphism proj;
};
Cosyzygy cosyzygy(const Rep& m);

/// Left multiplication by basis element x (a path u -> v): P(v) -> P(u).
Morphism left_mult(const Algebra& a, int x, const Rep& p_v, const Rep& p_u);
/// Left multiplication by an element x of e_u A e_v: P(v) -> P(u).
Morphism left_mult(const Algebra& a, const Vec& x, int u, int v, const Rep& p_v, const Rep& p_u);

/// Hom_A(X, A) as a representation over the opposite algebra, and its action on maps.
Rep hom_into_regular(const Rep& x);
Morphism hom_into_regular(const Rep& x, const Rep& y, const Morphism& f);  // Hom(Y,A) -> Hom(X,A)
/// Nakayama functor D Hom_A(-, A).
Rep nakayama(const Rep& x);
Morphism nakayama(const Rep& x, const Rep& y, const Morphism& f);

bool is_projective(const Rep& m);
bool is_injective(const Rep& m);

/// Auslander-Reiten translates.
Rep tau(const Rep& m);
Rep tau_inverse(const Rep& m);

/// Ext^1(M, N) as Hom(Omega M, N) modulo maps factoring through P0.
struct ExtSpace {
  Rep m, n;
  Syzygy syz;
  HomSpace hom_omega;            // Hom(Omega M, N)
  std::vector<Morphism> classes;  // basis of representatives
  Mat change;                    // rows: class coordinates from Hom(Omega M, N) coordinates
  int dim() const { return static_cast<int>(classes.size()); }
  /// Class of a map Omega M -> N.
  Vec coords(const Morphism& xi) const;
};
ExtSpace ext1(const Rep& m, const Rep& n);
int ext1_dim(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

/// 0 -> N -> E -> M -> 0 represented by xi: Omega M -> N (pushout).
struct ShortExact {
  Rep left, middle, right;
  Morphism f;  // left -> middle
  Morphism g;  // middle -> right
};
ShortExact extension(const ExtSpace& e, const Morphism& xi);

/// Radical layers rad^k M / rad^{k+1} M, as dimension vectors.
std::vector<std::vector<int>> radical_layers(const Rep& m);
int loewy_length(const Rep& m);

}  // namespace extdim
