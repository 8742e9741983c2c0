#pragma once

#include <string>
#include <utility>
#include <vector>

#include "extdim/algebra.hpp"

namespace extdim {

/// A module as a representation of the bound quiver. Arrow a: i -> j carries
/// a dims[j] x dims[i] matrix acting on column vectors; a path a1.a2...ak acts
/// by M(ak)...M(a1).
struct Rep {
  AlgebraPtr alg;
  std::vector<int> dims;
  std::vector<Mat> arrows;

  static Rep zero(AlgebraPtr a);
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  std::vector<int> offsets() const;  // start of each vertex block in the total space
  /// Matrix of basis element b: M_src(b) -> M_tgt(b).
  Mat action(int b) const;
  std::vector<Mat> all_actions() const;
  /// Matrix of an element x of e_u A e_v (coordinates in the basis), M_u -> M_v.
  Mat action(const Vec& x, int u, int v) const;
  /// Relations hold (checked against the multiplication table).
  bool is_valid(std::string* why = nullptr) const;
  std::string dim_vector_string() const;
};

bool operator==(const Rep& a, const Rep& b);

/// Per-vertex matrices phi_i: M_i -> N_i (dims_N[i] x dims_M[i]).
using Morphism = std::vector<Mat>;

Morphism identity_morphism(const Rep& m);
Morphism zero_morphism(const Rep& m, const Rep& n);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Scalar& s, const Morphism& f);
bool is_zero(const Morphism& f);
bool is_morphism(const Rep& m, const Rep& n, const Morphism& f);
int rank(const Morphism& f);
bool is_injective(const Rep& m, const Morphism& f);
bool is_surjective(const Rep& n, const Morphism& f);
bool is_iso(const Rep& m, const Rep& n, const Morphism& f);
std::optional<Morphism> inverse(const Morphism& f);
/// Entries of all phi_i concatenated (row-major per vertex).
Vec flatten(const Morphism& f);
Morphism unflatten(const Vec& v, const Rep& m, const Rep& n);
/// Action on the total space (block diagonal).
Mat total_matrix(const Rep& m, const Rep& n, const Morphism& f);

/// A basis of Hom(M, N). A homomorphism f is recorded by a vector x(f): its
/// flattened entries, or (for the presentation method) the images of the
/// generators of M; coordinates are the entries of x(f) at the free positions.
struct HomSpace {
  std::vector<Morphism> basis;
  std::vector<int> free;
  std::vector<int> gen_vertex;  // empty for the direct method
  std::vector<Vec> gen_vec;
  int dim() const { return static_cast<int>(basis.size()); }
  Vec coords(const Morphism& f) const;
  Morphism combine(const Vec& c, const Rep& m, const Rep& n) const;
};
/// Via a projective presentation of M: unknowns are the images of the top
/// generators (defined in homological.cpp).
HomSpace hom_space(const Rep& m, const Rep& n);
/// Directly from the intertwining system on all matrix entries.
HomSpace hom_space_direct(const Rep& m, const Rep& n);

struct SubRep {
  Rep module;
  Morphism map;      // inclusion into, or projection onto, `module`
  Morphism section;  // quotients only: a linear (not module) section of `map`
};

/// Submodule spanned per vertex by the columns of u (must be stable).
SubRep subrep(const Rep& m, const std::vector<Mat>& u);
/// Quotient by the stable subspace spanned by the columns of u.
SubRep quotient(const Rep& m, const std::vector<Mat>& u);
SubRep kernel(const Rep& m, const Rep& n, const Morphism& f);
SubRep image(const Rep& m, const Rep& n, const Morphism& f);
SubRep cokernel(const Rep& m, const Rep& n, const Morphism& f);

struct DirectSum {
  Rep module;
  std::vector<Morphism> inj;
  std::vector<Morphism> proj;
};
DirectSum direct_sum(const std::vector<Rep>& parts);
Rep direct_sum(const Rep& a, const Rep& b);
Rep power(const Rep& a, int k);

Rep simple(AlgebraPtr a, int i);
Rep projective(AlgebraPtr a, int i);
Rep injective(AlgebraPtr a, int i);
/// D(M) = Hom_k(M, k) as a representation over the opposite algebra.
Rep dual(const Rep& m);
Morphism dual(const Morphism& f);  // D(f): D(N) -> D(M)
Rep regular(AlgebraPtr a);

/// Map P(i) -> M sending the trivial path to m in M_i.
Morphism from_projective(const Rep& p_i, int i, const Rep& m, const Vec& v);

/// Radical rad M (sum of arrow images) and socle (common kernel of arrows), per vertex column bases.
std::vector<Mat> radical_subspace(const Rep& m);
std::vector<Mat> socle_subspace(const Rep& m);
std::vector<int> top_dims(const Rep& m);
std::vector<int> socle_dims(const Rep& m);

}  // namespace extdim
