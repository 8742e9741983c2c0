#pragma once

#include <vector>

#include "extdim/homological.hpp"

namespace extdim {

/// A map between sums of indecomposable projectives. Entry (r, c) is an
/// element of e_{tgt[r]} A e_{src[c]} (full basis coordinates); it maps the
/// generator of P(src[c]) into P(tgt[r]) by left multiplication.
struct ProjMatrix {
  std::vector<int> tgt, src;
  std::vector<Vec> entries;  // row-major

  static ProjMatrix zero(const Algebra& a, std::vector<int> tgt, std::vector<int> src);
  int rows() const { return static_cast<int>(tgt.size()); }
  int cols() const { return static_cast<int>(src.size()); }
  Vec& at(int r, int c) { return entries[static_cast<size_t>(r) * src.size() + c]; }
  const Vec& at(int r, int c) const { return entries[static_cast<size_t>(r) * src.size() + c]; }
  bool is_zero() const;
};

ProjMatrix compose(const Algebra& a, const ProjMatrix& g, const ProjMatrix& f);  // g after f
ProjMatrix add(const ProjMatrix& f, const ProjMatrix& g);
ProjMatrix scale(const Scalar& s, const ProjMatrix& f);
/// Invertible entry: an element of e_v A e_v with nonzero trivial-path coefficient.
bool entry_invertible(const Algebra& a, const Vec& x, int u, int v);
bool is_radical(const Algebra& a, const ProjMatrix& f);
/// Keeps the given rows and columns.
ProjMatrix submatrix(const ProjMatrix& f, const std::vector<int>& rows, const std::vector<int>& cols);
/// [[a, b], [c, d]] with a: s1 -> t1, b: s2 -> t1, c: s1 -> t2, d: s2 -> t2.
ProjMatrix block2(const ProjMatrix& a, const ProjMatrix& b, const ProjMatrix& c, const ProjMatrix& d);
/// Diagonal sum.
ProjMatrix diag(const Algebra& alg, const ProjMatrix& a, const ProjMatrix& b);
ProjMatrix identity_pm(const Algebra& a, const std::vector<int>& v);

/// Sum of P(v) over the list, as a representation.
Rep term_module(AlgebraPtr a, const std::vector<int>& v);
Morphism to_morphism(AlgebraPtr a, const ProjMatrix& f);
ProjMatrix from_morphism(AlgebraPtr a, const std::vector<int>& tgt, const std::vector<int>& src, const Morphism& f);

/// Bounded complex of projectives; terms[k] sits in degree lo + k and
/// d[k]: terms[k] -> terms[k + 1].
struct ProjComplex {
  AlgebraPtr alg;
  int lo = 0;
  std::vector<std::vector<int>> terms;
  std::vector<ProjMatrix> d;

  static ProjComplex stalk(AlgebraPtr a, std::vector<int> v, int degree);
  int hi() const { return lo + static_cast<int>(terms.size()) - 1; }
  std::vector<int> term(int deg) const;
  ProjMatrix diff(int deg) const;  // deg -> deg + 1, zero outside the range
  bool is_zero() const;
  bool is_complex() const;
  bool is_radical() const;
  int total_rank() const;
  /// Drops empty terms at both ends (a zero complex keeps one empty term).
  void trim();
};

ProjComplex shift(const ProjComplex& x, int k);  // X[k]: degree i holds X^{i+k}, d scaled by (-1)^k
ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y);

/// Degree-n map X -> Y given by components X^k -> Y^{k+n} (k from x.lo to x.hi).
struct ChainMap {
  int n = 0;
  std::vector<ProjMatrix> comp;
};
ChainMap compose(const ProjComplex& x, const ProjComplex& y, const ProjComplex& z, const ChainMap& g,
                 const ChainMap& f);  // g after f, degree-0 maps
ChainMap identity_chain(const ProjComplex& x);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap scale(const Scalar& s, const ChainMap& f);
bool is_chain_map(const ProjComplex& x, const ProjComplex& y, const ChainMap& f);
/// Componentwise invertible (degree 0, same term multisets).
bool is_isomorphism(const ProjComplex& x, const ProjComplex& y, const ChainMap& f);

/// Hom_K(X, Y[n]) as the n-th cohomology of the Hom complex.
struct HomK {
  int n = 0;
  int cycles_dim = 0;
  std::vector<ChainMap> basis;  // representatives (chain maps of degree n)
  std::vector<ChainMap> cycles;  // all chain maps of degree n (basis of Z^n)
  int dim() const { return static_cast<int>(basis.size()); }
  /// Class coordinates of a degree-n chain map (f is assumed closed).
  Vec coords(const ChainMap& f) const;

  ProjComplex x, y;
  Mat br;      // boundary basis followed by the representatives, in Hom^n coordinates
  int nb = 0;  // number of boundary columns
  std::vector<int> pivot_rows;  // rows of br forming an invertible block
  Mat coord_map;                // representative rows of that block's inverse
};
HomK hom_homotopy(const ProjComplex& x, const ProjComplex& y, int n);

/// Flattened coordinates of a degree-n family X^k -> Y^{k+n}.
Vec flatten(const ProjComplex& x, const ProjComplex& y, const ChainMap& f);
ChainMap unflatten(const ProjComplex& x, const ProjComplex& y, int n, const Vec& v);

/// Hom_K(X, M[j]) for a module M.
int hom_to_module_dim(const ProjComplex& x, const Rep& m, int j);

/// Homotopy-equivalent radical complex, by Gaussian elimination of invertible entries.
ProjComplex radical_normal_form(const ProjComplex& x);
/// sup - inf + 1 of the radical normal form; 0 for a homotopy-zero complex.
int complex_length(const ProjComplex& x);

/// Cone of a degree-0 chain map f: X -> Y. Cone^k = X^{k+1} + Y^k.
struct Cone {
  ProjComplex c;
  ChainMap from_y;  // Y -> Cone
};
Cone cone(const ProjComplex& x, const ProjComplex& y, const ChainMap& f);

}  // namespace extdim
