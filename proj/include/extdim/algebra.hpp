#pragma once

#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "extdim/finite_algebra.hpp"
#include "extdim/linalg.hpp"
#include "extdim/quiver.hpp"

namespace extdim {

using Word = std::vector<int>;  // arrow indices in traversal order

struct Term {
  Scalar coef;
  Word word;
};
using Relation = std::vector<Term>;

struct BasisElem {
  int src = 0;
  int tgt = 0;
  Word word;  // empty for the trivial path at src == tgt
};

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A finite-dimensional basic algebra presented by a quiver.
///
/// Basis elements are words in the arrows. Products are written in traversal
/// order: x*y means "x, then y" and is nonzero only when x ends where y
/// starts. The first num_vertices() basis elements are the trivial paths,
/// the next num_arrows() are the arrows.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  /// kQ/I for an admissible I given by relations (path basis computed here).
  static std::shared_ptr<Algebra> from_relations(FieldSpec field, Quiver q, std::vector<Relation> rels);
  /// Word basis plus multiplication table (used for algebras built from
  /// structure constants). `table[i*dim+j]` is basis_i * basis_j.
  static std::shared_ptr<Algebra> from_table(FieldSpec field, Quiver q, std::vector<BasisElem> basis,
                                             std::vector<Sparse> table);

  const FieldSpec& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int num_vertices() const { return quiver_.num_vertices(); }
  int num_arrows() const { return quiver_.num_arrows(); }
  const BasisElem& basis(int i) const { return basis_[i]; }
  const std::vector<BasisElem>& basis() const { return basis_; }
  int arrow_basis(int a) const { return num_vertices() + a; }
  const Sparse& mult(int i, int j) const { return table_[static_cast<size_t>(i) * dim() + j]; }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec unit(int i) const;
  Vec zero() const { return Vec(dim()); }
  Scalar one_scalar() const;
  /// Basis indices of paths from u to v (the space e_u A e_v).
  const std::vector<int>& paths(int u, int v) const { return paths_[static_cast<size_t>(u) * num_vertices() + v]; }
  /// Least N with rad^N = 0.
  int loewy_length() const { return loewy_; }
  const std::vector<Relation>& relations() const { return relations_; }
  bool has_relations() const { return has_relations_; }
  bool is_hereditary_path_algebra() const;
  std::string word_string(const Word& w, int vertex) const;
  std::string basis_string(int i) const { return word_string(basis_[i].word, basis_[i].src); }

  /// Opposite algebra, same basis indices with reversed words. Cached; the
  /// opposite of the opposite is this algebra again.
  std::shared_ptr<const Algebra> opposite() const;
  std::shared_ptr<const Algebra> ptr() const;
  bool is_opposite_of(const Algebra& other) const { return opposite().get() == &other; }

  FiniteAlgebra as_finite() const;

 private:
  Algebra() = default;
  void finish();  // fills paths_, loewy_

  FieldSpec field_;
  Quiver quiver_;
  std::vector<BasisElem> basis_;
  std::vector<Sparse> table_;
  std::vector<std::vector<int>> paths_;
  std::vector<Relation> relations_;
  bool has_relations_ = false;
  int loewy_ = 1;

  mutable std::once_flag opp_once_;
  mutable std::unique_ptr<Algebra> opp_;
  const Algebra* parent_ = nullptr;  // set on an opposite owned by its parent
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Quiver presentation of a basic algebra given by structure constants and
/// a complete set of pairwise non-isomorphic primitive idempotents.
struct Presentation {
  AlgebraPtr algebra;
  std::vector<Vec> images;  // image in the source algebra of each new basis element
};
Presentation present(const FiniteAlgebra& a, const IdempotentSplit& split, const std::vector<std::string>& vertex_labels,
                     const std::string& arrow_prefix);

/// A ⋉ D(A), presented by a quiver.
AlgebraPtr trivial_extension(const Algebra& a, std::mt19937_64& rng);

/// Structure constants of the trivial extension on A ⊕ D(A) (basis: A's basis, then the dual basis).
FiniteAlgebra trivial_extension_constants(const Algebra& a);

}  // namespace extdim
