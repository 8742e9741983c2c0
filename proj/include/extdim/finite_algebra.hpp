#pragma once

#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "extdim/linalg.hpp"
#include "extdim/poly.hpp"

namespace extdim {

using Sparse = std::vector<std::pair<int, Scalar>>;

/// Raised when an idempotent cannot be split off and locality cannot be
/// certified either (e.g. a residue ring that is a proper division algebra).
struct NonsplitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Associative unital algebra given by structure constants on a basis.
class FiniteAlgebra {
 public:
  FiniteAlgebra() = default;
  FiniteAlgebra(FieldSpec field, int dim, std::vector<Sparse> table, Vec one);

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  const Vec& one() const { return one_; }
  const Sparse& product(int i, int j) const { return table_[static_cast<size_t>(i) * dim_ + j]; }
  Vec mul(const Vec& x, const Vec& y) const;
  Vec unit(int i) const;
  Vec zero() const { return Vec(dim_); }

  /// Spanning columns of x*A*y (independent).
  Mat corner(const Vec& e, const Vec& f) const;
  /// Minimal polynomial of x inside the unital algebra e*A*e (identity e).
  Poly min_poly(const Vec& x, const Vec& e) const;
  bool is_associative() const;

 private:
  FieldSpec field_;
  int dim_ = 0;
  std::vector<Sparse> table_;
  Vec one_;
};

/// A local corner e*A*e with residue field k: every element z is
/// lambda(z)*e + (element of the nilpotent ideal spanned by `rad`).
struct LocalCert {
  Vec e;
  Mat basis;  // columns spanning e*A*e
  Mat rad;    // columns spanning the radical of e*A*e
  Scalar lambda(const Vec& z) const;
};

struct IdempotentSplit {
  std::vector<Vec> idempotents;  // complete set of primitive orthogonal idempotents
  std::vector<LocalCert> certs;  // locality certificate per idempotent
  std::vector<int> iso_class;    // class index per idempotent (same class = isomorphic)
  int num_classes = 0;
};

/// Complete set of primitive orthogonal idempotents of A summing to 1.
/// Throws NonsplitError when neither splitting nor a locality certificate is found.
IdempotentSplit primitive_idempotents(const FiniteAlgebra& a, std::mt19937_64& rng);

/// Locality certificate of e*A*e if it is local with residue field k.
std::optional<LocalCert> local_certificate(const FiniteAlgebra& a, const Vec& e, std::mt19937_64& rng);

/// Whether the primitive idempotents e, f (with certificates) are isomorphic.
bool idempotents_isomorphic(const FiniteAlgebra& a, const LocalCert& ce, const Vec& f);

}  // namespace extdim
