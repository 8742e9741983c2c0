#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extdim/ar.hpp"

namespace extdim {

struct DimValue {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Unknown;
  int value = 0;                       // Finite
  int period_from = -1, period_to = -1;  // Infinite: Omega^from M ~ Omega^to M, nonzero
  int cutoff = 0;                      // Unknown
  std::string reason;

  static DimValue finite(int n);
  static DimValue infinite(int i, int j);
  static DimValue unknown(int cutoff, std::string reason = {});
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  bool is_unknown() const { return kind == Kind::Unknown; }
  std::string str() const;
};
/// Max, with infinity absorbing and unknown beating finite.
DimValue max(const DimValue& a, const DimValue& b);

/// Minimal syzygies Omega^0 M = M, ..., Omega^k M.
std::vector<Rep> syzygies(const Rep& m, int k);
DimValue proj_dim(const Rep& m, int cutoff, std::mt19937_64& rng);
/// Projective dimension of D(M) over the opposite algebra.
DimValue inj_dim(const Rep& m, int cutoff, std::mt19937_64& rng);
DimValue global_dim(AlgebraPtr a, int cutoff, std::mt19937_64& rng);

/// From 0 -> X -> Y -> Z -> 0, an exact 0 -> Omega^{i+1} Z -> Omega^i X + P -> Omega^i Y -> 0
/// with P projective (a pullback along the cover of Z, then i horseshoe steps).
ShortExact syzygy_sequence(const ShortExact& s, int i);
bool is_exact(const ShortExact& s);

/// add(M) for a module M: its indecomposable summands up to isomorphism.
class AddCategory {
 public:
  AddCategory(const Rep& m, std::mt19937_64& rng);
  AddCategory(const std::vector<Rep>& parts, std::mt19937_64& rng);
  int size() const { return cat_.size(); }
  const Rep& operator[](int i) const { return cat_[i]; }
  /// Multiplicities of the summands of X in add(M), or nullopt if X is not in add(M).
  std::optional<std::vector<int>> contains(const Rep& x, std::mt19937_64& rng) const;

  struct Approximation {
    Rep source;
    Morphism map;
    std::vector<int> mult;  // copies of each indecomposable of add(M)
    bool surjective = false;
  };
  /// Minimal right add(M)-approximation of X.
  Approximation approximate(const Rep& x) const;

 private:
  void init(const std::vector<Rep>& parts, std::mt19937_64& rng);
  IndecCatalogue cat_;
  std::vector<std::vector<HomSpace>> homs_;  // homs_[j][k] = Hom(N_j, N_k)
};

struct WrdResult {
  DimValue value;
  std::vector<std::vector<int>> terms;  // M_i multiplicities
  std::vector<Rep> kernels;             // K_i = ker(M_i -> K_{i-1}), K_{-1} = X
};
/// Upper bound for the weak M-resolution dimension of X through minimal right
/// approximations (Y = 0). Finite values are certified by an exact resolution.
WrdResult wrd_upper(const AddCategory& m, const Rep& x, int cutoff, std::mt19937_64& rng);
/// Sup over the nodes of a complete AR quiver; unknown when the quiver is partial.
DimValue wrd_upper_algebra(const AddCategory& m, const ARQuiver& ar, int cutoff, std::mt19937_64& rng);

struct EdBounds {
  int lower = 0;
  std::string lower_certificate = "trivial";
  DimValue upper;
  std::string upper_certificate;
  std::vector<std::pair<std::string, DimValue>> candidates;
  bool contains(int v) const;
  bool exact() const { return upper.is_finite() && upper.value == lower; }
  std::string str() const;
};
EdBounds ed_bounds(AlgebraPtr a, const KnitBudget& budget, std::mt19937_64& rng, int cutoff = 12,
                   ARQuiver* ar_out = nullptr);

/// Bounds for exhaustive searches over a finite field.
struct SearchBounds {
  int max_summands = 2;  // summands in each end term of an enumerated extension
  int max_classes = 4096;
  long max_steps = 200000;
};

/// Least n with each node in [T]_{n+1} (T = sum of the nodes in t), computed
/// exhaustively over a finite field within the bounds; -1 = not reached.
std::vector<int> filtration_levels(const ARQuiver& ar, const std::vector<int>& t, int max_n, const SearchBounds& sb,
                                   std::mt19937_64& rng, bool* exhausted = nullptr);
bool filtration_member(const ARQuiver& ar, const Rep& x, const std::vector<int>& t, int n, const SearchBounds& sb,
                       std::mt19937_64& rng);

/// Exhaustive ed: least n such that mod A = [T]_{n+1} for a basic T among the
/// nodes of a complete AR quiver (searching n = 0, 1, ...). -1 if not found.
int ed_exhaustive(const ARQuiver& ar, int max_n, const SearchBounds& sb, std::mt19937_64& rng);
/// Exhaustive weak resolution dimension of each node for M = sum of the nodes
/// in m: exact sequences 0 -> M_n -> ... -> M_0 -> X + Y -> 0 with n <= max_n
/// (injective maps enumerated over the finite field); -1 if not reached.
std::vector<int> wrd_levels(const ARQuiver& ar, const std::vector<int>& m, int max_n, const SearchBounds& sb,
                            std::mt19937_64& rng);
int wrd_exhaustive(const ARQuiver& ar, int max_n, const SearchBounds& sb, std::mt19937_64& rng);

}  // namespace extdim
