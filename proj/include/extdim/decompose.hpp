#pragma once

#include <optional>
#include <random>
#include <vector>

#include "extdim/finite_algebra.hpp"
#include "extdim/rep.hpp"

namespace extdim {

/// End(M) with its hom basis; the algebra product is composition x*y = x o y.
struct EndRing {
  HomSpace hom;
  FiniteAlgebra alg;
  Morphism element(const Rep& m, const Vec& c) const { return hom.combine(c, m, m); }
  Vec coords(const Morphism& f) const { return hom.coords(f); }
};
EndRing end_ring(const Rep& m);

struct Summand {
  Rep module;
  Morphism inc;   // summand -> M
  Morphism proj;  // M -> summand, proj o inc = id
};

/// Krull-Schmidt decomposition via primitive idempotents of End(M).
std::vector<Summand> decompose(const Rep& m, std::mt19937_64& rng);

/// Locality certificate for End(M) when M is indecomposable (nullopt otherwise, or for M = 0).
std::optional<LocalCert> local_end(const Rep& m, const EndRing& e, std::mt19937_64& rng);
bool is_indecomposable(const Rep& m, std::mt19937_64& rng);

/// Isomorphism test for indecomposable M (with End(M) certificate) and N.
bool isomorphic_indecomposable(const Rep& m, const EndRing& em, const LocalCert& cm, const Rep& n);
bool isomorphic(const Rep& m, const Rep& n, std::mt19937_64& rng);

/// Catalogue of pairwise non-isomorphic indecomposables with cached certificates.
class IndecCatalogue {
 public:
  /// Index of an isomorphic entry, or -1.
  int find(const Rep& x) const;
  /// Adds x (assumed indecomposable) unless already present; returns its index.
  int insert(const Rep& x, std::mt19937_64& rng);
  int size() const { return static_cast<int>(items_.size()); }
  const Rep& operator[](int i) const { return items_[i].module; }
  const EndRing& end(int i) const { return items_[i].end; }
  const LocalCert& cert(int i) const { return items_[i].cert; }

 private:
  struct Item {
    Rep module;
    EndRing end;
    LocalCert cert;
  };
  std::vector<Item> items_;
};

/// Multiplicities of the indecomposable summands of M over a catalogue; new
/// summands are inserted.
std::vector<int> summand_multiplicities(const Rep& m, IndecCatalogue& cat, std::mt19937_64& rng);

/// rad(M, N) for indecomposable M with End(M) data: f is radical iff g o f is
/// in rad End(M) for all g: N -> M.
bool is_radical_map(const Rep& m, const EndRing& em, const LocalCert& cm, const Rep& n, const Morphism& f);

}  // namespace extdim
