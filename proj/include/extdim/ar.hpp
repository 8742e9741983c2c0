#pragma once

#include <random>
#include <string>
#include <vector>

#include "extdim/decompose.hpp"
#include "extdim/homological.hpp"

namespace extdim {

/// 0 -> tau M -> E -> M -> 0 for indecomposable non-projective M. The class
/// spans the socle of Ext^1(M, tau M) over End(M).
/// Throws std::invalid_argument when M is projective or decomposable.
ShortExact almost_split_sequence(const Rep& m, std::mt19937_64& rng);

struct KnitBudget {
  int max_dim = 80;
  int max_steps = 512;
};

struct ARNode {
  Rep module;
  bool projective = false;
  bool injective = false;
  int tau = -1;      // node index of tau M, if computed
  int tau_inv = -1;  // node index of tau^- M, if computed
};

struct Mesh {
  int start = -1;  // tau M
  int end = -1;    // M
  std::vector<std::pair<int, int>> middle;  // (node, multiplicity)
};

struct ARQuiver {
  AlgebraPtr alg;
  std::vector<ARNode> nodes;
  std::vector<Mesh> meshes;
  bool complete = false;
  int steps = 0;
  std::string stop_reason;  // empty when complete
  IndecCatalogue cat;
  /// Index of a node isomorphic to x, or -1.
  int find(const Rep& x) const { return cat.find(x); }
  /// Irreducible maps (from, to, multiplicity), read off the meshes and the radicals of the projectives.
  std::vector<std::tuple<int, int, int>> arrows(std::mt19937_64& rng) const;
};

/// Knitting from the indecomposable projectives, closed under tau, tau^- and
/// irreducible maps; a finished run is the whole AR quiver.
ARQuiver knit(AlgebraPtr a, const KnitBudget& budget, std::mt19937_64& rng);

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

struct RepFiniteness {
  Tri verdict = Tri::Unknown;
  std::string certificate;
  int indecomposables = 0;  // when Yes
};
/// Gabriel route first (hereditary with a non-Dynkin component gives No), then knitting.
RepFiniteness representation_finite(AlgebraPtr a, const KnitBudget& budget, std::mt19937_64& rng,
                                    ARQuiver* out = nullptr);

struct NodeCheck {
  int vertex = -1;
  bool projective = false;
  bool injective = false;
  Rep middle;  // of 0 -> S -> E -> tau^- S -> 0
  bool middle_projective = false;
  bool is_node() const { return !projective && !injective && middle_projective; }
};
std::vector<NodeCheck> find_nodes(AlgebraPtr a, std::mt19937_64& rng);

}  // namespace extdim
