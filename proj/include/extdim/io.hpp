#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "extdim/ar.hpp"
#include "extdim/complex.hpp"
#include "extdim/dimensions.hpp"

namespace extdim {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
/// 64-bit FNV-1a, 16 hex digits.
std::string content_hash(std::string_view bytes);

Json scalar_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const FieldSpec& f);

/// Vertices, arrows, basis paths as arrow-label lists, and the multiplication
/// table as sparse [i, j, k, coef] entries (basis_i * basis_j has coef at k).
Json algebra_json(const Algebra& a);

/// Reference to the file an algebra was read from.
struct AlgebraRef {
  std::string path;
  std::string hash;
};
Json ref_json(const AlgebraRef& r);

/// {"algebra": ref, "dims": [...], "arrows": {label: rows}}.
Json module_json(const Rep& m, const AlgebraRef& ref);
/// Checks the dimension vector, the matrix shapes and the relations.
Rep module_from_json(const Json& j, AlgebraPtr a);

/// {"algebra": ref, "basis": [...], "lo": k, "terms": [[[label, mult], ...], ...],
///  "differentials": [[[coords...]...]...]}; differential k maps degree lo+k
/// to lo+k+1, rows indexed by the expanded target term. An entry is a
/// coordinate array in the path basis, an object {path: coef}, or 0.
Json complex_json(const ProjComplex& x, const AlgebraRef& ref);
ProjComplex complex_from_json(const Json& j, AlgebraPtr a);
/// Radical normal form of a loaded complex; `warning` is set when it changed.
ProjComplex normalize_loaded(const ProjComplex& x, std::string* warning);

Json dim_value_json(const DimValue& d);
Json ed_bounds_json(const EdBounds& e);
/// Nodes with dimension vectors and flags, tau links, meshes, irreducible maps.
Json ar_json(const ARQuiver& ar, std::mt19937_64& rng);
/// Graphviz description of the AR quiver.
std::string ar_dot(const ARQuiver& ar, std::mt19937_64& rng);

}  // namespace extdim
