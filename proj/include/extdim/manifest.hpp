#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extdim/io.hpp"
#include "extdim/verify.hpp"

namespace extdim {

/// Text of the Beilinson algebra with n + 1 vertices 0..n, arrows
/// x<i>_<k>: k -> k+1 (i = 0..n) and commutativity relations.
std::string beilinson_dsl(int n, const FieldSpec& field = FieldSpec{0});

struct AlgebraSource {
  std::string path;  // relative to the manifest directory; empty for generated algebras
  std::string hash;
  std::string generator;  // "beilinson"
  int n = 0;
};

struct ComplexSource {
  std::string path;
  std::string hash;
  std::string algebra;  // name in the manifest
};

struct Claim {
  std::string id;
  std::string anchor;
  std::string verifier;
  Json args;
  Json expect;
};

struct Manifest {
  std::string id;
  std::string dir;
  FieldSpec field{0};
  std::uint64_t seed = 0;
  KnitBudget budget;
  int cutoff = 12;
  std::map<std::string, AlgebraSource> algebras;
  std::map<std::string, ComplexSource> complexes;
  std::vector<Claim> claims;
};

/// Parses and checks a manifest (content hashes of every referenced file).
Manifest load_manifest(const std::string& path);
/// Manifests in a directory, sorted by id.
std::vector<std::string> manifest_paths(const std::string& dir);

struct RunOptions {
  std::optional<FieldSpec> field;
  std::optional<std::uint64_t> seed;
  std::optional<int> budget_dim, budget_steps;
};

enum class ClaimStatus { Pass, Fail, Budget, Error };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  Claim claim;
  ClaimStatus status = ClaimStatus::Error;
  Json value;
  std::string certificate;
  std::string message;
  double seconds = 0;
};

struct FixtureRun {
  std::string id;
  std::string field;
  std::uint64_t seed = 0;
  KnitBudget budget;
  std::vector<ClaimResult> results;
  int count(ClaimStatus s) const;
  Json json() const;
};

/// Runs every claim of a manifest in file order. Input errors propagate as InputError.
FixtureRun run_manifest(const Manifest& m, const RunOptions& opt = {});

/// Names of the registered verifiers.
std::vector<std::string> verifier_names();

}  // namespace extdim
