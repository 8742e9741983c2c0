#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "extdim/algebra.hpp"

namespace extdim {

struct ParseError : std::runtime_error {
  int line, col;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}
};

/// Parses the line-oriented algebra description:
///
///   field Q | field F <p>
///   vertex <label> ...
///   arrow <label> : <src> -> <tgt>
///   rel [coef*]<a1.a2...> [(+|-) [coef*]<path> ...]
///
/// Paths are written in traversal order. `field_override` replaces the
/// declared field. Throws ParseError (with position) or AlgebraError.
AlgebraPtr parse_algebra(std::string_view text, std::optional<FieldSpec> field_override = std::nullopt);
AlgebraPtr load_algebra(const std::string& path, std::optional<FieldSpec> field_override = std::nullopt);

/// Parses "Q", "F2", "F 3", "F_5".
FieldSpec parse_field(const std::string& s);

/// Canonical text form accepted by parse_algebra (only for algebras given by relations).
std::string to_dsl(const Algebra& a);

}  // namespace extdim
