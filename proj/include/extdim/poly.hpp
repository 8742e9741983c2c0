#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "extdim/linalg.hpp"

namespace extdim {

/// Univariate polynomial, coefficients from degree 0 upwards, no trailing zeros.
struct Poly {
  Vec c;

  Poly() = default;
  explicit Poly(Vec coeffs);
  static Poly constant(const Scalar& s);
  static Poly x_minus(const Scalar& s);

  int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c.empty(); }
  const Scalar& lead() const { return c.back(); }
  Poly monic() const;
  Scalar eval(const Scalar& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
};

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
/// Returns (g, s, t) with s*a + t*b = g monic.
struct Xgcd {
  Poly g, s, t;
};
Xgcd xgcd(const Poly& a, const Poly& b);

/// Distinct roots lying in the ground field. Over Q uses the rational root
/// test; over F_p restricts to gcd(f, x^p - x) and splits it.
std::vector<Scalar> roots_in_field(const Poly& f, const FieldSpec& field, std::mt19937_64& rng);

}  // namespace extdim
