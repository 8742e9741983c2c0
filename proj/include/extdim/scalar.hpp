#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace extdim {

/// The ground field: exact rationals, or the prime field F_p.
struct FieldSpec {
  std::uint32_t p = 0;  // 0 means Q

  bool is_rational() const { return p == 0; }
  std::string name() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Exact field element.
///
/// A rational is kept as a reduced int64 fraction while it fits and spills to
/// a GMP rational otherwise. A residue carries its modulus. Rationals mix
/// freely with residues: the rational is mapped into F_p first, which lets
/// literals such as 0, 1 and -1 be written without knowing the field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long v) : num_(v) {}  // NOLINT(implicit)
  Scalar(int v) : num_(v) {}        // NOLINT(implicit)
  static Scalar fraction(long long num, long long den);
  static Scalar residue(long long v, std::uint32_t p);
  static Scalar from_mpq(const mpq_class& q);
  /// Parses "3", "-2", "3/4". Throws std::invalid_argument.
  static Scalar parse(std::string_view text);

  /// Maps a rational into the given field (identity for Q).
  Scalar in_field(const FieldSpec& f) const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const;
  bool is_residue() const { return p_ != 0; }
  std::uint32_t modulus() const { return p_; }

  Scalar operator-() const;
  Scalar inverse() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Rational value; residues are returned as their representative in [0, p).
  mpq_class to_mpq() const;
  /// Residue value in [0, p) (requires is_residue()).
  std::uint32_t residue_value() const { return static_cast<std::uint32_t>(num_); }
  std::string str() const;

 private:
  static Scalar make_rational(const mpq_class& q);
  static Scalar make_rational(__int128 num, __int128 den);
  std::uint64_t residue_of(std::uint32_t p) const;

  long long num_ = 0;
  long long den_ = 1;
  std::uint32_t p_ = 0;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace extdim
