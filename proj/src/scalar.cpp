#include "extdim/scalar.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>

namespace extdim {

namespace {

constexpr __int128 kMax = std::numeric_limits<long long>::max();
constexpr __int128 kMin = -kMax;  // keep negation safe

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = static_cast<unsigned __int128>(r) * b % m;
    b = static_cast<unsigned __int128>(b) * b % m;
    e >>= 1;
  }
  return r;
}

mpz_class to_mpz(long long v) {
  mpz_class z;
  mpz_set_si(z.get_mpz_t(), v);
  return z;
}

}  // namespace

std::string FieldSpec::name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar Scalar::make_rational(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  if (num >= kMin && num <= kMax && den <= kMax) {
    Scalar s;
    s.num_ = static_cast<long long>(num);
    s.den_ = static_cast<long long>(den);
    return s;
  }
  auto as_mpz = [](__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
  };
  return make_rational(mpq_class(as_mpz(num), as_mpz(den)));
}

Scalar Scalar::make_rational(const mpq_class& q0) {
  mpq_class q(q0);
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() &&
      q.get_num() != std::numeric_limits<long>::min()) {
    Scalar s;
    s.num_ = q.get_num().get_si();
    s.den_ = q.get_den().get_si();
    return s;
  }
  Scalar s;
  s.num_ = 1;  // unused when big_ is set; non-zero keeps is_zero() honest
  s.big_ = std::make_shared<const mpq_class>(std::move(q));
  return s;
}

Scalar Scalar::fraction(long long num, long long den) { return make_rational(num, den); }

Scalar Scalar::residue(long long v, std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime");
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  Scalar s;
  s.num_ = r;
  s.den_ = 1;
  s.p_ = p;
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) { return make_rational(q); }

Scalar Scalar::parse(std::string_view text) {
  auto parse_int = [](std::string_view t) {
    if (t.empty()) throw std::invalid_argument("empty number");
    mpz_class z;
    std::string s(t);
    if (s[0] == '+') s.erase(0, 1);
    if (s.empty() || z.set_str(s, 10) != 0) throw std::invalid_argument("bad number '" + std::string(t) + "'");
    return z;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_rational(mpq_class(parse_int(text)));
  mpz_class n = parse_int(text.substr(0, slash));
  mpz_class d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return make_rational(mpq_class(n, d));
}

std::uint64_t Scalar::residue_of(std::uint32_t p) const {
  if (p_ != 0) {
    if (p_ != p) throw std::domain_error("mixing residues of different moduli");
    return static_cast<std::uint64_t>(num_);
  }
  auto reduce = [p](const mpz_class& z) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
  };
  std::uint64_t n, d;
  if (big_) {
    n = reduce(big_->get_num());
    d = reduce(big_->get_den());
  } else {
    long long nn = num_ % static_cast<long long>(p);
    if (nn < 0) nn += p;
    n = static_cast<std::uint64_t>(nn);
    d = static_cast<std::uint64_t>(den_ % static_cast<long long>(p));
  }
  if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
  if (d == 1) return n;
  return static_cast<unsigned __int128>(n) * powmod(d, p - 2, p) % p;
}

Scalar Scalar::in_field(const FieldSpec& f) const {
  if (f.is_rational()) {
    if (p_ != 0) throw std::domain_error("cannot map a residue into Q");
    return *this;
  }
  return residue(static_cast<long long>(residue_of(f.p)), f.p);
}

bool Scalar::is_one() const {
  if (big_) return false;
  return num_ == 1 && den_ == 1;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(to_mpz(num_), to_mpz(den_));
}

Scalar Scalar::operator-() const {
  if (p_ != 0) return residue(num_ == 0 ? 0 : static_cast<long long>(p_) - num_, p_);
  if (big_) return make_rational(mpq_class(-*big_));
  Scalar s = *this;
  s.num_ = -num_;
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_ != 0) return residue(static_cast<long long>(powmod(num_, p_ - 2, p_)), p_);
  if (big_) return make_rational(mpq_class(1 / *big_));
  return make_rational(static_cast<__int128>(den_), static_cast<__int128>(num_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.p_ != 0 || b.p_ != 0) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    std::uint64_t s = a.residue_of(p) + b.residue_of(p);
    return Scalar::residue(static_cast<long long>(s % p), p);
  }
  if (a.big_ || b.big_) return Scalar::make_rational(mpq_class(a.to_mpq() + b.to_mpq()));
  if (a.den_ == 1 && b.den_ == 1)
    return Scalar::make_rational(static_cast<__int128>(a.num_) + b.num_, 1);
  __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  __int128 den = static_cast<__int128>(a.den_) * b.den_;
  return Scalar::make_rational(num, den);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.p_ != 0 || b.p_ != 0) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    std::uint64_t s = a.residue_of(p) * b.residue_of(p);
    return Scalar::residue(static_cast<long long>(s % p), p);
  }
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.big_ || b.big_) return Scalar::make_rational(mpq_class(a.to_mpq() * b.to_mpq()));
  return Scalar::make_rational(static_cast<__int128>(a.num_) * b.num_,
                               static_cast<__int128>(a.den_) * b.den_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ != 0 || b.p_ != 0) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    return a.residue_of(p) == b.residue_of(p);
  }
  if (a.big_ || b.big_) return a.to_mpq() == b.to_mpq();
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(num_);
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace extdim
