#include "extdim/poly.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace extdim {

namespace {

void trim(Vec& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(Scalar(1));
  base = divmod(base, m).second;
  while (e) {
    if (e & 1) r = divmod(r * base, m).second;
    base = divmod(base * base, m).second;
    e >>= 1;
  }
  return r;
}

std::vector<mpz_class> divisors(const mpz_class& n0) {
  mpz_class n = abs(n0);
  std::vector<mpz_class> out;
  if (n == 0) return out;
  // Past this size trial division gets silly; the caller then finds fewer roots,
  // which only means fewer splitting attempts succeed.
  if (n > mpz_class("1000000000000")) return {mpz_class(1), n};
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class m = n;
  for (mpz_class d = 2; d * d <= m; ++d) {
    int k = 0;
    while (m % d == 0) {
      m /= d;
      ++k;
    }
    if (k) fac.emplace_back(d, k);
  }
  if (m > 1) fac.emplace_back(m, 1);
  out.push_back(1);
  for (auto& [p, k] : fac) {
    size_t sz = out.size();
    mpz_class pw = 1;
    for (int i = 1; i <= k; ++i) {
      pw *= p;
      for (size_t j = 0; j < sz; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

std::vector<Scalar> rational_roots(const Poly& f) {
  std::vector<Scalar> out;
  Poly g = f;
  // strip the zero root
  int shift = 0;
  while (!g.c.empty() && g.c[0].is_zero()) {
    g.c.erase(g.c.begin());
    ++shift;
  }
  if (shift) out.push_back(Scalar(0));
  if (g.degree() < 1) return out;
  mpz_class l = 1;
  for (auto& x : g.c) {
    mpz_class d = x.to_mpq().get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> ic;
  for (auto& x : g.c) {
    mpq_class q = x.to_mpq() * l;
    ic.push_back(q.get_num());
  }
  auto ps = divisors(ic.front());
  auto qs = divisors(ic.back());
  for (auto& p : ps)
    for (auto& q : qs)
      for (int sgn : {1, -1}) {
        mpq_class cand(p * sgn, q);
        cand.canonicalize();
        Scalar s = Scalar::from_mpq(cand);
        if (std::find(out.begin(), out.end(), s) != out.end()) continue;
        if (g.eval(s).is_zero()) out.push_back(s);
      }
  return out;
}

std::vector<Scalar> split_roots(const Poly& g, std::uint32_t p, std::mt19937_64& rng) {
  // g is a product of distinct linear factors over F_p.
  std::vector<Scalar> out;
  if (g.degree() <= 0) return out;
  if (g.degree() == 1) {
    Poly m = g.monic();
    out.push_back(-m.c[0]);
    return out;
  }
  if (p <= 4096) {
    for (std::uint32_t a = 0; a < p; ++a) {
      Scalar s = Scalar::residue(a, p);
      if (g.eval(s).is_zero()) out.push_back(s);
    }
    return out;
  }
  std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
  for (int tries = 0; tries < 200; ++tries) {
    Scalar a = Scalar::residue(static_cast<long long>(dist(rng)), p);
    Poly h = powmod(Poly::x_minus(-a), (p - 1) / 2, g) - Poly::constant(Scalar::residue(1, p));
    Poly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      auto r1 = split_roots(d, p, rng);
      auto r2 = split_roots(divmod(g, d).first, p, rng);
      r1.insert(r1.end(), r2.begin(), r2.end());
      return r1;
    }
  }
  throw std::runtime_error("root splitting did not converge");
}

}  // namespace

Poly::Poly(Vec coeffs) : c(std::move(coeffs)) { trim(c); }

Poly Poly::constant(const Scalar& s) { return Poly(Vec{s}); }

Poly Poly::x_minus(const Scalar& s) { return Poly(Vec{-s, Scalar(1)}); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return Poly(scale(lead().inverse(), c));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  Vec r(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
  return Poly(std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  Vec r(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  Vec r(a.c.size() + b.c.size() - 1);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  return Poly(std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Vec rem = a.c;
  int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  Vec q(a.degree() - db + 1);
  Scalar inv = b.lead().inverse();
  for (int k = a.degree() - db; k >= 0; --k) {
    Scalar f = rem[k + db] * inv;
    q[k] = f;
    if (f.is_zero()) continue;
    for (int i = 0; i <= db; ++i) rem[k + i] -= f * b.c[i];
  }
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(1), s1;
  Poly t0, t1 = Poly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.lead().inverse();
  return {Poly(scale(inv, r0.c)), Poly(scale(inv, s0.c)), Poly(scale(inv, t0.c))};
}

std::vector<Scalar> roots_in_field(const Poly& f, const FieldSpec& field, std::mt19937_64& rng) {
  if (f.degree() < 1) return {};
  if (field.is_rational()) return rational_roots(f);
  std::uint32_t p = field.p;
  Poly fm = Poly(Vec(f.c.begin(), f.c.end()));
  for (auto& x : fm.c) x = x.in_field(field);
  fm = Poly(fm.c);
  Poly x = Poly(Vec{Scalar::residue(0, p), Scalar::residue(1, p)});
  Poly xp = powmod(x, p, fm);
  Poly g = gcd(fm, xp - x);
  return split_roots(g, p, rng);
}

}  // namespace extdim
