#include "extdim/finite_algebra.hpp"

#include <algorithm>

namespace extdim {

FiniteAlgebra::FiniteAlgebra(FieldSpec field, int dim, std::vector<Sparse> table, Vec one)
    : field_(field), dim_(dim), table_(std::move(table)), one_(std::move(one)) {
  if (static_cast<int>(table_.size()) != dim_ * dim_) throw std::invalid_argument("structure constant table has wrong size");
}

Vec FiniteAlgebra::mul(const Vec& x, const Vec& y) const {
  Vec r(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      const Sparse& p = product(i, j);
      if (p.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, v] : p) r[k] += c * v;
    }
  }
  return r;
}

Vec FiniteAlgebra::unit(int i) const {
  Vec v(dim_);
  v[i] = field_.is_rational() ? Scalar(1) : Scalar::residue(1, field_.p);
  return v;
}

Mat FiniteAlgebra::corner(const Vec& e, const Vec& f) const {
  std::vector<Vec> cols;
  SpanBuilder sb(dim_);
  for (int i = 0; i < dim_; ++i) {
    Vec v = mul(mul(e, unit(i)), f);
    if (sb.add(v)) cols.push_back(std::move(v));
  }
  return Mat::from_cols(cols, dim_);
}

Poly FiniteAlgebra::min_poly(const Vec& x, const Vec& e) const {
  std::vector<Vec> powers{e};
  Vec cur = e;
  for (int k = 1; k <= dim_ + 1; ++k) {
    cur = mul(cur, x);
    Mat m = Mat::from_cols(powers, dim_);
    auto sol = solve(m, cur);
    if (sol) {
      Vec c(k + 1);
      for (int i = 0; i < k; ++i) c[i] = -(*sol)[i];
      c[k] = 1;
      return Poly(std::move(c));
    }
    powers.push_back(cur);
  }
  throw std::logic_error("minimal polynomial search exceeded the dimension");
}

bool FiniteAlgebra::is_associative() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        if (mul(mul(unit(i), unit(j)), unit(k)) != mul(unit(i), mul(unit(j), unit(k)))) return false;
  return true;
}

Scalar LocalCert::lambda(const Vec& z) const {
  Mat m = Mat::hstack(Mat::from_cols({e}, static_cast<int>(e.size())), rad);
  auto sol = solve(m, z);
  if (!sol) throw std::logic_error("element outside the certified corner");
  return (*sol)[0];
}

namespace {

Vec eval_at(const FiniteAlgebra& a, const Poly& p, const Vec& x, const Vec& e) {
  Vec r = a.zero();
  for (int k = p.degree(); k >= 0; --k) {
    r = a.mul(r, x);
    axpy(r, p.c[k], e);
  }
  return r;
}

// Splits e along a root of the minimal polynomial of x when that polynomial
// has at least two coprime factors.
std::optional<Vec> try_split(const FiniteAlgebra& a, const Vec& x, const Vec& e, std::mt19937_64& rng,
                             std::optional<Scalar>* single_root) {
  Poly m = a.min_poly(x, e);
  if (single_root) single_root->reset();
  if (m.degree() <= 1) {
    if (single_root && m.degree() == 1) *single_root = -m.c[0];
    return std::nullopt;
  }
  auto rts = roots_in_field(m, a.field(), rng);
  for (const auto& lam : rts) {
    Poly f = Poly::constant(1), g = m;
    Poly lin = Poly::x_minus(lam);
    while (true) {
      auto [q, r] = divmod(g, lin);
      if (!r.is_zero()) break;
      g = q;
      f = f * lin;
    }
    if (g.degree() < 1) {
      if (single_root) *single_root = lam;
      return std::nullopt;
    }
    Xgcd xg = xgcd(f, g);
    Vec eps = eval_at(a, xg.t * g, x, e);
    return eps;
  }
  return std::nullopt;
}

bool nilpotent_subalgebra(const FiniteAlgebra& a, const Mat& n) {
  if (n.cols() == 0) return true;
  int d = a.dim();
  std::vector<Vec> base;
  for (int j = 0; j < n.cols(); ++j) base.push_back(n.col(j));
  // closed under products
  SpanBuilder sn(d);
  for (auto& v : base) sn.add(v);
  std::vector<Vec> cur = base;
  for (int step = 0; step <= d; ++step) {
    std::vector<Vec> next;
    SpanBuilder sb(d);
    for (auto& x : cur)
      for (auto& y : base) {
        Vec p = a.mul(x, y);
        if (step == 0 && !sn.contains(p)) return false;
        if (sb.add(p)) next.push_back(p);
      }
    if (next.empty()) return true;
    if (next.size() >= cur.size() && step > 0) return false;
    cur = std::move(next);
  }
  return false;
}

std::vector<Vec> candidate_pool(const FiniteAlgebra& a, const Mat& basis, std::mt19937_64& rng) {
  std::vector<Vec> out;
  int k = basis.cols();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      out.push_back(add(basis.col(i), basis.col(j)));
      out.push_back(a.mul(basis.col(i), basis.col(j)));
    }
  std::uniform_int_distribution<int> dist(-3, 3);
  for (int r = 0; r < 40; ++r) {
    Vec v = a.zero();
    for (int j = 0; j < k; ++j) axpy(v, Scalar(dist(rng)), basis.col(j));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::optional<LocalCert> local_certificate(const FiniteAlgebra& a, const Vec& e, std::mt19937_64& rng) {
  LocalCert cert;
  cert.e = e;
  cert.basis = a.corner(e, e);
  std::vector<Vec> rad;
  SpanBuilder sb(a.dim());
  for (int j = 0; j < cert.basis.cols(); ++j) {
    std::optional<Scalar> lam;
    Vec c = cert.basis.col(j);
    if (try_split(a, c, e, rng, &lam)) return std::nullopt;
    if (!lam) return std::nullopt;
    Vec n = sub(c, scale(*lam, e));
    if (sb.add(n)) rad.push_back(std::move(n));
  }
  if (static_cast<int>(rad.size()) != cert.basis.cols() - 1) return std::nullopt;
  cert.rad = Mat::from_cols(rad, a.dim());
  if (!nilpotent_subalgebra(a, cert.rad)) return std::nullopt;
  return cert;
}

namespace {

void split_rec(const FiniteAlgebra& a, const Vec& e, std::mt19937_64& rng, IdempotentSplit& out) {
  Mat basis = a.corner(e, e);
  if (basis.cols() == 0) return;
  // pass 1: basis elements
  bool all_single = true;
  for (int j = 0; j < basis.cols(); ++j) {
    std::optional<Scalar> lam;
    if (auto eps = try_split(a, basis.col(j), e, rng, &lam)) {
      split_rec(a, *eps, rng, out);
      split_rec(a, sub(e, *eps), rng, out);
      return;
    }
    if (!lam) all_single = false;
  }
  if (all_single) {
    if (auto cert = local_certificate(a, e, rng)) {
      out.idempotents.push_back(e);
      out.certs.push_back(std::move(*cert));
      return;
    }
  }
  for (const auto& x : candidate_pool(a, basis, rng)) {
    if (auto eps = try_split(a, x, e, rng, nullptr)) {
      split_rec(a, *eps, rng, out);
      split_rec(a, sub(e, *eps), rng, out);
      return;
    }
  }
  throw NonsplitError("no idempotent splits the corner and locality is not certified (residue ring may be a proper division algebra)");
}

}  // namespace

bool idempotents_isomorphic(const FiniteAlgebra& a, const LocalCert& ce, const Vec& f) {
  Mat x = a.corner(ce.e, f);
  Mat y = a.corner(f, ce.e);
  for (int i = 0; i < x.cols(); ++i)
    for (int j = 0; j < y.cols(); ++j)
      if (!ce.lambda(a.mul(x.col(i), y.col(j))).is_zero()) return true;
  return false;
}

IdempotentSplit primitive_idempotents(const FiniteAlgebra& a, std::mt19937_64& rng) {
  IdempotentSplit out;
  split_rec(a, a.one(), rng, out);
  int n = static_cast<int>(out.idempotents.size());
  out.iso_class.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (out.iso_class[i] >= 0) continue;
    out.iso_class[i] = out.num_classes;
    for (int j = i + 1; j < n; ++j)
      if (out.iso_class[j] < 0 && a.corner(out.idempotents[i], out.idempotents[i]).cols() ==
                                      a.corner(out.idempotents[j], out.idempotents[j]).cols() &&
          idempotents_isomorphic(a, out.certs[i], out.idempotents[j]))
        out.iso_class[j] = out.num_classes;
    ++out.num_classes;
  }
  return out;
}

}  // namespace extdim
