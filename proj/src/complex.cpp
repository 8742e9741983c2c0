#include "extdim/complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace extdim {

ProjMatrix ProjMatrix::zero(const Algebra& a, std::vector<int> tgt, std::vector<int> src) {
  ProjMatrix m;
  m.tgt = std::move(tgt);
  m.src = std::move(src);
  m.entries.assign(m.tgt.size() * m.src.size(), a.zero());
  return m;
}

bool ProjMatrix::is_zero() const {
  for (const auto& e : entries)
    if (!extdim::is_zero(e)) return false;
  return true;
}

ProjMatrix compose(const Algebra& a, const ProjMatrix& g, const ProjMatrix& f) {
  if (g.src != f.tgt) throw std::invalid_argument("compose: shapes do not match");
  ProjMatrix h = ProjMatrix::zero(a, g.tgt, f.src);
  for (int s = 0; s < g.rows(); ++s)
    for (int r = 0; r < g.cols(); ++r) {
      const Vec& x = g.at(s, r);
      if (is_zero(x)) continue;
      for (int c = 0; c < f.cols(); ++c) {
        const Vec& y = f.at(r, c);
        if (is_zero(y)) continue;
        Vec& out = h.at(s, c);
        out = extdim::add(out, a.mul(x, y));
      }
    }
  return h;
}

ProjMatrix add(const ProjMatrix& f, const ProjMatrix& g) {
  ProjMatrix h = f;
  for (size_t i = 0; i < h.entries.size(); ++i) h.entries[i] = extdim::add(f.entries[i], g.entries[i]);
  return h;
}

ProjMatrix scale(const Scalar& s, const ProjMatrix& f) {
  ProjMatrix h = f;
  for (auto& e : h.entries) e = extdim::scale(s, e);
  return h;
}

bool entry_invertible(const Algebra& /*a*/, const Vec& x, int u, int v) { return u == v && !x[u].is_zero(); }

bool is_radical(const Algebra& a, const ProjMatrix& f) {
  for (int r = 0; r < f.rows(); ++r)
    for (int c = 0; c < f.cols(); ++c)
      if (entry_invertible(a, f.at(r, c), f.src[c], f.tgt[r])) return false;
  return true;
}

ProjMatrix submatrix(const ProjMatrix& f, const std::vector<int>& rows, const std::vector<int>& cols) {
  ProjMatrix h;
  for (int r : rows) h.tgt.push_back(f.tgt[r]);
  for (int c : cols) h.src.push_back(f.src[c]);
  for (int r : rows)
    for (int c : cols) h.entries.push_back(f.at(r, c));
  return h;
}

ProjMatrix block2(const ProjMatrix& a, const ProjMatrix& b, const ProjMatrix& c, const ProjMatrix& d) {
  ProjMatrix h;
  h.tgt = a.tgt;
  h.tgt.insert(h.tgt.end(), c.tgt.begin(), c.tgt.end());
  h.src = a.src;
  h.src.insert(h.src.end(), b.src.begin(), b.src.end());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) h.entries.push_back(a.at(r, k));
    for (int k = 0; k < b.cols(); ++k) h.entries.push_back(b.at(r, k));
  }
  for (int r = 0; r < c.rows(); ++r) {
    for (int k = 0; k < c.cols(); ++k) h.entries.push_back(c.at(r, k));
    for (int k = 0; k < d.cols(); ++k) h.entries.push_back(d.at(r, k));
  }
  return h;
}

ProjMatrix diag(const Algebra& alg, const ProjMatrix& a, const ProjMatrix& b) {
  return block2(a, ProjMatrix::zero(alg, a.tgt, b.src), ProjMatrix::zero(alg, b.tgt, a.src), b);
}

ProjMatrix identity_pm(const Algebra& a, const std::vector<int>& v) {
  ProjMatrix m = ProjMatrix::zero(a, v, v);
  for (size_t r = 0; r < v.size(); ++r) m.at(static_cast<int>(r), static_cast<int>(r)) = a.unit(v[r]);
  return m;
}

Rep term_module(AlgebraPtr a, const std::vector<int>& v) {
  if (v.empty()) return Rep::zero(a);
  std::vector<Rep> parts;
  for (int i : v) parts.push_back(projective(a, i));
  return direct_sum(parts).module;
}

namespace {

ProjCover cover_of_term(AlgebraPtr a, const std::vector<int>& v) {
  ProjCover c;
  c.p = term_module(a, v);
  c.vertices = v;
  return c;
}

}  // namespace

Morphism to_morphism(AlgebraPtr a, const ProjMatrix& f) {
  ProjCover c = cover_of_term(a, f.src);
  Rep n = term_module(a, f.tgt);
  std::vector<Vec> imgs;
  for (int col = 0; col < f.cols(); ++col) {
    int u = f.src[col];
    Vec img;
    for (int r = 0; r < f.rows(); ++r)
      for (int b : a->paths(f.tgt[r], u)) img.push_back(f.at(r, col)[b]);
    imgs.push_back(std::move(img));
  }
  return map_from_cover(c, n, imgs);
}

ProjMatrix from_morphism(AlgebraPtr a, const std::vector<int>& tgt, const std::vector<int>& src, const Morphism& f) {
  ProjCover c = cover_of_term(a, src);
  ProjMatrix m = ProjMatrix::zero(*a, tgt, src);
  for (int col = 0; col < m.cols(); ++col) {
    int u = src[col];
    Vec img = f[u] * generator_in_cover(c, col);
    int off = 0;
    for (int r = 0; r < m.rows(); ++r)
      for (int b : a->paths(tgt[r], u)) m.at(r, col)[b] = img[off++];
  }
  return m;
}

ProjComplex ProjComplex::stalk(AlgebraPtr a, std::vector<int> v, int degree) {
  ProjComplex x;
  x.alg = std::move(a);
  x.lo = degree;
  x.terms.push_back(std::move(v));
  return x;
}

std::vector<int> ProjComplex::term(int deg) const {
  if (deg < lo || deg > hi()) return {};
  return terms[deg - lo];
}

ProjMatrix ProjComplex::diff(int deg) const {
  if (deg >= lo && deg < hi()) return d[deg - lo];
  return ProjMatrix::zero(*alg, term(deg + 1), term(deg));
}

bool ProjComplex::is_zero() const {
  for (const auto& t : terms)
    if (!t.empty()) return false;
  return true;
}

bool ProjComplex::is_complex() const {
  for (int k = lo; k + 1 < hi(); ++k)
    if (!compose(*alg, diff(k + 1), diff(k)).is_zero()) return false;
  return true;
}

bool ProjComplex::is_radical() const {
  for (const auto& m : d)
    if (!extdim::is_radical(*alg, m)) return false;
  return true;
}

int ProjComplex::total_rank() const {
  int t = 0;
  for (const auto& v : terms) t += static_cast<int>(v.size());
  return t;
}

void ProjComplex::trim() {
  while (terms.size() > 1 && terms.back().empty()) {
    terms.pop_back();
    d.pop_back();
  }
  while (terms.size() > 1 && terms.front().empty()) {
    terms.erase(terms.begin());
    d.erase(d.begin());
    ++lo;
  }
  if (terms.size() == 1 && terms[0].empty()) lo = 0;
}

ProjComplex shift(const ProjComplex& x, int k) {
  ProjComplex y = x;
  y.lo = x.lo - k;
  if (k % 2 != 0)
    for (auto& m : y.d) m = scale(Scalar(-1), m);
  return y;
}

ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y) {
  ProjComplex s;
  s.alg = x.alg;
  s.lo = std::min(x.lo, y.lo);
  int hi = std::max(x.hi(), y.hi());
  for (int k = s.lo; k <= hi; ++k) {
    auto t = x.term(k);
    auto u = y.term(k);
    t.insert(t.end(), u.begin(), u.end());
    s.terms.push_back(std::move(t));
  }
  for (int k = s.lo; k < hi; ++k) s.d.push_back(diag(*x.alg, x.diff(k), y.diff(k)));
  return s;
}

ChainMap compose(const ProjComplex& x, const ProjComplex& y, const ProjComplex& z, const ChainMap& g,
                 const ChainMap& f) {
  ChainMap h;
  h.n = f.n + g.n;
  if (f.n != 0 || g.n != 0) throw std::invalid_argument("compose: only degree-0 chain maps");
  for (int k = x.lo; k <= x.hi(); ++k) {
    if (k < y.lo || k > y.hi()) h.comp.push_back(ProjMatrix::zero(*x.alg, z.term(k), x.term(k)));
    else h.comp.push_back(compose(*x.alg, g.comp[k - y.lo], f.comp[k - x.lo]));
  }
  return h;
}

ChainMap identity_chain(const ProjComplex& x) {
  ChainMap f;
  for (const auto& t : x.terms) f.comp.push_back(identity_pm(*x.alg, t));
  return f;
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  ChainMap h = f;
  for (size_t k = 0; k < h.comp.size(); ++k) h.comp[k] = add(f.comp[k], g.comp[k]);
  return h;
}

ChainMap scale(const Scalar& s, const ChainMap& f) {
  ChainMap h = f;
  for (auto& m : h.comp) m = scale(s, m);
  return h;
}

namespace {

// component of f at degree k of X (zero if outside)
ProjMatrix comp_at(const ProjComplex& x, const ProjComplex& y, const ChainMap& f, int k) {
  if (k >= x.lo && k <= x.hi()) return f.comp[k - x.lo];
  return ProjMatrix::zero(*x.alg, y.term(k + f.n), x.term(k));
}

// D(f) = d_Y f - (-1)^n f d_X, a degree n+1 family
ChainMap hom_differential(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
  const Algebra& a = *x.alg;
  ChainMap g;
  g.n = f.n + 1;
  Scalar sign = (f.n % 2 == 0) ? Scalar(-1) : Scalar(1);
  for (int k = x.lo; k <= x.hi(); ++k) {
    ProjMatrix t = compose(a, y.diff(k + f.n), comp_at(x, y, f, k));
    ProjMatrix u = compose(a, comp_at(x, y, f, k + 1), x.diff(k));
    g.comp.push_back(add(t, scale(sign, u)));
  }
  return g;
}

int hom_degree_dim(const ProjComplex& x, const ProjComplex& y, int n) {
  const Algebra& a = *x.alg;
  int d = 0;
  for (int k = x.lo; k <= x.hi(); ++k)
    for (int v : y.term(k + n))
      for (int u : x.term(k)) d += static_cast<int>(a.paths(v, u).size());
  return d;
}

Mat hom_differential_matrix(const ProjComplex& x, const ProjComplex& y, int n) {
  int src = hom_degree_dim(x, y, n), tgt = hom_degree_dim(x, y, n + 1);
  Mat m(tgt, src);
  for (int i = 0; i < src; ++i) {
    Vec e(src);
    e[i] = x.alg->one_scalar();
    m.set_col(i, flatten(x, y, hom_differential(x, y, unflatten(x, y, n, e))));
  }
  return m;
}

}  // namespace

Vec flatten(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
  const Algebra& a = *x.alg;
  Vec v;
  for (int k = x.lo; k <= x.hi(); ++k) {
    const ProjMatrix& m = f.comp[k - x.lo];
    (void)y;
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        for (int b : a.paths(m.tgt[r], m.src[c])) v.push_back(m.at(r, c)[b]);
  }
  return v;
}

ChainMap unflatten(const ProjComplex& x, const ProjComplex& y, int n, const Vec& v) {
  const Algebra& a = *x.alg;
  ChainMap f;
  f.n = n;
  size_t i = 0;
  for (int k = x.lo; k <= x.hi(); ++k) {
    ProjMatrix m = ProjMatrix::zero(a, y.term(k + n), x.term(k));
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        for (int b : a.paths(m.tgt[r], m.src[c])) m.at(r, c)[b] = v[i++];
    f.comp.push_back(std::move(m));
  }
  return f;
}

bool is_chain_map(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
  for (const auto& m : hom_differential(x, y, f).comp)
    if (!m.is_zero()) return false;
  return true;
}

bool is_isomorphism(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
  const Algebra& a = *x.alg;
  if (f.n != 0) return false;
  for (int k = std::min(x.lo, y.lo); k <= std::max(x.hi(), y.hi()); ++k) {
    auto s = x.term(k), t = y.term(k);
    auto ss = s, tt = t;
    std::sort(ss.begin(), ss.end());
    std::sort(tt.begin(), tt.end());
    if (ss != tt) return false;
    if (s.empty()) continue;
    const ProjMatrix& m = f.comp[k - x.lo];
    for (int v = 0; v < a.num_vertices(); ++v) {
      std::vector<int> rows, cols;
      for (int r = 0; r < m.rows(); ++r)
        if (m.tgt[r] == v) rows.push_back(r);
      for (int c = 0; c < m.cols(); ++c)
        if (m.src[c] == v) cols.push_back(c);
      if (rows.empty()) continue;
      Mat top(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) top(static_cast<int>(i), static_cast<int>(j)) = m.at(rows[i], cols[j])[v];
      if (rank(top) != top.rows()) return false;
    }
  }
  return true;
}

Vec HomK::coords(const ChainMap& f) const {
  if (basis.empty()) return {};
  Vec v = flatten(x, y, f);
  Vec w;
  for (int r : pivot_rows) w.push_back(v[r]);
  return coord_map * w;
}

HomK hom_homotopy(const ProjComplex& x, const ProjComplex& y, int n) {
  HomK h;
  h.n = n;
  h.x = x;
  h.y = y;
  int dn = hom_degree_dim(x, y, n);
  if (dn == 0) return h;
  Mat dz = hom_differential_matrix(x, y, n);
  Mat z = dz.rows() ? nullspace(dz).basis : Mat::identity(dn);
  h.cycles_dim = z.cols();
  for (int k = 0; k < z.cols(); ++k) h.cycles.push_back(unflatten(x, y, n, z.col(k)));
  int dprev = hom_degree_dim(x, y, n - 1);
  Mat b(dn, 0);
  if (dprev > 0) {
    Mat db = hom_differential_matrix(x, y, n - 1);
    b = column_space(db);
    if (b.cols() == 0) b = Mat(dn, 0);
  }
  h.nb = b.cols();
  Mat all = Mat::hstack(b, z);
  std::vector<int> reps;
  for (int c : independent_columns(all))
    if (c >= h.nb) reps.push_back(c);
  Mat r = all.cols_subset(reps);
  h.br = Mat::hstack(b, r);
  if (h.br.cols() == 0) h.br = Mat(dn, 0);
  for (int k = 0; k < r.cols(); ++k) h.basis.push_back(unflatten(x, y, n, r.col(k)));
  if (!h.basis.empty()) {
    h.pivot_rows = independent_columns(h.br.transpose());
    Mat sq(h.br.cols(), h.br.cols());
    for (int i = 0; i < sq.rows(); ++i)
      for (int j = 0; j < sq.cols(); ++j) sq(i, j) = h.br(h.pivot_rows[i], j);
    auto inv = inverse(sq);
    if (!inv) throw std::logic_error("hom_homotopy: singular pivot block");
    h.coord_map = inv->block(h.nb, 0, h.dim(), inv->cols());
  }
  return h;
}

int hom_to_module_dim(const ProjComplex& x, const Rep& m, int j) {
  // Hom(X^a, M) as the sum of M_u over the summands P(u)
  auto space = [&](int deg) {
    int d = 0;
    for (int u : x.term(deg)) d += m.dims[u];
    return d;
  };
  // precomposition with d^a: Hom(X^{a+1}, M) -> Hom(X^a, M)
  auto pre = [&](int a) {
    ProjMatrix d = x.diff(a);
    Mat p(space(a), space(a + 1));
    int ro = 0;
    for (int c = 0; c < d.cols(); ++c) {
      int co = 0;
      for (int r = 0; r < d.rows(); ++r) {
        Mat blk = m.action(d.at(r, c), d.tgt[r], d.src[c]);
        p.set_block(ro, co, blk);
        co += m.dims[d.tgt[r]];
      }
      ro += m.dims[d.src[c]];
    }
    return p;
  };
  int deg = -j;
  int v = space(deg);
  if (v == 0) return 0;
  Mat cyc = pre(deg - 1);
  int kernel = v - (cyc.rows() ? rank(cyc) : 0);
  Mat bnd = pre(deg);
  int image = bnd.cols() ? rank(bnd) : 0;
  return kernel - image;
}

namespace {

Vec local_inverse(const Algebra& a, const Vec& phi, int v) {
  Scalar lam = phi[v];
  Scalar li = lam.inverse();
  Vec n = phi;
  n[v] = n[v] - lam;
  Vec step = extdim::scale(-li, n);
  Vec pow = a.unit(v);
  Vec sum = a.unit(v);
  for (int k = 1; k <= a.loewy_length(); ++k) {
    pow = a.mul(pow, step);
    if (is_zero(pow)) break;
    sum = extdim::add(sum, pow);
  }
  return extdim::scale(li, sum);
}

bool eliminate_once(ProjComplex& x) {
  const Algebra& a = *x.alg;
  for (int k = 0; k + 1 < static_cast<int>(x.terms.size()); ++k) {
    ProjMatrix& d = x.d[k];
    for (int r = 0; r < d.rows(); ++r)
      for (int c = 0; c < d.cols(); ++c) {
        if (!entry_invertible(a, d.at(r, c), d.src[c], d.tgt[r])) continue;
        Vec inv = local_inverse(a, d.at(r, c), d.src[c]);
        std::vector<int> rows, cols;
        for (int i = 0; i < d.rows(); ++i)
          if (i != r) rows.push_back(i);
        for (int i = 0; i < d.cols(); ++i)
          if (i != c) cols.push_back(i);
        ProjMatrix nd = submatrix(d, rows, cols);
        for (size_t si = 0; si < rows.size(); ++si) {
          const Vec& gamma = d.at(rows[si], c);
          if (is_zero(gamma)) continue;
          Vec gi = a.mul(gamma, inv);
          for (size_t ci = 0; ci < cols.size(); ++ci) {
            const Vec& delta = d.at(r, cols[ci]);
            if (is_zero(delta)) continue;
            Vec& e = nd.at(static_cast<int>(si), static_cast<int>(ci));
            e = sub(e, a.mul(gi, delta));
          }
        }
        // previous differential loses row c, next loses column r
        if (k > 0) {
          ProjMatrix& p = x.d[k - 1];
          std::vector<int> pr, pc;
          for (int i = 0; i < p.rows(); ++i)
            if (i != c) pr.push_back(i);
          for (int i = 0; i < p.cols(); ++i) pc.push_back(i);
          p = submatrix(p, pr, pc);
        }
        if (k + 1 < static_cast<int>(x.d.size())) {
          ProjMatrix& q = x.d[k + 1];
          std::vector<int> qr, qc;
          for (int i = 0; i < q.rows(); ++i) qr.push_back(i);
          for (int i = 0; i < q.cols(); ++i)
            if (i != r) qc.push_back(i);
          q = submatrix(q, qr, qc);
        }
        x.terms[k].erase(x.terms[k].begin() + c);
        x.terms[k + 1].erase(x.terms[k + 1].begin() + r);
        d = std::move(nd);
        return true;
      }
  }
  return false;
}

}  // namespace

ProjComplex radical_normal_form(const ProjComplex& x) {
  ProjComplex y = x;
  while (eliminate_once(y)) {
  }
  y.trim();
  return y;
}

int complex_length(const ProjComplex& x) {
  ProjComplex y = radical_normal_form(x);
  if (y.is_zero()) return 0;
  return static_cast<int>(y.terms.size());
}

Cone cone(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
  const Algebra& a = *x.alg;
  Cone out;
  ProjComplex& c = out.c;
  c.alg = x.alg;
  c.lo = std::min(x.lo - 1, y.lo);
  int hi = std::max(x.hi() - 1, y.hi());
  for (int k = c.lo; k <= hi; ++k) {
    auto t = x.term(k + 1);
    auto u = y.term(k);
    t.insert(t.end(), u.begin(), u.end());
    c.terms.push_back(std::move(t));
  }
  for (int k = c.lo; k < hi; ++k) {
    ProjMatrix dx = scale(Scalar(-1), x.diff(k + 1));
    ProjMatrix fk = comp_at(x, y, f, k + 1);
    ProjMatrix z = ProjMatrix::zero(a, x.term(k + 2), y.term(k));
    c.d.push_back(block2(dx, z, fk, y.diff(k)));
  }
  for (int k = y.lo; k <= y.hi(); ++k) {
    ProjMatrix top = ProjMatrix::zero(a, x.term(k + 1), y.term(k));
    ProjMatrix id = identity_pm(a, y.term(k));
    ProjMatrix m;
    m.tgt = top.tgt;
    m.tgt.insert(m.tgt.end(), id.tgt.begin(), id.tgt.end());
    m.src = y.term(k);
    m.entries = top.entries;
    m.entries.insert(m.entries.end(), id.entries.begin(), id.entries.end());
    out.from_y.comp.push_back(std::move(m));
  }
  return out;
}

}  // namespace extdim
