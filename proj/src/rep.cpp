#include "extdim/rep.hpp"

#include <numeric>
#include <sstream>

namespace extdim {

namespace {

Mat id_in(const Algebra& a, int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = a.one_scalar();
  return m;
}

}  // namespace

Rep Rep::zero(AlgebraPtr a) {
  Rep r;
  r.dims.assign(a->num_vertices(), 0);
  for (const auto& ar : a->quiver().arrows) {
    (void)ar;
    r.arrows.emplace_back(0, 0);
  }
  r.alg = std::move(a);
  return r;
}

int Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

std::vector<int> Rep::offsets() const {
  std::vector<int> o(dims.size() + 1, 0);
  for (size_t i = 0; i < dims.size(); ++i) o[i + 1] = o[i] + dims[i];
  return o;
}

Mat Rep::action(int b) const {
  const BasisElem& e = alg->basis(b);
  Mat m = id_in(*alg, dims[e.src]);
  for (int a : e.word) m = arrows[a] * m;
  return m;
}

std::vector<Mat> Rep::all_actions() const {
  std::vector<Mat> out;
  out.reserve(alg->dim());
  for (int b = 0; b < alg->dim(); ++b) out.push_back(action(b));
  return out;
}

Mat Rep::action(const Vec& x, int u, int v) const {
  Mat m(dims[v], dims[u]);
  for (int b : alg->paths(u, v))
    if (!x[b].is_zero()) m += x[b] * action(b);
  return m;
}

bool Rep::is_valid(std::string* why) const {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  const Algebra& a = *alg;
  if (static_cast<int>(dims.size()) != a.num_vertices()) return fail("dimension vector has wrong length");
  if (static_cast<int>(arrows.size()) != a.num_arrows()) return fail("wrong number of arrow matrices");
  for (int k = 0; k < a.num_arrows(); ++k) {
    const auto& ar = a.quiver().arrows[k];
    if (arrows[k].rows() != dims[ar.tgt] || arrows[k].cols() != dims[ar.src])
      return fail("matrix of arrow " + ar.label + " has the wrong shape");
  }
  auto acts = all_actions();
  for (int b = 0; b < a.dim(); ++b)
    for (int g = 0; g < a.num_arrows(); ++g) {
      int gb = a.arrow_basis(g);
      if (a.basis(b).tgt != a.basis(gb).src) continue;
      Mat lhs = arrows[g] * acts[b];
      Mat rhs(lhs.rows(), lhs.cols());
      for (const auto& [k, c] : a.mult(b, gb)) rhs += c * acts[k];
      if (lhs != rhs) return fail("relation violated at " + a.basis_string(b) + " then " + a.quiver().arrows[g].label);
    }
  return true;
}

std::string Rep::dim_vector_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ")";
  return os.str();
}

bool operator==(const Rep& a, const Rep& b) {
  return a.alg.get() == b.alg.get() && a.dims == b.dims && a.arrows == b.arrows;
}

Morphism identity_morphism(const Rep& m) {
  Morphism f;
  for (int d : m.dims) f.push_back(id_in(*m.alg, d));
  return f;
}

Morphism zero_morphism(const Rep& m, const Rep& n) {
  Morphism f;
  for (size_t i = 0; i < m.dims.size(); ++i) f.emplace_back(n.dims[i], m.dims[i]);
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (size_t i = 0; i < f.size(); ++i) h.push_back(g[i] * f[i]);
  return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (size_t i = 0; i < f.size(); ++i) h.push_back(f[i] + g[i]);
  return h;
}

Morphism scale(const Scalar& s, const Morphism& f) {
  Morphism h;
  for (const auto& m : f) h.push_back(s * m);
  return h;
}

bool is_zero(const Morphism& f) {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

bool is_morphism(const Rep& m, const Rep& n, const Morphism& f) {
  for (int k = 0; k < m.alg->num_arrows(); ++k) {
    const auto& ar = m.alg->quiver().arrows[k];
    if (n.arrows[k] * f[ar.src] != f[ar.tgt] * m.arrows[k]) return false;
  }
  return true;
}

int rank(const Morphism& f) {
  int r = 0;
  for (const auto& m : f) r += extdim::rank(m);
  return r;
}

bool is_injective(const Rep& m, const Morphism& f) { return rank(f) == m.total_dim(); }
bool is_surjective(const Rep& n, const Morphism& f) { return rank(f) == n.total_dim(); }
bool is_iso(const Rep& m, const Rep& n, const Morphism& f) {
  return m.dims == n.dims && is_injective(m, f);
}

std::optional<Morphism> inverse(const Morphism& f) {
  Morphism g;
  for (const auto& m : f) {
    auto inv = extdim::inverse(m);
    if (!inv) return std::nullopt;
    g.push_back(std::move(*inv));
  }
  return g;
}

Vec flatten(const Morphism& f) {
  Vec v;
  for (const auto& m : f)
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

Morphism unflatten(const Vec& v, const Rep& m, const Rep& n) {
  Morphism f;
  size_t k = 0;
  for (size_t i = 0; i < m.dims.size(); ++i) {
    Mat x(n.dims[i], m.dims[i]);
    for (int r = 0; r < x.rows(); ++r)
      for (int c = 0; c < x.cols(); ++c) x(r, c) = v[k++];
    f.push_back(std::move(x));
  }
  return f;
}

Mat total_matrix(const Rep& m, const Rep& n, const Morphism& f) {
  Mat t(n.total_dim(), m.total_dim());
  auto om = m.offsets(), on = n.offsets();
  for (size_t i = 0; i < f.size(); ++i) t.set_block(on[i], om[i], f[i]);
  return t;
}

Vec HomSpace::coords(const Morphism& f) const {
  Vec v;
  if (gen_vertex.empty()) {
    v = flatten(f);
  } else {
    for (size_t k = 0; k < gen_vertex.size(); ++k) {
      Vec x = f[gen_vertex[k]] * gen_vec[k];
      v.insert(v.end(), x.begin(), x.end());
    }
  }
  Vec c(free.size());
  for (size_t k = 0; k < free.size(); ++k) c[k] = v[free[k]];
  return c;
}

Morphism HomSpace::combine(const Vec& c, const Rep& m, const Rep& n) const {
  Morphism f = zero_morphism(m, n);
  for (size_t k = 0; k < basis.size(); ++k)
    if (!c[k].is_zero()) f = add(f, scale(c[k], basis[k]));
  return f;
}

HomSpace hom_space_direct(const Rep& m, const Rep& n) {
  const Algebra& a = *m.alg;
  int nv = a.num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int i = 0; i < nv; ++i) off[i + 1] = off[i] + n.dims[i] * m.dims[i];
  int unknowns = off[nv];
  HomSpace hs;
  if (unknowns == 0) return hs;
  // rows: for each arrow a: i -> j, entries of N(a) phi_i - phi_j M(a)
  int eqs = 0;
  for (const auto& ar : a.quiver().arrows) eqs += n.dims[ar.tgt] * m.dims[ar.src];
  Mat sys(eqs, unknowns);
  int row = 0;
  for (int k = 0; k < a.num_arrows(); ++k) {
    const auto& ar = a.quiver().arrows[k];
    int i = ar.src, j = ar.tgt;
    const Mat& na = n.arrows[k];
    const Mat& ma = m.arrows[k];
    for (int r = 0; r < n.dims[j]; ++r)
      for (int c = 0; c < m.dims[i]; ++c, ++row) {
        // (N(a) phi_i)(r,c) = sum_s N(a)(r,s) phi_i(s,c)
        for (int s = 0; s < n.dims[i]; ++s)
          if (!na(r, s).is_zero()) sys(row, off[i] + s * m.dims[i] + c) += na(r, s);
        // (phi_j M(a))(r,c) = sum_t phi_j(r,t) M(a)(t,c)
        for (int t = 0; t < m.dims[j]; ++t)
          if (!ma(t, c).is_zero()) sys(row, off[j] + r * m.dims[j] + t) -= ma(t, c);
      }
  }
  Nullspace ns = nullspace(sys);
  hs.free = ns.free;
  for (int k = 0; k < ns.basis.cols(); ++k) {
    Morphism f = unflatten(ns.basis.col(k), m, n);
    if (!a.field().is_rational())
      for (auto& x : f) x = x.in_field(a.field());
    hs.basis.push_back(std::move(f));
  }
  return hs;
}

SubRep subrep(const Rep& m, const std::vector<Mat>& u) {
  SubRep s;
  s.module.alg = m.alg;
  for (const auto& b : u) s.module.dims.push_back(b.cols());
  for (int k = 0; k < m.alg->num_arrows(); ++k) {
    const auto& ar = m.alg->quiver().arrows[k];
    auto x = solve(u[ar.tgt], m.arrows[k] * u[ar.src]);
    if (!x) throw std::logic_error("subspace is not a submodule");
    s.module.arrows.push_back(std::move(*x));
  }
  s.map = u;
  return s;
}

SubRep quotient(const Rep& m, const std::vector<Mat>& u) {
  SubRep q;
  q.module.alg = m.alg;
  std::vector<Mat> comp, projm;
  for (size_t i = 0; i < m.dims.size(); ++i) {
    Mat sub = column_space(u[i]);
    Mat c = complement(sub, m.dims[i]);
    // coordinates w.r.t. [sub | c]; projection keeps the c-part
    Mat full = Mat::hstack(sub, c);
    if (full.cols() == 0) full = Mat(m.dims[i], 0);
    auto inv = extdim::inverse(full);
    Mat p(c.cols(), m.dims[i]);
    if (m.dims[i] > 0) p = inv->block(sub.cols(), 0, c.cols(), m.dims[i]);
    q.module.dims.push_back(c.cols());
    comp.push_back(c);
    projm.push_back(p);
  }
  for (int k = 0; k < m.alg->num_arrows(); ++k) {
    const auto& ar = m.alg->quiver().arrows[k];
    q.module.arrows.push_back(projm[ar.tgt] * m.arrows[k] * comp[ar.src]);
  }
  q.map = projm;
  q.section = comp;
  return q;
}

SubRep kernel(const Rep& m, const Rep& /*n*/, const Morphism& f) {
  std::vector<Mat> u;
  for (size_t i = 0; i < f.size(); ++i) {
    if (m.dims[i] == 0) {
      u.emplace_back(0, 0);
      continue;
    }
    u.push_back(nullspace(f[i]).basis);
  }
  return subrep(m, u);
}

SubRep image(const Rep& /*m*/, const Rep& n, const Morphism& f) {
  std::vector<Mat> u;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].cols() == 0) u.emplace_back(n.dims[i], 0);
    else u.push_back(column_space(f[i]));
  }
  return subrep(n, u);
}

SubRep cokernel(const Rep& /*m*/, const Rep& n, const Morphism& f) {
  std::vector<Mat> u;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].cols() == 0) u.emplace_back(n.dims[i], 0);
    else u.push_back(column_space(f[i]));
  }
  return quotient(n, u);
}

DirectSum direct_sum(const std::vector<Rep>& parts) {
  DirectSum ds;
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  AlgebraPtr a = parts[0].alg;
  int nv = a->num_vertices();
  ds.module.alg = a;
  ds.module.dims.assign(nv, 0);
  for (const auto& p : parts)
    for (int i = 0; i < nv; ++i) ds.module.dims[i] += p.dims[i];
  for (int k = 0; k < a->num_arrows(); ++k) {
    const auto& ar = a->quiver().arrows[k];
    Mat m(ds.module.dims[ar.tgt], ds.module.dims[ar.src]);
    int r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.arrows[k]);
      r += p.dims[ar.tgt];
      c += p.dims[ar.src];
    }
    ds.module.arrows.push_back(std::move(m));
  }
  std::vector<int> acc(nv, 0);
  for (const auto& p : parts) {
    Morphism inj, pr;
    for (int i = 0; i < nv; ++i) {
      Mat e(ds.module.dims[i], p.dims[i]);
      for (int t = 0; t < p.dims[i]; ++t) e(acc[i] + t, t) = a->one_scalar();
      pr.push_back(e.transpose());
      inj.push_back(std::move(e));
      acc[i] += p.dims[i];
    }
    ds.inj.push_back(std::move(inj));
    ds.proj.push_back(std::move(pr));
  }
  return ds;
}

Rep direct_sum(const Rep& a, const Rep& b) { return direct_sum(std::vector<Rep>{a, b}).module; }

Rep power(const Rep& a, int k) {
  if (k <= 0) return Rep::zero(a.alg);
  return direct_sum(std::vector<Rep>(k, a)).module;
}

Rep simple(AlgebraPtr a, int i) {
  if (i < 0 || i >= a->num_vertices()) throw std::out_of_range("unknown vertex");
  Rep r = Rep::zero(a);
  r.dims[i] = 1;
  for (int k = 0; k < a->num_arrows(); ++k) {
    const auto& ar = a->quiver().arrows[k];
    r.arrows[k] = Mat(r.dims[ar.tgt], r.dims[ar.src]);
  }
  return r;
}

Rep projective(AlgebraPtr a, int i) {
  if (i < 0 || i >= a->num_vertices()) throw std::out_of_range("unknown vertex");
  int nv = a->num_vertices();
  Rep r;
  r.alg = a;
  std::vector<int> pos(a->dim(), -1);
  for (int j = 0; j < nv; ++j) {
    const auto& ps = a->paths(i, j);
    r.dims.push_back(static_cast<int>(ps.size()));
    for (size_t t = 0; t < ps.size(); ++t) pos[ps[t]] = static_cast<int>(t);
  }
  for (int k = 0; k < a->num_arrows(); ++k) {
    const auto& ar = a->quiver().arrows[k];
    Mat m(r.dims[ar.tgt], r.dims[ar.src]);
    const auto& ps = a->paths(i, ar.src);
    for (size_t t = 0; t < ps.size(); ++t)
      for (const auto& [b, c] : a->mult(ps[t], a->arrow_basis(k))) m(pos[b], static_cast<int>(t)) += c;
    r.arrows.push_back(std::move(m));
  }
  return r;
}

Rep dual(const Rep& m) {
  Rep d;
  d.alg = m.alg->opposite();
  d.dims = m.dims;
  for (const auto& x : m.arrows) d.arrows.push_back(x.transpose());
  return d;
}

Morphism dual(const Morphism& f) {
  Morphism g;
  for (const auto& x : f) g.push_back(x.transpose());
  return g;
}

Rep injective(AlgebraPtr a, int i) { return dual(projective(a->opposite(), i)); }

Rep regular(AlgebraPtr a) {
  std::vector<Rep> ps;
  for (int i = 0; i < a->num_vertices(); ++i) ps.push_back(projective(a, i));
  return direct_sum(ps).module;
}

Morphism from_projective(const Rep& p_i, int i, const Rep& m, const Vec& v) {
  const Algebra& a = *m.alg;
  Morphism f = zero_morphism(p_i, m);
  for (int j = 0; j < a.num_vertices(); ++j) {
    const auto& ps = a.paths(i, j);
    for (size_t t = 0; t < ps.size(); ++t) {
      Vec col = m.action(ps[t]) * v;
      for (int r = 0; r < m.dims[j]; ++r) f[j](r, static_cast<int>(t)) = col[r];
    }
  }
  return f;
}

std::vector<Mat> radical_subspace(const Rep& m) {
  int nv = m.alg->num_vertices();
  std::vector<Mat> gens(nv);
  for (int i = 0; i < nv; ++i) gens[i] = Mat(m.dims[i], 0);
  for (int k = 0; k < m.alg->num_arrows(); ++k) {
    int j = m.alg->quiver().arrows[k].tgt;
    gens[j] = Mat::hstack(gens[j], m.arrows[k]);
  }
  for (int i = 0; i < nv; ++i) gens[i] = gens[i].cols() ? column_space(gens[i]) : Mat(m.dims[i], 0);
  return gens;
}

std::vector<Mat> socle_subspace(const Rep& m) {
  int nv = m.alg->num_vertices();
  std::vector<Mat> stack(nv);
  for (int i = 0; i < nv; ++i) stack[i] = Mat(0, m.dims[i]);
  for (int k = 0; k < m.alg->num_arrows(); ++k) {
    int i = m.alg->quiver().arrows[k].src;
    stack[i] = Mat::vstack(stack[i], m.arrows[k]);
  }
  std::vector<Mat> out;
  for (int i = 0; i < nv; ++i) {
    if (stack[i].rows() == 0) {
      Mat id(m.dims[i], m.dims[i]);
      for (int t = 0; t < m.dims[i]; ++t) id(t, t) = m.alg->one_scalar();
      out.push_back(id);
    } else {
      out.push_back(nullspace(stack[i]).basis);
    }
  }
  return out;
}

std::vector<int> top_dims(const Rep& m) {
  auto r = radical_subspace(m);
  std::vector<int> t;
  for (size_t i = 0; i < r.size(); ++i) t.push_back(m.dims[i] - r[i].cols());
  return t;
}

std::vector<int> socle_dims(const Rep& m) {
  auto s = socle_subspace(m);
  std::vector<int> t;
  for (auto& x : s) t.push_back(x.cols());
  return t;
}

}  // namespace extdim
