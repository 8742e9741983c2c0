#include "extdim/homological.hpp"

namespace extdim {

namespace {

Mat neg(const Mat& m) { return Scalar(-1) * m; }

}  // namespace

ProjCover projective_cover(const Rep& m) {
  ProjCover pc;
  const AlgebraPtr& a = m.alg;
  auto rad = radical_subspace(m);
  std::vector<Rep> parts;
  std::vector<Morphism> maps;
  for (int i = 0; i < a->num_vertices(); ++i) {
    if (m.dims[i] == 0) continue;
    Mat c = complement(rad[i], m.dims[i]);
    if (c.cols() == 0) continue;
    Rep p = projective(a, i);
    for (int k = 0; k < c.cols(); ++k) {
      maps.push_back(from_projective(p, i, m, c.col(k)));
      pc.gens.push_back(c.col(k));
      parts.push_back(p);
      pc.vertices.push_back(i);
    }
  }
  if (parts.empty()) {
    pc.p = Rep::zero(a);
    pc.map = zero_morphism(pc.p, m);
    return pc;
  }
  pc.p = direct_sum(parts).module;
  pc.map = zero_morphism(pc.p, m);
  for (int j = 0; j < a->num_vertices(); ++j) {
    int off = 0;
    for (size_t k = 0; k < parts.size(); ++k) {
      pc.map[j].set_block(0, off, maps[k][j]);
      off += parts[k].dims[j];
    }
  }
  return pc;
}

Vec generator_in_cover(const ProjCover& c, int k) {
  const Algebra& a = *c.p.alg;
  int v = c.vertices[k];
  int off = 0;
  for (int j = 0; j < k; ++j) off += static_cast<int>(a.paths(c.vertices[j], v).size());
  Vec e(c.p.dims[v]);
  e[off] = a.one_scalar();
  return e;
}

Morphism map_from_cover(const ProjCover& c, const Rep& n, const std::vector<Vec>& images) {
  const Algebra& a = *n.alg;
  int nv = a.num_vertices();
  Morphism f = zero_morphism(c.p, n);
  auto acts = n.all_actions();
  std::vector<int> off(nv, 0);
  for (size_t k = 0; k < c.vertices.size(); ++k) {
    int v = c.vertices[k];
    for (int i = 0; i < nv; ++i) {
      const auto& ps = a.paths(v, i);
      for (size_t t = 0; t < ps.size(); ++t) {
        Vec col = acts[ps[t]] * images[k];
        for (int r = 0; r < n.dims[i]; ++r) f[i](r, off[i] + static_cast<int>(t)) = col[r];
      }
      off[i] += static_cast<int>(ps.size());
    }
  }
  return f;
}

Morphism lift(const ProjCover& c, const Rep& n, const Morphism& p, const Morphism& g) {
  std::vector<Vec> imgs;
  for (size_t k = 0; k < c.vertices.size(); ++k) {
    int v = c.vertices[k];
    Vec y = g[v] * generator_in_cover(c, static_cast<int>(k));
    auto x = solve(p[v], y);
    if (!x) throw std::logic_error("lift: map does not factor through the surjection");
    imgs.push_back(std::move(*x));
  }
  return map_from_cover(c, n, imgs);
}

InjEnvelope injective_envelope(const Rep& m) {
  ProjCover pc = projective_cover(dual(m));
  InjEnvelope ie;
  ie.i = dual(pc.p);
  ie.vertices = pc.vertices;
  ie.map = dual(pc.map);
  return ie;
}

HomSpace hom_space(const Rep& m, const Rep& n) {
  HomSpace hs;
  if (m.is_zero() || n.is_zero()) return hs;
  const Algebra& a = *m.alg;
  int nv = a.num_vertices();
  ProjCover c0 = projective_cover(m);
  hs.gen_vertex = c0.vertices;
  hs.gen_vec = c0.gens;
  int ng = static_cast<int>(c0.vertices.size());
  std::vector<int> xo(ng + 1, 0);
  for (int k = 0; k < ng; ++k) xo[k + 1] = xo[k] + n.dims[c0.vertices[k]];
  if (xo[ng] == 0) return hs;
  auto acts = n.all_actions();
  // offset of summand k inside P0 at vertex w
  std::vector<std::vector<int>> po(ng + 1, std::vector<int>(nv, 0));
  for (int k = 0; k < ng; ++k)
    for (int w = 0; w < nv; ++w)
      po[k + 1][w] = po[k][w] + static_cast<int>(a.paths(c0.vertices[k], w).size());
  SubRep om = kernel(c0.p, m, c0.map);
  Mat sys(0, xo[ng]);
  if (!om.module.is_zero()) {
    ProjCover c1 = projective_cover(om.module);
    int rows = 0;
    for (int w : c1.vertices) rows += n.dims[w];
    sys = Mat(rows, xo[ng]);
    int r0 = 0;
    for (size_t l = 0; l < c1.vertices.size(); ++l) {
      int w = c1.vertices[l];
      Vec rel = om.map[w] * c1.gens[l];  // element of P0 at w
      for (int k = 0; k < ng; ++k) {
        const auto& ps = a.paths(c0.vertices[k], w);
        for (size_t t = 0; t < ps.size(); ++t) {
          const Scalar& c = rel[po[k][w] + t];
          if (c.is_zero()) continue;
          sys.set_block(r0, xo[k], sys.block(r0, xo[k], n.dims[w], n.dims[c0.vertices[k]]) + c * acts[ps[t]]);
        }
      }
      r0 += n.dims[w];
    }
  }
  Nullspace ns = nullspace(sys);
  hs.free = ns.free;
  // sections of the cover, per vertex
  std::vector<Mat> sec(nv);
  for (int i = 0; i < nv; ++i)
    sec[i] = m.dims[i] ? *solve(c0.map[i], Mat::identity(m.dims[i])) : Mat(c0.p.dims[i], 0);
  for (int s = 0; s < ns.basis.cols(); ++s) {
    Vec x = ns.basis.col(s);
    Morphism f;
    for (int i = 0; i < nv; ++i) {
      Mat psi(n.dims[i], c0.p.dims[i]);
      for (int k = 0; k < ng; ++k) {
        const auto& ps = a.paths(c0.vertices[k], i);
        Vec xk(x.begin() + xo[k], x.begin() + xo[k + 1]);
        for (size_t t = 0; t < ps.size(); ++t) {
          Vec col = acts[ps[t]] * xk;
          for (int r = 0; r < n.dims[i]; ++r) psi(r, po[k][i] + static_cast<int>(t)) = col[r];
        }
      }
      Mat fi = psi * sec[i];
      f.push_back(a.field().is_rational() ? fi : fi.in_field(a.field()));
    }
    hs.basis.push_back(std::move(f));
  }
  return hs;
}

Syzygy syzygy(const Rep& m) {
  Syzygy s;
  s.cover = projective_cover(m);
  SubRep k = kernel(s.cover.p, m, s.cover.map);
  s.omega = std::move(k.module);
  s.inc = std::move(k.map);
  return s;
}

Cosyzygy cosyzygy(const Rep& m) {
  Cosyzygy c;
  c.env = injective_envelope(m);
  SubRep q = cokernel(m, c.env.i, c.env.map);
  c.coomega = std::move(q.module);
  c.proj = std::move(q.map);
  return c;
}

Morphism left_mult(const Algebra& a, const Vec& x, int u, int v, const Rep& p_v, const Rep& p_u) {
  const auto& ps = a.paths(u, v);
  Vec c(ps.size());
  for (size_t t = 0; t < ps.size(); ++t) c[t] = x[ps[t]];
  return from_projective(p_v, v, p_u, c);
}

Morphism left_mult(const Algebra& a, int x, const Rep& p_v, const Rep& p_u) {
  const BasisElem& b = a.basis(x);
  return left_mult(a, a.unit(x), b.src, b.tgt, p_v, p_u);
}

Rep hom_into_regular(const Rep& x) {
  const Algebra& a = *x.alg;
  int n = a.num_vertices();
  std::vector<Rep> proj;
  std::vector<HomSpace> hs;
  for (int i = 0; i < n; ++i) {
    proj.push_back(projective(x.alg, i));
    hs.push_back(hom_space(x, proj.back()));
  }
  Rep r;
  r.alg = a.opposite();
  for (int i = 0; i < n; ++i) r.dims.push_back(hs[i].dim());
  for (int g = 0; g < a.num_arrows(); ++g) {
    int i = a.quiver().arrows[g].src, j = a.quiver().arrows[g].tgt;
    Morphism lam = left_mult(a, a.arrow_basis(g), proj[j], proj[i]);
    Mat m(r.dims[i], r.dims[j]);
    for (int k = 0; k < hs[j].dim(); ++k) m.set_col(k, hs[i].coords(compose(lam, hs[j].basis[k])));
    r.arrows.push_back(std::move(m));
  }
  return r;
}

Morphism hom_into_regular(const Rep& x, const Rep& y, const Morphism& f) {
  int n = x.alg->num_vertices();
  Morphism out;
  for (int i = 0; i < n; ++i) {
    Rep p = projective(x.alg, i);
    HomSpace hx = hom_space(x, p), hy = hom_space(y, p);
    Mat m(hx.dim(), hy.dim());
    for (int k = 0; k < hy.dim(); ++k) m.set_col(k, hx.coords(compose(hy.basis[k], f)));
    out.push_back(std::move(m));
  }
  return out;
}

Rep nakayama(const Rep& x) { return dual(hom_into_regular(x)); }

Morphism nakayama(const Rep& x, const Rep& y, const Morphism& f) { return dual(hom_into_regular(x, y, f)); }

bool is_projective(const Rep& m) { return projective_cover(m).p.total_dim() == m.total_dim(); }
bool is_injective(const Rep& m) { return injective_envelope(m).i.total_dim() == m.total_dim(); }

Rep tau(const Rep& m) {
  if (m.is_zero()) return m;
  Syzygy s0 = syzygy(m);
  if (s0.omega.is_zero()) return Rep::zero(m.alg);
  ProjCover c1 = projective_cover(s0.omega);
  Morphism f1 = compose(s0.inc, c1.map);
  Rep n1 = nakayama(c1.p), n0 = nakayama(s0.cover.p);
  Morphism nf = nakayama(c1.p, s0.cover.p, f1);
  return kernel(n1, n0, nf).module;
}

Rep tau_inverse(const Rep& m) { return dual(tau(dual(m))); }

Vec ExtSpace::coords(const Morphism& xi) const { return change * hom_omega.coords(xi); }

ExtSpace ext1(const Rep& m, const Rep& n) {
  ExtSpace e;
  e.m = m;
  e.n = n;
  e.syz = syzygy(m);
  e.hom_omega = hom_space(e.syz.omega, n);
  int h = e.hom_omega.dim();
  e.change = Mat(0, h);
  if (h == 0) return e;
  HomSpace hp = hom_space(e.syz.cover.p, n);
  Mat b(h, hp.dim());
  for (int k = 0; k < hp.dim(); ++k) b.set_col(k, e.hom_omega.coords(compose(hp.basis[k], e.syz.inc)));
  Mat bs = hp.dim() ? column_space(b) : Mat(h, 0);
  Mat c = complement(bs, h);
  if (c.cols() == 0) return e;
  Mat inv = *inverse(Mat::hstack(bs, c));
  e.change = inv.block(bs.cols(), 0, c.cols(), h);
  for (int k = 0; k < c.cols(); ++k) e.classes.push_back(e.hom_omega.combine(c.col(k), e.syz.omega, n));
  return e;
}

int ext1_dim(const Rep& m, const Rep& n) { return ext1(m, n).dim(); }
int hom_dim(const Rep& m, const Rep& n) { return hom_space(m, n).dim(); }

ShortExact extension(const ExtSpace& e, const Morphism& xi) {
  const Rep& n = e.n;
  const Rep& p0 = e.syz.cover.p;
  DirectSum s = direct_sum(std::vector<Rep>{n, p0});
  std::vector<Mat> u;
  for (size_t i = 0; i < xi.size(); ++i) {
    int rows = n.dims[i] + p0.dims[i];
    if (e.syz.omega.dims[i] == 0) u.emplace_back(rows, 0);
    else u.push_back(Mat::vstack(xi[i], neg(e.syz.inc[i])));
  }
  SubRep q = quotient(s.module, u);
  ShortExact ses;
  ses.left = n;
  ses.middle = q.module;
  ses.right = e.m;
  ses.f = compose(q.map, s.inj[0]);
  ses.g = compose(compose(e.syz.cover.map, s.proj[1]), q.section);
  return ses;
}

std::vector<std::vector<int>> radical_layers(const Rep& m) {
  std::vector<std::vector<int>> out;
  Rep cur = m;
  while (!cur.is_zero()) {
    auto r = radical_subspace(cur);
    std::vector<int> layer;
    for (size_t i = 0; i < r.size(); ++i) layer.push_back(cur.dims[i] - r[i].cols());
    out.push_back(layer);
    cur = subrep(cur, r).module;
  }
  return out;
}

int loewy_length(const Rep& m) { return static_cast<int>(radical_layers(m).size()); }

}  // namespace extdim
