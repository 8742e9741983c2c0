#include "extdim/silting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace extdim {

namespace {

ChainMap zero_chain(const ProjComplex& x, const ProjComplex& y, int n) {
  ChainMap f;
  f.n = n;
  for (int k = x.lo; k <= x.hi(); ++k) f.comp.push_back(ProjMatrix::zero(*x.alg, y.term(k + n), x.term(k)));
  return f;
}

FiniteAlgebra end_constants(const HomK& h) {
  const int m = h.dim();
  std::vector<Sparse> table(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Vec c = h.coords(compose(h.x, h.x, h.x, h.basis[i], h.basis[j]));
      Sparse s;
      for (int k = 0; k < m; ++k)
        if (!c[k].is_zero()) s.emplace_back(k, c[k]);
      table[static_cast<size_t>(i) * m + j] = std::move(s);
    }
  return FiniteAlgebra(h.x.alg->field(), m, std::move(table), h.coords(identity_chain(h.x)));
}

// Column in `u` coordinates of the class with Hom_K coordinates c.
Vec in_basis(const Mat& u, const Vec& c) {
  if (u.cols() == 0) return {};
  auto s = solve(u, c);
  if (!s) throw std::logic_error("element left its vertex component");
  return *s;
}

ProjMatrix vstack(const std::vector<ProjMatrix>& parts, const std::vector<int>& src) {
  ProjMatrix out;
  out.src = src;
  for (const auto& p : parts) {
    out.tgt.insert(out.tgt.end(), p.tgt.begin(), p.tgt.end());
    out.entries.insert(out.entries.end(), p.entries.begin(), p.entries.end());
  }
  return out;
}

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.is_rational()) return Scalar(static_cast<int>(rng() % 7) - 3);
  return Scalar::residue(static_cast<long long>(rng() % f.p), f.p);
}

bool nu_set_stable(AlgebraPtr a, const std::set<int>& s, std::mt19937_64& rng) {
  std::vector<Rep> proj;
  for (int w = 0; w < a->num_vertices(); ++w) proj.push_back(projective(a, w));
  for (int v : s) {
    Rep i = injective(a, v);
    int hit = -1;
    for (int w = 0; w < a->num_vertices() && hit < 0; ++w)
      if (proj[w].dims == i.dims && isomorphic(i, proj[w], rng)) hit = w;
    if (hit < 0 || !s.count(hit)) return false;
  }
  return true;
}

}  // namespace

ChainMap combine(const HomK& h, const Vec& c) {
  ChainMap f = zero_chain(h.x, h.y, h.n);
  for (int k = 0; k < h.dim(); ++k)
    if (!c[k].is_zero()) f = add(f, scale(c[k], h.basis[k]));
  return f;
}

ChainMap EndK::element(const Vec& c) const {
  Vec x(static_cast<size_t>(hom.dim()));
  for (size_t i = 0; i < c.size(); ++i) x[i] = c[i];
  return combine(hom, x);
}

SiltingReport silting_report(const ProjComplex& p0, std::mt19937_64& rng) {
  SiltingReport r;
  ProjComplex p = radical_normal_form(p0);
  r.vertices = p.alg->num_vertices();
  if (p.is_zero()) return r;
  r.two_term = p.lo >= -1 && p.hi() <= 0;
  int len = p.hi() - p.lo;
  bool pre = true;
  for (int n = 1; n <= std::max(len, 1); ++n) {
    int d = hom_homotopy(p, p, n).dim();
    if (n == 1) r.hom_shift_plus = d;
    if (d) pre = false;
  }
  r.presilting = pre;
  HomK e = hom_homotopy(p, p, 0);
  IdempotentSplit split = primitive_idempotents(end_constants(e), rng);
  r.summand_classes = split.num_classes;
  if (!r.two_term) r.criterion = "summand count certifies 2-term complexes only";
  r.silting = r.presilting && r.two_term && r.summand_classes == r.vertices;
  bool neg = true;
  for (int n = 1; n <= std::max(len, 1); ++n) {
    int d = hom_homotopy(p, p, -n).dim();
    if (n == 1) r.hom_shift_minus = d;
    if (d) neg = false;
  }
  r.tilting = r.silting && neg;
  return r;
}

EndK end_algebra(const ProjComplex& p0, std::mt19937_64& rng) {
  EndK e;
  e.p = radical_normal_form(p0);
  e.hom = hom_homotopy(e.p, e.p, 0);
  if (e.hom.dim() == 0) throw std::invalid_argument("end_algebra: complex is homotopic to zero");
  e.alg = end_constants(e.hom);
  e.split = primitive_idempotents(e.alg, rng);
  if (e.split.num_classes != static_cast<int>(e.split.idempotents.size()))
    throw std::invalid_argument("end_algebra: complex is not basic (repeated indecomposable summand)");
  std::vector<std::string> labels;
  for (size_t i = 0; i < e.split.idempotents.size(); ++i) labels.push_back(std::to_string(i + 1));
  e.pres = present(e.alg, e.split, labels, "x");
  return e;
}

HomRep hom_from_generator(const EndK& e, const ProjComplex& y) {
  HomRep r;
  r.hom = hom_homotopy(e.p, y, 0);
  AlgebraPtr b = e.b();
  const int m = r.hom.dim();
  const int nv = b->num_vertices();
  r.module.alg = b;
  for (int j = 0; j < nv; ++j) {
    ChainMap eps = e.element(e.pres.images[j]);
    Mat u(m, m);
    for (int k = 0; k < m; ++k) u.set_col(k, r.hom.coords(compose(e.p, e.p, y, r.hom.basis[k], eps)));
    Mat cs = m ? column_space(u) : Mat(0, 0);
    if (cs.cols() == 0) cs = Mat(m, 0);
    r.basis.push_back(cs);
    r.module.dims.push_back(cs.cols());
  }
  for (int t = 0; t < b->num_arrows(); ++t) {
    const auto& ar = b->quiver().arrows[t];
    ChainMap alpha = e.element(e.pres.images[b->arrow_basis(t)]);
    const Mat& ui = r.basis[ar.src];
    const Mat& uj = r.basis[ar.tgt];
    Mat act(uj.cols(), ui.cols());
    for (int c = 0; c < ui.cols(); ++c) {
      ChainMap h = combine(r.hom, ui.col(c));
      act.set_col(c, in_basis(uj, r.hom.coords(compose(e.p, e.p, y, h, alpha))));
    }
    r.module.arrows.push_back(std::move(act));
  }
  return r;
}

Morphism hom_from_generator(const EndK& e, const HomRep& y1, const HomRep& y2, const ChainMap& f) {
  Morphism out;
  for (size_t j = 0; j < y1.basis.size(); ++j) {
    const Mat& u1 = y1.basis[j];
    const Mat& u2 = y2.basis[j];
    Mat m(u2.cols(), u1.cols());
    for (int c = 0; c < u1.cols(); ++c) {
      ChainMap h = combine(y1.hom, u1.col(c));
      m.set_col(c, in_basis(u2, y2.hom.coords(compose(e.p, y1.hom.y, y2.hom.y, f, h))));
    }
    out.push_back(std::move(m));
  }
  return out;
}

TorsionPairReport torsion_pair(const ProjComplex& p, const ARQuiver& ar) {
  TorsionPairReport r;
  r.partial = !ar.complete;
  for (int i = 0; i < static_cast<int>(ar.nodes.size()); ++i) {
    const Rep& u = ar.nodes[i].module;
    if (hom_to_module_dim(p, u, 1) == 0) r.torsion.push_back(i);
    else if (hom_to_module_dim(p, u, 0) == 0) r.torsion_free.push_back(i);
    else r.neither.push_back(i);
  }
  r.split = !r.neither.empty() ? Tri::No : (r.partial ? Tri::Unknown : Tri::Yes);
  return r;
}

InducedQ induced_q(const ProjComplex& p0, std::mt19937_64& rng) {
  InducedQ out;
  out.end = end_algebra(p0, rng);
  const ProjComplex& p = out.end.p;
  AlgebraPtr a = p.alg;
  std::vector<int> all(a->num_vertices());
  std::iota(all.begin(), all.end(), 0);
  ProjComplex r = ProjComplex::stalk(a, all, 0);
  HomK ap = hom_homotopy(r, p, 0);
  // minimal left approximation: generators of Hom_K(A, P) modulo rad End_K(P)
  SpanBuilder low(ap.dim());
  std::vector<Vec> lowv;
  AlgebraPtr b0 = out.end.b();
  for (int i = b0->num_vertices(); i < b0->dim(); ++i) {
    ChainMap rho = out.end.element(out.end.pres.images[i]);
    for (const auto& h : ap.basis) {
      Vec v = ap.coords(compose(r, p, p, rho, h));
      if (low.add(v)) lowv.push_back(v);
    }
  }
  Mat gens = complement(lowv.empty() ? Mat(ap.dim(), 0) : Mat::from_cols(lowv, ap.dim()), ap.dim());
  const int m = gens.cols();
  out.approximation_rank = m;
  ProjComplex pm = p;
  for (int k = 1; k < m; ++k) pm = direct_sum(pm, p);
  if (m == 0) pm = ProjComplex::stalk(a, {}, 0);
  ChainMap alpha;
  std::vector<ProjMatrix> parts;
  for (int k = 0; k < m; ++k) parts.push_back(combine(ap, gens.col(k)).comp[0]);
  alpha.comp.push_back(vstack(parts, all));
  if (m == 0) alpha = zero_chain(r, pm, 0);
  Cone c = cone(r, pm, alpha);
  out.cone_rnf = radical_normal_form(c.c);

  // C lies in add P iff id_C factors through a sum of copies of P
  const ProjComplex& cr = out.cone_rnf;
  HomK cc = hom_homotopy(cr, cr, 0);
  if (cc.dim() == 0) {
    out.cone_in_add = true;
  } else {
    HomK cp = hom_homotopy(cr, p, 0), pc = hom_homotopy(p, cr, 0);
    SpanBuilder sb(cc.dim());
    for (const auto& f : cp.basis) {
      for (const auto& g : pc.basis) {
        sb.add(cc.coords(compose(cr, p, cr, g, f)));
        if (sb.size() == cc.dim()) break;
      }
      if (sb.size() == cc.dim()) break;
    }
    out.cone_in_add = sb.size() == cc.dim();
  }
  if (!out.cone_in_add) throw std::invalid_argument("induced_q: cone of the approximation is not in add P (P not silting)");

  HomRep h1 = hom_from_generator(out.end, pm);
  HomRep h0 = hom_from_generator(out.end, c.c);
  Morphism beta = hom_from_generator(out.end, h1, h0, c.from_y);
  AlgebraPtr b = out.end.b();
  ProjCover c1 = projective_cover(h1.module), c0 = projective_cover(h0.module);
  auto c0inv = inverse(c0.map);
  if (!c0inv || !is_iso(c1.p, h1.module, c1.map)) throw std::logic_error("induced_q: Hom(P, add P) is not projective");
  Morphism dq = compose(*c0inv, compose(beta, c1.map));
  ProjComplex q;
  q.alg = b;
  q.lo = -1;
  q.terms = {c1.vertices, c0.vertices};
  q.d = {from_morphism(b, c0.vertices, c1.vertices, dq)};
  out.q = radical_normal_form(q);
  return out;
}

std::optional<QuiverMatch> match_quivers(const Quiver& a, const Quiver& b) {
  const int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_arrows() != b.num_arrows() || n > 9) return std::nullopt;
  auto count = [](const Quiver& q) {
    std::map<std::pair<int, int>, std::vector<int>> c;
    for (int t = 0; t < q.num_arrows(); ++t) c[{q.arrows[t].src, q.arrows[t].tgt}].push_back(t);
    return c;
  };
  auto ca = count(a), cb = count(b);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& [k, v] : ca) {
      auto it = cb.find({perm[k.first], perm[k.second]});
      if (it == cb.end() || it->second.size() != v.size()) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    QuiverMatch m;
    m.vertex = perm;
    m.arrow.assign(a.num_arrows(), -1);
    for (const auto& [k, v] : ca) {
      const auto& w = cb.at({perm[k.first], perm[k.second]});
      for (size_t i = 0; i < v.size(); ++i) m.arrow[v[i]] = w[i];
    }
    return m;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<QuiverMatch> match_hereditary(const Algebra& a, const Algebra& b) {
  if (!a.is_hereditary_path_algebra() || !b.is_hereditary_path_algebra() || a.dim() != b.dim()) return std::nullopt;
  return match_quivers(a.quiver(), b.quiver());
}

ProjComplex transport(const ProjComplex& x, const QuiverMatch& m, AlgebraPtr target) {
  const Algebra& a = *x.alg;
  std::map<std::pair<int, Word>, int> index;
  for (int i = 0; i < target->dim(); ++i) index[{target->basis(i).src, target->basis(i).word}] = i;
  std::vector<int> bmap(a.dim());
  for (int i = 0; i < a.dim(); ++i) {
    Word w;
    for (int t : a.basis(i).word) w.push_back(m.arrow[t]);
    auto it = index.find({m.vertex[a.basis(i).src], w});
    if (it == index.end()) throw std::invalid_argument("transport: path has no image");
    bmap[i] = it->second;
  }
  auto vmap = [&](const std::vector<int>& v) {
    std::vector<int> o;
    for (int i : v) o.push_back(m.vertex[i]);
    return o;
  };
  ProjComplex y;
  y.alg = target;
  y.lo = x.lo;
  for (const auto& t : x.terms) y.terms.push_back(vmap(t));
  for (const auto& d : x.d) {
    ProjMatrix e = ProjMatrix::zero(*target, vmap(d.tgt), vmap(d.src));
    for (size_t k = 0; k < d.entries.size(); ++k)
      for (int i = 0; i < a.dim(); ++i) e.entries[k][bmap[i]] = d.entries[k][i];
    y.d.push_back(std::move(e));
  }
  return y;
}

bool complexes_isomorphic(const ProjComplex& x0, const ProjComplex& y0, std::mt19937_64& rng, int tries) {
  ProjComplex x = radical_normal_form(x0), y = radical_normal_form(y0);
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.lo != y.lo || x.hi() != y.hi()) return false;
  for (int k = x.lo; k <= x.hi(); ++k) {
    auto s = x.term(k), t = y.term(k);
    std::sort(s.begin(), s.end());
    std::sort(t.begin(), t.end());
    if (s != t) return false;
  }
  HomK h = hom_homotopy(x, y, 0);
  if (h.cycles.empty()) return false;
  const FieldSpec& f = x.alg->field();
  if (!f.is_rational()) {
    // small cycle space over a finite field: try every combination
    double count = std::pow(static_cast<double>(f.p), static_cast<double>(h.cycles.size()));
    if (count <= 1 << 16) {
      std::vector<long long> c(h.cycles.size(), 0);
      for (;;) {
        ChainMap g = zero_chain(x, y, 0);
        for (std::size_t i = 0; i < c.size(); ++i)
          if (c[i]) g = add(g, scale(Scalar::residue(c[i], f.p), h.cycles[i]));
        if (is_isomorphism(x, y, g)) return true;
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == static_cast<long long>(f.p)) c[i++] = 0;
        if (i == c.size()) return false;
      }
    }
    tries *= 8;
  }
  for (int t = 0; t < tries; ++t) {
    ChainMap g = zero_chain(x, y, 0);
    for (const auto& z : h.cycles) g = add(g, scale(random_scalar(f, rng), z));
    if (is_isomorphism(x, y, g)) return true;
  }
  return false;
}

NuStableReport almost_nu_stable(const ProjComplex& t0, const ProjComplex& tb0, std::mt19937_64& rng) {
  NuStableReport r;
  ProjComplex t = radical_normal_form(t0), tb = radical_normal_form(tb0);
  r.shape_ok = !t.is_zero() && !tb.is_zero() && t.hi() <= 0 && tb.lo >= 0;
  if (!r.shape_ok) return r;
  std::set<int> s, sb;
  for (int k = t.lo; k < 0; ++k)
    for (int v : t.term(k)) s.insert(v);
  for (int k = 1; k <= tb.hi(); ++k)
    for (int v : tb.term(k)) sb.insert(v);
  r.left = nu_set_stable(t.alg, s, rng);
  r.right = nu_set_stable(tb.alg, sb, rng);
  return r;
}

}  // namespace extdim
