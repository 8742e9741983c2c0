#include "extdim/algebra.hpp"

#include <algorithm>
#include <map>

namespace extdim {

namespace {

constexpr int kMaxLength = 64;
constexpr size_t kMaxPaths = 200000;

struct PathEnum {
  const Quiver& q;
  std::vector<std::vector<Word>> by_len;  // by_len[k] = words of length k (k >= 1)
  std::vector<std::vector<int>> out_arrows;

  explicit PathEnum(const Quiver& quiver) : q(quiver), by_len(1), out_arrows(quiver.num_vertices()) {
    for (int a = 0; a < q.num_arrows(); ++a) out_arrows[q.arrows[a].src].push_back(a);
  }
  int src(const Word& w) const { return q.arrows[w.front()].src; }
  int tgt(const Word& w) const { return q.arrows[w.back()].tgt; }
  size_t total() const {
    size_t t = 0;
    for (auto& v : by_len) t += v.size();
    return t;
  }
  void extend_to(int len) {
    while (static_cast<int>(by_len.size()) <= len) {
      int k = static_cast<int>(by_len.size());
      std::vector<Word> next;
      if (k == 1) {
        for (int a = 0; a < q.num_arrows(); ++a) next.push_back({a});
      } else {
        for (const auto& w : by_len[k - 1])
          for (int a : out_arrows[tgt(w)]) {
            Word x = w;
            x.push_back(a);
            next.push_back(std::move(x));
          }
      }
      by_len.push_back(std::move(next));
      if (total() > kMaxPaths)
        throw AlgebraError("path enumeration exceeded " + std::to_string(kMaxPaths) +
                           " paths before the arrow ideal became nilpotent; relations are not admissible");
    }
  }
};

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

}  // namespace

Vec Algebra::mul(const Vec& x, const Vec& y) const {
  int d = dim();
  Vec r(d);
  for (int i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      const Sparse& p = mult(i, j);
      if (p.empty()) continue;
      Scalar c = x[i] * y[j];
      for (const auto& [k, v] : p) r[k] += c * v;
    }
  }
  return r;
}

Scalar Algebra::one_scalar() const { return field_.is_rational() ? Scalar(1) : Scalar::residue(1, field_.p); }

Vec Algebra::unit(int i) const {
  Vec v(dim());
  v[i] = one_scalar();
  return v;
}

std::string Algebra::word_string(const Word& w, int vertex) const {
  if (w.empty()) return "e_" + quiver_.vertices[vertex];
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += quiver_.arrows[w[i]].label;
  }
  return s;
}

bool Algebra::is_hereditary_path_algebra() const {
  if (quiver_.has_oriented_cycle()) return false;
  PathEnum pe(quiver_);
  size_t count = num_vertices();
  for (int k = 1; k <= num_vertices(); ++k) {
    pe.extend_to(k);
    count += pe.by_len[k].size();
  }
  return count == static_cast<size_t>(dim());
}

void Algebra::finish() {
  int n = num_vertices();
  paths_.assign(static_cast<size_t>(n) * n, {});
  for (int i = 0; i < dim(); ++i) paths_[static_cast<size_t>(basis_[i].src) * n + basis_[i].tgt].push_back(i);
  // Loewy length from powers of the span of nontrivial basis words
  std::vector<Vec> rad;
  for (int i = n; i < dim(); ++i) rad.push_back(unit(i));
  std::vector<Vec> cur = rad;
  int k = 1;
  while (!cur.empty()) {
    ++k;
    SpanBuilder sb(dim());
    std::vector<Vec> next;
    for (const auto& x : cur)
      for (int a = 0; a < num_arrows(); ++a) {
        Vec p = mul(x, unit(arrow_basis(a)));
        if (sb.add(p)) next.push_back(std::move(p));
      }
    cur = std::move(next);
    if (k > dim() + 1) throw AlgebraError("radical is not nilpotent");
  }
  loewy_ = k;
}

std::shared_ptr<Algebra> Algebra::from_relations(FieldSpec field, Quiver q, std::vector<Relation> rels) {
  const int n = q.num_vertices();
  if (n == 0) throw AlgebraError("algebra has no vertices");
  for (auto& r : rels) {
    if (r.empty()) throw AlgebraError("empty relation");
    int s = -1, t = -1;
    for (auto& term : r) {
      term.coef = term.coef.in_field(field);
      if (term.word.size() < 2) throw AlgebraError("relation term of length < 2: " + std::to_string(term.word.size()));
      for (size_t i = 0; i + 1 < term.word.size(); ++i)
        if (q.arrows[term.word[i]].tgt != q.arrows[term.word[i + 1]].src)
          throw AlgebraError("relation term is not a path: " + q.arrows[term.word[i]].label + " does not end where " +
                             q.arrows[term.word[i + 1]].label + " starts");
      int ts = q.arrows[term.word.front()].src, tt = q.arrows[term.word.back()].tgt;
      if (s < 0) {
        s = ts;
        t = tt;
      } else if (s != ts || t != tt) {
        throw AlgebraError("relation terms are not parallel paths");
      }
    }
  }

  PathEnum pe(q);
  int N = -1;
  Rref red;
  std::vector<Word> cols;
  std::map<Word, int> col_of;
  for (int L = 1; L <= kMaxLength && N < 0; ++L) {
    pe.extend_to(L);
    if (rels.empty() || L == 1) {
      if (pe.by_len[L].empty()) N = L;
      continue;
    }
    cols.clear();
    col_of.clear();
    for (int k = L; k >= 2; --k)
      for (const auto& w : pe.by_len[k]) {
        col_of[w] = static_cast<int>(cols.size());
        cols.push_back(w);
      }
    std::vector<Vec> rows;
    for (const auto& r : rels) {
      int s = q.arrows[r[0].word.front()].src, t = q.arrows[r[0].word.back()].tgt;
      size_t minlen = r[0].word.size();
      for (auto& term : r) minlen = std::min(minlen, term.word.size());
      std::vector<Word> us{{}}, vs{{}};
      for (int k = 1; k + static_cast<int>(minlen) <= L; ++k)
        for (const auto& w : pe.by_len[k]) {
          if (pe.tgt(w) == s) us.push_back(w);
          if (pe.src(w) == t) vs.push_back(w);
        }
      for (const auto& u : us)
        for (const auto& v : vs) {
          if (u.size() + v.size() + minlen > static_cast<size_t>(L)) continue;
          Vec row(cols.size());
          bool any = false;
          for (const auto& term : r) {
            Word w = concat(concat(u, term.word), v);
            if (w.size() > static_cast<size_t>(L)) continue;
            row[col_of.at(w)] += term.coef;
            any = true;
          }
          if (any && !is_zero(row)) rows.push_back(std::move(row));
        }
    }
    Mat m = rows.empty() ? Mat(0, static_cast<int>(cols.size())) : Mat::from_rows(rows, static_cast<int>(cols.size()));
    red = rref(std::move(m));
    std::vector<int> row_of(cols.size(), -1);
    for (size_t i = 0; i < red.pivots.size(); ++i) row_of[red.pivots[i]] = static_cast<int>(i);
    bool all = true;
    for (const auto& w : pe.by_len[L]) {
      int c = col_of.at(w);
      int r = row_of[c];
      if (r < 0) {
        all = false;
        break;
      }
      for (int j = 0; j < static_cast<int>(cols.size()) && all; ++j)
        if (j != c && !red.m(r, j).is_zero()) all = false;
    }
    if (all) N = L;
  }
  if (N < 0) throw AlgebraError("arrow ideal is not nilpotent modulo the relations (no N <= 64)");

  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->field_ = field;
  alg->quiver_ = q;
  alg->relations_ = rels;
  alg->has_relations_ = true;
  for (int v = 0; v < n; ++v) alg->basis_.push_back({v, v, {}});
  for (int a = 0; a < q.num_arrows(); ++a) {
    if (N <= 1) break;
    alg->basis_.push_back({q.arrows[a].src, q.arrows[a].tgt, {a}});
  }
  std::vector<bool> is_piv(cols.size(), false);
  std::vector<int> row_of(cols.size(), -1);
  for (size_t i = 0; i < red.pivots.size(); ++i) {
    is_piv[red.pivots[i]] = true;
    row_of[red.pivots[i]] = static_cast<int>(i);
  }
  std::map<Word, int> basis_of;
  for (int i = 0; i < static_cast<int>(alg->basis_.size()); ++i)
    if (!alg->basis_[i].word.empty()) basis_of[alg->basis_[i].word] = i;
  for (int k = 2; k < N; ++k)
    for (const auto& w : pe.by_len[k]) {
      if (!rels.empty() && is_piv[col_of.at(w)]) continue;
      basis_of[w] = static_cast<int>(alg->basis_.size());
      alg->basis_.push_back({pe.src(w), pe.tgt(w), w});
    }
  auto reduce = [&](const Word& w) -> Sparse {
    if (static_cast<int>(w.size()) >= N) return {};
    auto it = basis_of.find(w);
    if (it != basis_of.end()) return {{it->second, alg->one_scalar()}};
    int c = col_of.at(w);
    int r = row_of[c];
    Sparse out;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
      if (j == c || red.m(r, j).is_zero()) continue;
      out.emplace_back(basis_of.at(cols[j]), -red.m(r, j));
    }
    return out;
  };
  int d = alg->dim();
  alg->table_.assign(static_cast<size_t>(d) * d, {});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const auto& bi = alg->basis_[i];
      const auto& bj = alg->basis_[j];
      if (bi.tgt != bj.src) continue;
      Sparse& slot = alg->table_[static_cast<size_t>(i) * d + j];
      if (bi.word.empty())
        slot = {{j, alg->one_scalar()}};
      else if (bj.word.empty())
        slot = {{i, alg->one_scalar()}};
      else
        slot = reduce(concat(bi.word, bj.word));
    }
  alg->finish();
  if (alg->loewy_ != N) throw AlgebraError("internal: Loewy length disagrees with the nilpotency degree");
  return alg;
}

std::shared_ptr<Algebra> Algebra::from_table(FieldSpec field, Quiver q, std::vector<BasisElem> basis,
                                             std::vector<Sparse> table) {
  int n = q.num_vertices();
  if (static_cast<int>(basis.size()) < n) throw AlgebraError("basis shorter than the vertex set");
  for (int v = 0; v < n; ++v)
    if (!basis[v].word.empty() || basis[v].src != v || basis[v].tgt != v)
      throw AlgebraError("basis must start with the trivial paths");
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& b = basis.at(n + a);
    if (b.word != Word{a}) throw AlgebraError("basis must list the arrows after the trivial paths");
  }
  if (table.size() != basis.size() * basis.size()) throw AlgebraError("multiplication table has wrong size");
  auto alg = std::shared_ptr<Algebra>(new Algebra());
  alg->field_ = field;
  alg->quiver_ = std::move(q);
  alg->basis_ = std::move(basis);
  alg->table_ = std::move(table);
  alg->finish();
  return alg;
}

std::shared_ptr<const Algebra> Algebra::ptr() const {
  if (parent_) return std::shared_ptr<const Algebra>(parent_->ptr(), this);
  return shared_from_this();
}

std::shared_ptr<const Algebra> Algebra::opposite() const {
  if (parent_) return parent_->ptr();
  std::call_once(opp_once_, [this] {
    auto op = std::unique_ptr<Algebra>(new Algebra());
    op->field_ = field_;
    op->quiver_ = quiver_.opposite();
    op->has_relations_ = has_relations_;
    for (const auto& r : relations_) {
      Relation rr = r;
      for (auto& t : rr) std::reverse(t.word.begin(), t.word.end());
      op->relations_.push_back(std::move(rr));
    }
    for (const auto& b : basis_) {
      BasisElem ob{b.tgt, b.src, b.word};
      std::reverse(ob.word.begin(), ob.word.end());
      op->basis_.push_back(std::move(ob));
    }
    int d = dim();
    op->table_.assign(static_cast<size_t>(d) * d, {});
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) op->table_[static_cast<size_t>(i) * d + j] = table_[static_cast<size_t>(j) * d + i];
    op->parent_ = this;
    op->finish();
    opp_ = std::move(op);
  });
  return std::shared_ptr<const Algebra>(ptr(), opp_.get());
}

FiniteAlgebra Algebra::as_finite() const {
  Vec one(dim());
  for (int v = 0; v < num_vertices(); ++v) one[v] = one_scalar();
  return FiniteAlgebra(field_, dim(), table_, one);
}

Presentation present(const FiniteAlgebra& a, const IdempotentSplit& split, const std::vector<std::string>& vertex_labels,
                     const std::string& arrow_prefix) {
  const int n = static_cast<int>(split.idempotents.size());
  const int d = a.dim();
  if (split.num_classes != n) throw AlgebraError("presentation needs pairwise non-isomorphic primitive idempotents (basic algebra)");
  const auto& eps = split.idempotents;
  // radical, block by block
  std::vector<std::vector<Vec>> rad(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat c = i == j ? split.certs[i].rad : a.corner(eps[i], eps[j]);
      for (int k = 0; k < c.cols(); ++k) rad[static_cast<size_t>(i) * n + j].push_back(c.col(k));
    }
  Quiver q;
  q.vertices = vertex_labels;
  std::vector<Vec> arrow_elems;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SpanBuilder sq(d);
      for (int k = 0; k < n; ++k)
        for (const auto& x : rad[static_cast<size_t>(i) * n + k])
          for (const auto& y : rad[static_cast<size_t>(k) * n + j]) sq.add(a.mul(x, y));
      for (const auto& x : rad[static_cast<size_t>(i) * n + j]) {
        if (!sq.add(x)) continue;
        q.arrows.push_back({arrow_prefix + std::to_string(q.arrows.size() + 1), i, j});
        arrow_elems.push_back(x);
      }
    }
  // word basis, breadth first
  std::vector<BasisElem> basis;
  std::vector<Vec> images;
  SpanBuilder sb(d);
  for (int i = 0; i < n; ++i) {
    sb.add(eps[i]);
    basis.push_back({i, i, {}});
    images.push_back(eps[i]);
  }
  std::vector<int> frontier;
  for (int k = 0; k < static_cast<int>(arrow_elems.size()); ++k) {
    if (!sb.add(arrow_elems[k])) throw AlgebraError("internal: arrow elements are dependent");
    frontier.push_back(static_cast<int>(basis.size()));
    basis.push_back({q.arrows[k].src, q.arrows[k].tgt, {k}});
    images.push_back(arrow_elems[k]);
  }
  while (!frontier.empty() && sb.size() < d) {
    std::vector<int> next;
    for (int b : frontier)
      for (int k = 0; k < static_cast<int>(arrow_elems.size()); ++k) {
        if (q.arrows[k].src != basis[b].tgt) continue;
        Vec v = a.mul(images[b], arrow_elems[k]);
        if (!sb.add(v)) continue;
        Word w = basis[b].word;
        w.push_back(k);
        next.push_back(static_cast<int>(basis.size()));
        basis.push_back({basis[b].src, q.arrows[k].tgt, w});
        images.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  if (static_cast<int>(basis.size()) != d) throw AlgebraError("arrows do not generate the algebra");
  Mat w = Mat::from_cols(images, d);
  auto winv = inverse(w);
  if (!winv) throw AlgebraError("internal: word basis not invertible");
  std::vector<Sparse> table(static_cast<size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (basis[i].tgt != basis[j].src) continue;
      Vec c = *winv * a.mul(images[i], images[j]);
      Sparse s;
      for (int k = 0; k < d; ++k)
        if (!c[k].is_zero()) s.emplace_back(k, c[k]);
      table[static_cast<size_t>(i) * d + j] = std::move(s);
    }
  Presentation out;
  out.algebra = Algebra::from_table(a.field(), std::move(q), std::move(basis), std::move(table));
  out.images = std::move(images);
  return out;
}

FiniteAlgebra trivial_extension_constants(const Algebra& a) {
  const int d = a.dim();
  const int D = 2 * d;
  std::vector<Sparse> table(static_cast<size_t>(D) * D);
  auto coef = [&](const Sparse& s, int q) {
    for (const auto& [k, v] : s)
      if (k == q) return v;
    return Scalar();
  };
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      // A x A
      Sparse s = a.mult(p, q);
      table[static_cast<size_t>(p) * D + q] = s;
      // b_p * b_q^*  : x |-> coef_q(x * b_p)
      Sparse l, r;
      for (int x = 0; x < d; ++x) {
        Scalar c = coef(a.mult(x, p), q);
        if (!c.is_zero()) l.emplace_back(d + x, c);
        Scalar c2 = coef(a.mult(p, x), q);
        if (!c2.is_zero()) r.emplace_back(d + x, c2);
      }
      table[static_cast<size_t>(p) * D + (d + q)] = std::move(l);
      table[static_cast<size_t>(d + q) * D + p] = std::move(r);
    }
  Vec one(D);
  for (int v = 0; v < a.num_vertices(); ++v) one[v] = a.one_scalar();
  return FiniteAlgebra(a.field(), D, std::move(table), std::move(one));
}

AlgebraPtr trivial_extension(const Algebra& a, std::mt19937_64& rng) {
  FiniteAlgebra t = trivial_extension_constants(a);
  IdempotentSplit split;
  for (int v = 0; v < a.num_vertices(); ++v) {
    Vec e = t.unit(v);
    auto cert = local_certificate(t, e, rng);
    if (!cert) throw AlgebraError("internal: trivial path is not primitive in the trivial extension");
    split.idempotents.push_back(e);
    split.certs.push_back(std::move(*cert));
    split.iso_class.push_back(v);
  }
  split.num_classes = a.num_vertices();
  return present(t, split, a.quiver().vertices, "t").algebra;
}

}  // namespace extdim
