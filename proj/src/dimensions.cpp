#include "extdim/dimensions.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace extdim {

DimValue DimValue::finite(int n) {
  DimValue d;
  d.kind = Kind::Finite;
  d.value = n;
  return d;
}

DimValue DimValue::infinite(int i, int j) {
  DimValue d;
  d.kind = Kind::Infinite;
  d.period_from = i;
  d.period_to = j;
  return d;
}

DimValue DimValue::unknown(int cutoff, std::string reason) {
  DimValue d;
  d.kind = Kind::Unknown;
  d.cutoff = cutoff;
  d.reason = std::move(reason);
  return d;
}

std::string DimValue::str() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "inf";
    case Kind::Unknown: break;
  }
  return "unknown";
}

DimValue max(const DimValue& a, const DimValue& b) {
  if (a.is_infinite()) return a;
  if (b.is_infinite()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  return a.value >= b.value ? a : b;
}

std::vector<Rep> syzygies(const Rep& m, int k) {
  std::vector<Rep> out{m};
  for (int i = 0; i < k; ++i) out.push_back(syzygy(out.back()).omega);
  return out;
}

DimValue proj_dim(const Rep& m, int cutoff, std::mt19937_64& rng) {
  std::vector<Rep> seen;
  Rep cur = m;
  for (int k = 0; k <= cutoff; ++k) {
    if (is_projective(cur)) return DimValue::finite(k);
    for (int i = 0; i < k; ++i)
      if (seen[i].dims == cur.dims && isomorphic(seen[i], cur, rng)) return DimValue::infinite(i, k);
    seen.push_back(cur);
    cur = syzygy(cur).omega;
  }
  return DimValue::unknown(cutoff, "no projective syzygy and no repetition up to the cutoff");
}

DimValue inj_dim(const Rep& m, int cutoff, std::mt19937_64& rng) { return proj_dim(dual(m), cutoff, rng); }

DimValue global_dim(AlgebraPtr a, int cutoff, std::mt19937_64& rng) {
  DimValue g = DimValue::finite(0);
  for (int i = 0; i < a->num_vertices(); ++i) g = max(g, proj_dim(simple(a, i), cutoff, rng));
  return g;
}

namespace {

// psi with iota o psi = phi, for a monomorphism iota whose image contains that of phi.
Morphism factor_through_mono(const Morphism& iota, const Morphism& phi) {
  Morphism out;
  for (size_t v = 0; v < iota.size(); ++v) {
    if (iota[v].cols() == 0 || phi[v].cols() == 0) {
      out.emplace_back(iota[v].cols(), phi[v].cols());
      continue;
    }
    auto s = solve(iota[v], phi[v]);
    if (!s) throw std::logic_error("factor_through_mono: image not contained");
    out.push_back(*s);
  }
  return out;
}

ShortExact horseshoe(const ShortExact& s) {
  Syzygy sa = syzygy(s.left), sc = syzygy(s.right);
  Morphism h = lift(sc.cover, s.middle, s.g, sc.cover.map);
  DirectSum d = direct_sum(std::vector<Rep>{sa.cover.p, sc.cover.p});
  Morphism phi = add(compose(compose(s.f, sa.cover.map), d.proj[0]), compose(h, d.proj[1]));
  SubRep k = kernel(d.module, s.middle, phi);
  ShortExact out;
  out.left = sa.omega;
  out.middle = k.module;
  out.right = sc.omega;
  out.f = factor_through_mono(k.map, compose(d.inj[0], sa.inc));
  out.g = factor_through_mono(sc.inc, compose(d.proj[1], k.map));
  return out;
}

}  // namespace

ShortExact syzygy_sequence(const ShortExact& s, int i) {
  ProjCover cz = projective_cover(s.right);
  Morphism h = lift(cz, s.middle, s.g, cz.map);
  DirectSum d = direct_sum(std::vector<Rep>{s.left, cz.p});
  Morphism phi = add(compose(s.f, d.proj[0]), compose(h, d.proj[1]));
  SubRep k = kernel(d.module, s.middle, phi);
  ShortExact cur;
  cur.left = k.module;
  cur.middle = d.module;
  cur.right = s.middle;
  cur.f = k.map;
  cur.g = phi;
  for (int t = 0; t < i; ++t) cur = horseshoe(cur);
  return cur;
}

bool is_exact(const ShortExact& s) {
  if (!is_morphism(s.left, s.middle, s.f) || !is_morphism(s.middle, s.right, s.g)) return false;
  if (!is_zero(compose(s.g, s.f))) return false;
  if (!is_injective(s.left, s.f) || !is_surjective(s.right, s.g)) return false;
  return s.left.total_dim() + s.right.total_dim() == s.middle.total_dim();
}

AddCategory::AddCategory(const Rep& m, std::mt19937_64& rng) { init({m}, rng); }
AddCategory::AddCategory(const std::vector<Rep>& parts, std::mt19937_64& rng) { init(parts, rng); }

void AddCategory::init(const std::vector<Rep>& parts, std::mt19937_64& rng) {
  for (const auto& p : parts)
    for (const auto& s : decompose(p, rng)) cat_.insert(s.module, rng);
  homs_.assign(cat_.size(), {});
  for (int j = 0; j < cat_.size(); ++j)
    for (int k = 0; k < cat_.size(); ++k) homs_[j].push_back(hom_space(cat_[j], cat_[k]));
}

std::optional<std::vector<int>> AddCategory::contains(const Rep& x, std::mt19937_64& rng) const {
  std::vector<int> mult(cat_.size(), 0);
  for (const auto& s : decompose(x, rng)) {
    int i = cat_.find(s.module);
    if (i < 0) return std::nullopt;
    ++mult[i];
  }
  return mult;
}

AddCategory::Approximation AddCategory::approximate(const Rep& x) const {
  const int n = cat_.size();
  std::vector<HomSpace> hx;
  for (int k = 0; k < n; ++k) hx.push_back(hom_space(cat_[k], x));
  Approximation ap;
  ap.mult.assign(n, 0);
  std::vector<Rep> parts;
  std::vector<Morphism> maps;
  for (int j = 0; j < n; ++j) {
    const int h = hx[j].dim();
    if (h == 0) continue;
    // maps N_j -> X factoring through radical maps N_j -> N_k
    SpanBuilder sb(h);
    std::vector<Vec> low;
    for (int k = 0; k < n; ++k) {
      std::vector<Morphism> rad;
      if (k != j) {
        rad = homs_[j][k].basis;
      } else {
        const LocalCert& c = cat_.cert(j);
        for (int col = 0; col < c.rad.cols(); ++col) rad.push_back(cat_.end(j).element(cat_[j], c.rad.col(col)));
      }
      for (const auto& f : hx[k].basis)
        for (const auto& r : rad) {
          Vec v = hx[j].coords(compose(f, r));
          if (sb.add(v)) low.push_back(v);
        }
    }
    Mat gens = complement(low.empty() ? Mat(h, 0) : Mat::from_cols(low, h), h);
    for (int c = 0; c < gens.cols(); ++c) {
      parts.push_back(cat_[j]);
      maps.push_back(hx[j].combine(gens.col(c), cat_[j], x));
    }
    ap.mult[j] = gens.cols();
  }
  if (parts.empty()) {
    ap.source = Rep::zero(x.alg);
    ap.map = zero_morphism(ap.source, x);
  } else {
    DirectSum d = direct_sum(parts);
    ap.source = d.module;
    ap.map = zero_morphism(d.module, x);
    for (size_t i = 0; i < parts.size(); ++i) ap.map = add(ap.map, compose(maps[i], d.proj[i]));
  }
  ap.surjective = is_surjective(x, ap.map);
  return ap;
}

WrdResult wrd_upper(const AddCategory& m, const Rep& x, int cutoff, std::mt19937_64& rng) {
  WrdResult r;
  Rep cur = x;
  for (int n = 0; n <= cutoff; ++n) {
    if (auto mult = m.contains(cur, rng)) {
      r.terms.push_back(*mult);
      r.value = DimValue::finite(n);
      return r;
    }
    auto ap = m.approximate(cur);
    if (!ap.surjective) {
      r.value = DimValue::unknown(n, "right add(M)-approximation is not surjective");
      return r;
    }
    r.terms.push_back(ap.mult);
    cur = kernel(ap.source, cur, ap.map).module;
    r.kernels.push_back(cur);
  }
  r.value = DimValue::unknown(cutoff, "resolution did not terminate within the cutoff");
  return r;
}

DimValue wrd_upper_algebra(const AddCategory& m, const ARQuiver& ar, int cutoff, std::mt19937_64& rng) {
  if (!ar.complete) return DimValue::unknown(0, "AR quiver incomplete");
  DimValue v = DimValue::finite(0);
  for (const auto& node : ar.nodes) v = max(v, wrd_upper(m, node.module, cutoff, rng).value);
  return v;
}

bool EdBounds::contains(int v) const {
  if (v < lower) return false;
  if (upper.is_finite()) return v <= upper.value;
  return true;
}

std::string EdBounds::str() const {
  return "[" + std::to_string(lower) + ", " + (upper.is_finite() ? upper.str() : std::string("inf")) + "]";
}

EdBounds ed_bounds(AlgebraPtr a, const KnitBudget& budget, std::mt19937_64& rng, int cutoff, ARQuiver* ar_out) {
  EdBounds e;
  ARQuiver ar;
  RepFiniteness rf = representation_finite(a, budget, rng, &ar);
  if (rf.verdict == Tri::No) {
    e.lower = 1;
    e.lower_certificate = "representation infinite: " + rf.certificate;
  }
  e.candidates.emplace_back("Loewy length - 1", DimValue::finite(a->loewy_length() - 1));
  e.candidates.emplace_back("global dimension", global_dim(a, cutoff, rng));
  if (rf.verdict == Tri::Yes) {
    e.candidates.emplace_back("additive generator", DimValue::finite(0));
    std::vector<Rep> parts;
    for (int i = 0; i < a->num_vertices(); ++i) {
      parts.push_back(projective(a, i));
      parts.push_back(injective(a, i));
    }
    AddCategory m(parts, rng);
    e.candidates.emplace_back("A + D(A) weak resolution", wrd_upper_algebra(m, ar, cutoff, rng));
  }
  for (const auto& [name, v] : e.candidates)
    if (v.is_finite() && (!e.upper.is_finite() || v.value < e.upper.value)) {
      e.upper = v;
      e.upper_certificate = name;
    }
  if (!e.upper.is_finite()) e.upper = DimValue::unknown(cutoff, "no finite candidate");
  if (ar_out) *ar_out = std::move(ar);
  return e;
}

namespace {

void require_finite_field(const Algebra& a) {
  if (a.field().is_rational()) throw std::invalid_argument("exhaustive search needs a finite field");
}

// All multisets of size 1..k from `items`.
std::vector<std::vector<int>> multisets(const std::vector<int>& items, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(size_t)> rec = [&](size_t from) {
    if (!cur.empty()) out.push_back(cur);
    if (static_cast<int>(cur.size()) == k) return;
    for (size_t i = from; i < items.size(); ++i) {
      cur.push_back(items[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Rep sum_of(const ARQuiver& ar, const std::vector<int>& nodes) {
  std::vector<Rep> parts;
  for (int i : nodes) parts.push_back(ar.nodes[i].module);
  return direct_sum(parts).module;
}

// Calls f on every vector in F_p^d except zero; false when over the limit.
bool for_each_nonzero(std::uint32_t p, int d, long limit, const std::function<void(const Vec&)>& f) {
  long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= p;
    if (total > limit) return false;
  }
  for (long code = 1; code < total; ++code) {
    Vec v(d);
    long c = code;
    for (int i = 0; i < d; ++i) {
      v[i] = Scalar::residue(c % p, p);
      c /= p;
    }
    f(v);
  }
  return true;
}

}  // namespace

std::vector<int> filtration_levels(const ARQuiver& ar, const std::vector<int>& t, int max_n, const SearchBounds& sb,
                                   std::mt19937_64& rng, bool* exhausted) {
  require_finite_field(*ar.alg);
  const std::uint32_t p = ar.alg->field().p;
  const int n = static_cast<int>(ar.nodes.size());
  std::vector<int> level(n, -1);
  for (int i : t) level[i] = 0;
  bool complete_search = true;
  long steps = 0;
  auto us = multisets(t, sb.max_summands);
  for (int round = 1; round <= max_n; ++round) {
    std::vector<int> reached;
    for (int i = 0; i < n; ++i)
      if (level[i] >= 0) reached.push_back(i);
    if (static_cast<int>(reached.size()) == n) break;
    std::vector<int> fresh;
    for (const auto& vs : multisets(reached, sb.max_summands)) {
      Rep v = sum_of(ar, vs);
      for (const auto& u_nodes : us) {
        if (++steps > sb.max_steps) {
          complete_search = false;
          break;
        }
        Rep u = sum_of(ar, u_nodes);
        ExtSpace e = ext1(v, u);
        if (e.dim() == 0) continue;
        bool ok = for_each_nonzero(p, e.dim(), sb.max_classes, [&](const Vec& c) {
          Morphism xi = zero_morphism(e.syz.omega, u);
          for (int k = 0; k < e.dim(); ++k)
            if (!c[k].is_zero()) xi = add(xi, scale(c[k], e.classes[k]));
          ShortExact s = extension(e, xi);
          for (const auto& sm : decompose(s.middle, rng)) {
            int idx = ar.find(sm.module);
            if (idx >= 0 && level[idx] < 0) fresh.push_back(idx);
          }
        });
        if (!ok) complete_search = false;
      }
    }
    if (fresh.empty()) break;
    for (int i : fresh)
      if (level[i] < 0) level[i] = round;
  }
  if (exhausted) *exhausted = complete_search;
  return level;
}

bool filtration_member(const ARQuiver& ar, const Rep& x, const std::vector<int>& t, int n, const SearchBounds& sb,
                       std::mt19937_64& rng) {
  auto level = filtration_levels(ar, t, n, sb, rng);
  for (const auto& s : decompose(x, rng)) {
    int i = ar.find(s.module);
    if (i < 0 || level[i] < 0 || level[i] > n) return false;
  }
  return true;
}

namespace {

// Basic subsets of the nodes, largest first; all of them only for small quivers.
std::vector<std::vector<int>> candidate_subsets(int n) {
  std::vector<std::vector<int>> out;
  if (n > 12) {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    out.push_back(all);
    return out;
  }
  std::vector<unsigned> masks;
  for (unsigned m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](unsigned a, unsigned b) { return __builtin_popcount(a) > __builtin_popcount(b); });
  for (unsigned m : masks) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (m & (1u << i)) s.push_back(i);
    out.push_back(s);
  }
  return out;
}

}  // namespace

int ed_exhaustive(const ARQuiver& ar, int max_n, const SearchBounds& sb, std::mt19937_64& rng) {
  if (!ar.complete) throw std::invalid_argument("ed_exhaustive: AR quiver incomplete");
  const int n = static_cast<int>(ar.nodes.size());
  auto subsets = candidate_subsets(n);
  for (int level = 0; level <= max_n; ++level)
    for (const auto& t : subsets) {
      auto lv = filtration_levels(ar, t, level, sb, rng);
      if (std::all_of(lv.begin(), lv.end(), [&](int x) { return x >= 0 && x <= level; })) return level;
    }
  return -1;
}

std::vector<int> wrd_levels(const ARQuiver& ar, const std::vector<int>& m, int max_n, const SearchBounds& sb,
                            std::mt19937_64& rng) {
  require_finite_field(*ar.alg);
  const std::uint32_t p = ar.alg->field().p;
  const int n = static_cast<int>(ar.nodes.size());
  std::vector<int> level(n, -1);
  for (int i : m) level[i] = 0;
  auto m0s = multisets(m, sb.max_summands);
  // modules with an exact add(M)-resolution of length <= the current round
  std::vector<Rep> resolved;
  for (const auto& s : m0s) resolved.push_back(sum_of(ar, s));
  long steps = 0;
  for (int round = 1; round <= max_n; ++round) {
    std::vector<Rep> next;
    std::vector<int> fresh;
    for (const auto& k : resolved) {
      for (const auto& m0n : m0s) {
        if (++steps > sb.max_steps) break;
        Rep m0 = sum_of(ar, m0n);
        HomSpace h = hom_space(k, m0);
        if (h.dim() == 0) continue;
        for_each_nonzero(p, h.dim(), sb.max_classes, [&](const Vec& c) {
          Morphism f = h.combine(c, k, m0);
          if (!is_injective(k, f)) return;
          Rep q = cokernel(k, m0, f).module;
          if (q.is_zero()) return;
          for (const auto& sm : decompose(q, rng)) {
            int idx = ar.find(sm.module);
            if (idx >= 0 && level[idx] < 0) fresh.push_back(idx);
          }
          if (next.size() < 64) next.push_back(q);
        });
      }
    }
    for (int i : fresh)
      if (level[i] < 0) level[i] = round;
    if (std::all_of(level.begin(), level.end(), [](int x) { return x >= 0; }) || next.empty()) break;
    resolved = std::move(next);
  }
  return level;
}

int wrd_exhaustive(const ARQuiver& ar, int max_n, const SearchBounds& sb, std::mt19937_64& rng) {
  if (!ar.complete) throw std::invalid_argument("wrd_exhaustive: AR quiver incomplete");
  const int n = static_cast<int>(ar.nodes.size());
  auto subsets = candidate_subsets(n);
  int best = -1;
  for (const auto& m : subsets) {
    auto lv = wrd_levels(ar, m, best < 0 ? max_n : best - 1, sb, rng);
    if (std::any_of(lv.begin(), lv.end(), [](int x) { return x < 0; })) continue;
    int v = *std::max_element(lv.begin(), lv.end());
    if (best < 0 || v < best) best = v;
    if (best == 0) break;
  }
  return best;
}

}  // namespace extdim
