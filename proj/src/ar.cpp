#include "extdim/ar.hpp"

#include <map>
#include <queue>
#include <stdexcept>

#include "extdim/quiver.hpp"

namespace extdim {

ShortExact almost_split_sequence(const Rep& m, std::mt19937_64& rng) {
  Rep tm = tau(m);
  if (tm.is_zero()) throw std::invalid_argument("almost split sequence: module is projective");
  EndRing em = end_ring(m);
  auto cert = local_end(m, em, rng);
  if (!cert) throw std::invalid_argument("almost split sequence: module is decomposable");
  ExtSpace e = ext1(m, tm);
  if (e.dim() == 0) throw std::logic_error("almost split sequence: Ext^1(M, tau M) vanishes");
  const Syzygy& s = e.syz;
  // socle under rad End(M): classes killed by every radical endomorphism
  Mat conds(0, e.dim());
  for (int r = 0; r < cert->rad.cols(); ++r) {
    Morphism phi = em.element(m, cert->rad.col(r));
    Morphism up = lift(s.cover, s.cover.p, s.cover.map, compose(phi, s.cover.map));
    Morphism om;
    for (size_t i = 0; i < up.size(); ++i) {
      if (s.omega.dims[i] == 0) {
        om.emplace_back(0, 0);
        continue;
      }
      om.push_back(*solve(s.inc[i], up[i] * s.inc[i]));
    }
    Mat a(e.dim(), e.dim());
    for (int j = 0; j < e.dim(); ++j) a.set_col(j, e.coords(compose(e.classes[j], om)));
    conds = Mat::vstack(conds, a);
  }
  Nullspace soc = nullspace(conds);
  if (soc.basis.cols() == 0) throw std::logic_error("almost split sequence: empty socle");
  Morphism xi = zero_morphism(s.omega, tm);
  Vec c = soc.basis.col(0);
  for (int j = 0; j < e.dim(); ++j)
    if (!c[j].is_zero()) xi = add(xi, scale(c[j], e.classes[j]));
  return extension(e, xi);
}

namespace {

struct Knitter {
  ARQuiver& q;
  const KnitBudget& budget;
  std::mt19937_64& rng;
  using Item = std::pair<int, int>;  // (total dim, node)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> todo;

  int add(const Rep& x) {
    int before = q.cat.size();
    int i = q.cat.insert(x, rng);
    if (i == before) {
      ARNode n;
      n.module = q.cat[i];
      n.projective = is_projective(n.module);
      n.injective = extdim::is_injective(n.module);
      q.nodes.push_back(std::move(n));
      todo.push({x.total_dim(), i});
    }
    return i;
  }

  bool fail(const std::string& why) {
    q.complete = false;
    q.stop_reason = why;
    return false;
  }

  bool run() {
    for (int i = 0; i < q.alg->num_vertices(); ++i) add(projective(q.alg, i));
    while (!todo.empty()) {
      int x = todo.top().second;
      todo.pop();
      if (q.steps >= budget.max_steps) return fail("step budget exhausted");
      ++q.steps;
      // close under predecessors too, so a finished run is a union of components
      Rep xm = q.nodes[x].module;
      if (q.nodes[x].projective) {
        for (const auto& s : decompose(subrep(xm, radical_subspace(xm)).module, rng)) add(s.module);
      } else if (q.nodes[x].tau < 0) {
        Rep t = tau(xm);
        if (t.total_dim() > budget.max_dim) return fail("dimension budget exhausted");
        add(t);
      }
      if (q.nodes[x].injective) {
        for (const auto& s : decompose(quotient(xm, socle_subspace(xm)).module, rng)) add(s.module);
        continue;
      }
      Rep y = tau_inverse(q.nodes[x].module);
      if (y.total_dim() > budget.max_dim) return fail("dimension budget exhausted");
      ShortExact ses = almost_split_sequence(y, rng);
      for (int d : ses.middle.dims)
        if (d > budget.max_dim) return fail("dimension budget exhausted");
      int yi = add(y);
      Mesh mesh;
      mesh.start = x;
      mesh.end = yi;
      std::map<int, int> mult;
      for (const auto& s : decompose(ses.middle, rng)) {
        if (s.module.total_dim() > budget.max_dim) return fail("dimension budget exhausted");
        ++mult[add(s.module)];
      }
      mesh.middle.assign(mult.begin(), mult.end());
      q.meshes.push_back(std::move(mesh));
      q.nodes[x].tau_inv = yi;
      q.nodes[yi].tau = x;
    }
    q.complete = true;
    return true;
  }
};

}  // namespace

ARQuiver knit(AlgebraPtr a, const KnitBudget& budget, std::mt19937_64& rng) {
  ARQuiver q;
  q.alg = std::move(a);
  Knitter k{q, budget, rng, {}};
  k.run();
  return q;
}

std::vector<std::tuple<int, int, int>> ARQuiver::arrows(std::mt19937_64& rng) const {
  std::map<std::pair<int, int>, int> m;
  auto put = [&](int u, int v, int k) {
    int& slot = m[{u, v}];
    slot = std::max(slot, k);
  };
  for (const auto& mesh : meshes)
    for (const auto& [z, k] : mesh.middle) {
      put(mesh.start, z, k);
      put(z, mesh.end, k);
    }
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].projective) continue;
    auto r = radical_subspace(nodes[i].module);
    Rep rad = subrep(nodes[i].module, r).module;
    std::map<int, int> mult;
    for (const auto& s : decompose(rad, rng)) {
      int z = find(s.module);
      if (z >= 0) ++mult[z];
    }
    for (const auto& [z, k] : mult) put(z, static_cast<int>(i), k);
  }
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& [uv, k] : m) out.emplace_back(uv.first, uv.second, k);
  return out;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

RepFiniteness representation_finite(AlgebraPtr a, const KnitBudget& budget, std::mt19937_64& rng, ARQuiver* out) {
  RepFiniteness r;
  if (a->is_hereditary_path_algebra()) {
    for (const auto& c : classify_components(a->quiver()))
      if (!c.is_dynkin()) {
        r.verdict = Tri::No;
        r.certificate = "hereditary with non-Dynkin component " + c.str();
        return r;
      }
  }
  ARQuiver q = knit(a, budget, rng);
  if (q.complete) {
    r.verdict = Tri::Yes;
    r.indecomposables = static_cast<int>(q.nodes.size());
    r.certificate = "knitting closed with " + std::to_string(r.indecomposables) + " indecomposables";
  } else {
    r.certificate = "knitting stopped: " + q.stop_reason;
  }
  if (out) *out = std::move(q);
  return r;
}

std::vector<NodeCheck> find_nodes(AlgebraPtr a, std::mt19937_64& rng) {
  std::vector<NodeCheck> out;
  for (int i = 0; i < a->num_vertices(); ++i) {
    NodeCheck c;
    c.vertex = i;
    Rep s = simple(a, i);
    c.projective = is_projective(s);
    c.injective = extdim::is_injective(s);
    if (!c.injective) {
      Rep y = tau_inverse(s);
      ShortExact ses = almost_split_sequence(y, rng);
      c.middle = ses.middle;
      c.middle_projective = is_projective(ses.middle);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace extdim
