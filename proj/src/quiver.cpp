#include "extdim/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace extdim {

int Quiver::vertex_index(const std::string& label) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices[i] == label) return i;
  return -1;
}

int Quiver::arrow_index(const std::string& label) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows[i].label == label) return i;
  return -1;
}

Quiver Quiver::opposite() const {
  Quiver q = *this;
  for (auto& a : q.arrows) std::swap(a.src, a.tgt);
  return q;
}

std::vector<std::vector<int>> Quiver::components() const {
  int n = num_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& a : arrows) parent[find(a.src)] = find(a.tgt);
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [r, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

bool Quiver::has_oriented_cycle() const {
  int n = num_vertices();
  std::vector<int> indeg(n, 0);
  for (const auto& a : arrows) {
    if (a.src == a.tgt) return true;
    ++indeg[a.tgt];
  }
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows)
      if (a.src == v && --indeg[a.tgt] == 0) stack.push_back(a.tgt);
  }
  return seen != n;
}

namespace {

GraphClass make(GraphFamily f, std::string t) { return GraphClass{f, std::move(t)}; }

}  // namespace

GraphClass classify_graph(const Quiver& q, const std::vector<int>& comp_in) {
  std::vector<int> comp = comp_in;
  if (comp.empty()) {
    comp.resize(q.num_vertices());
    std::iota(comp.begin(), comp.end(), 0);
  }
  int n = static_cast<int>(comp.size());
  std::map<int, int> local;
  for (int i = 0; i < n; ++i) local[comp[i]] = i;
  std::vector<std::vector<int>> adj(n);
  std::vector<int> deg(n, 0);
  int m = 0;
  for (const auto& a : q.arrows) {
    auto s = local.find(a.src), t = local.find(a.tgt);
    if (s == local.end() || t == local.end()) continue;
    ++m;
    deg[s->second]++;
    deg[t->second]++;
    adj[s->second].push_back(t->second);
    adj[t->second].push_back(s->second);
  }
  if (m > n) return make(GraphFamily::Wild, "wild");
  if (m == n) {
    // one cycle: Euclidean exactly when the whole graph is that cycle
    bool cycle = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    if (cycle) return make(GraphFamily::Euclidean, "~A" + std::to_string(n - 1));
    return make(GraphFamily::Wild, "wild");
  }
  // tree
  int maxd = n ? *std::max_element(deg.begin(), deg.end()) : 0;
  if (maxd <= 2) return make(GraphFamily::Dynkin, "A" + std::to_string(n));
  std::vector<int> branch;
  for (int i = 0; i < n; ++i)
    if (deg[i] >= 3) branch.push_back(i);
  if (maxd == 4) {
    if (branch.size() == 1 && n == 5) return make(GraphFamily::Euclidean, "~D4");
    return make(GraphFamily::Wild, "wild");
  }
  if (maxd > 4) return make(GraphFamily::Wild, "wild");
  auto arm_length = [&](int center, int first) {
    int len = 1, prev = center, cur = first;
    while (deg[cur] == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    return deg[cur] == 1 ? len : -1;  // -1: arm runs into another branch point
  };
  if (branch.size() == 1) {
    int c = branch[0];
    std::vector<int> arms;
    for (int nb : adj[c]) arms.push_back(arm_length(c, nb));
    std::sort(arms.begin(), arms.end());
    int p = arms[0], qq = arms[1], r = arms[2];
    if (p == 1 && qq == 1) return make(GraphFamily::Dynkin, "D" + std::to_string(n));
    if (p == 1 && qq == 2 && r <= 4) return make(GraphFamily::Dynkin, "E" + std::to_string(n));
    if (p == 2 && qq == 2 && r == 2) return make(GraphFamily::Euclidean, "~E6");
    if (p == 1 && qq == 3 && r == 3) return make(GraphFamily::Euclidean, "~E7");
    if (p == 1 && qq == 2 && r == 5) return make(GraphFamily::Euclidean, "~E8");
    return make(GraphFamily::Wild, "wild");
  }
  if (branch.size() == 2) {
    for (int c : branch) {
      int leaves = 0;
      for (int nb : adj[c])
        if (deg[nb] == 1) ++leaves;
      if (leaves != 2) return make(GraphFamily::Wild, "wild");
    }
    return make(GraphFamily::Euclidean, "~D" + std::to_string(n - 1));
  }
  return make(GraphFamily::Wild, "wild");
}

std::vector<GraphClass> classify_components(const Quiver& q) {
  std::vector<GraphClass> out;
  for (const auto& c : q.components()) out.push_back(classify_graph(q, c));
  return out;
}

}  // namespace extdim
