#include "extdim/decompose.hpp"

namespace extdim {

EndRing end_ring(const Rep& m) {
  EndRing e;
  e.hom = hom_space(m, m);
  int r = e.hom.dim();
  std::vector<Sparse> table(static_cast<size_t>(r) * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Vec c = e.hom.coords(compose(e.hom.basis[i], e.hom.basis[j]));
      Sparse& s = table[static_cast<size_t>(i) * r + j];
      for (int k = 0; k < r; ++k)
        if (!c[k].is_zero()) s.emplace_back(k, c[k]);
    }
  Vec one = r ? e.hom.coords(identity_morphism(m)) : Vec{};
  e.alg = FiniteAlgebra(m.alg->field(), r, std::move(table), std::move(one));
  return e;
}

std::vector<Summand> decompose(const Rep& m, std::mt19937_64& rng) {
  if (m.is_zero()) return {};
  EndRing e = end_ring(m);
  IdempotentSplit split = primitive_idempotents(e.alg, rng);
  std::vector<Summand> out;
  if (split.idempotents.size() == 1) {
    out.push_back({m, identity_morphism(m), identity_morphism(m)});
    return out;
  }
  for (const auto& idem : split.idempotents) {
    Morphism f = e.element(m, idem);
    SubRep im = image(m, m, f);
    Summand s;
    s.module = im.module;
    s.inc = im.map;
    for (size_t i = 0; i < f.size(); ++i) {
      if (im.map[i].cols() == 0) {
        s.proj.emplace_back(0, m.dims[i]);
        continue;
      }
      auto p = solve(im.map[i], f[i]);
      s.proj.push_back(std::move(*p));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<LocalCert> local_end(const Rep& m, const EndRing& e, std::mt19937_64& rng) {
  if (m.is_zero()) return std::nullopt;
  IdempotentSplit split = primitive_idempotents(e.alg, rng);
  if (split.idempotents.size() != 1) return std::nullopt;
  return split.certs[0];
}

bool is_indecomposable(const Rep& m, std::mt19937_64& rng) {
  EndRing e = end_ring(m);
  return local_end(m, e, rng).has_value();
}

bool isomorphic_indecomposable(const Rep& m, const EndRing& em, const LocalCert& cm, const Rep& n) {
  if (m.dims != n.dims) return false;
  HomSpace mn = hom_space(m, n);
  if (mn.dim() == 0) return false;
  HomSpace nm = hom_space(n, m);
  for (const auto& f : mn.basis)
    for (const auto& g : nm.basis)
      if (!cm.lambda(em.coords(compose(g, f))).is_zero()) return true;
  return false;
}

bool isomorphic(const Rep& m, const Rep& n, std::mt19937_64& rng) {
  if (m.dims != n.dims) return false;
  if (m.is_zero()) return true;
  IndecCatalogue cat;
  auto a = summand_multiplicities(m, cat, rng);
  auto b = summand_multiplicities(n, cat, rng);
  a.resize(cat.size(), 0);
  b.resize(cat.size(), 0);
  return a == b;
}

int IndecCatalogue::find(const Rep& x) const {
  for (size_t i = 0; i < items_.size(); ++i)
    if (isomorphic_indecomposable(items_[i].module, items_[i].end, items_[i].cert, x)) return static_cast<int>(i);
  return -1;
}

int IndecCatalogue::insert(const Rep& x, std::mt19937_64& rng) {
  int i = find(x);
  if (i >= 0) return i;
  EndRing e = end_ring(x);
  auto c = local_end(x, e, rng);
  if (!c) throw std::logic_error("catalogue entry is not indecomposable");
  items_.push_back({x, std::move(e), std::move(*c)});
  return size() - 1;
}

std::vector<int> summand_multiplicities(const Rep& m, IndecCatalogue& cat, std::mt19937_64& rng) {
  std::vector<int> mult(cat.size(), 0);
  for (const auto& s : decompose(m, rng)) {
    int i = cat.insert(s.module, rng);
    if (i >= static_cast<int>(mult.size())) mult.resize(i + 1, 0);
    ++mult[i];
  }
  return mult;
}

bool is_radical_map(const Rep& m, const EndRing& em, const LocalCert& cm, const Rep& n, const Morphism& f) {
  HomSpace nm = hom_space(n, m);
  for (const auto& g : nm.basis)
    if (!cm.lambda(em.coords(compose(g, f))).is_zero()) return false;
  return true;
}

}  // namespace extdim
