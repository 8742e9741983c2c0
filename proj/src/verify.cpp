#include "extdim/verify.hpp"

#include <cstdlib>

namespace extdim {

SepSplitReport check_separating_splitting(const ProjComplex& p, const ARQuiver& ar_a, const ProjComplex* q,
                                          const ARQuiver* ar_b, int cutoff, std::mt19937_64& rng) {
  SepSplitReport r;
  r.over_a = torsion_pair(p, ar_a);
  r.separating = r.over_a.split;

  r.f_id_bound = DimValue::finite(0);
  for (int i : r.over_a.torsion_free) r.f_id_bound = max(r.f_id_bound, inj_dim(ar_a.nodes[i].module, cutoff, rng));
  if (r.over_a.partial && r.f_id_bound.is_finite())
    r.f_id_bound = DimValue::unknown(0, "bound over discovered modules only: " + r.f_id_bound.str());

  bool nonzero = false;
  for (int t : r.over_a.torsion) {
    Rep om = syzygy(ar_a.nodes[t].module).omega;
    if (om.is_zero()) continue;
    for (int f : r.over_a.torsion_free)
      if (ext1_dim(om, ar_a.nodes[f].module) > 0) {
        nonzero = true;
        break;
      }
    if (nonzero) break;
  }
  r.ext2_vanishes = nonzero ? Tri::No : (r.over_a.partial ? Tri::Unknown : Tri::Yes);

  if (q && ar_b) {
    r.over_b = torsion_pair(*q, *ar_b);
    r.splitting = r.over_b->split;
    r.splitting_source = "torsion pair over B";
    r.t_pd_bound = DimValue::finite(0);
    for (int i : r.over_b->torsion) r.t_pd_bound = max(r.t_pd_bound, proj_dim(ar_b->nodes[i].module, cutoff, rng));
    if (r.over_b->partial && r.t_pd_bound.is_finite() && r.t_pd_bound.value <= 1)
      r.t_pd_bound = DimValue::unknown(0, "bound over discovered modules only: " + r.t_pd_bound.str());
  }
  if (r.splitting == Tri::Unknown && r.ext2_vanishes != Tri::Unknown) {
    r.splitting = r.ext2_vanishes;
    r.splitting_source = "Ext^2(T, F)";
  }
  if (r.f_id_bound.is_finite() && r.f_id_bound.value <= 1 && r.separating != Tri::Unknown) {
    Tri pd_small = Tri::Unknown;
    if (r.t_pd_bound.is_finite()) pd_small = r.t_pd_bound.value <= 1 ? Tri::Yes : Tri::No;
    else if (r.t_pd_bound.is_infinite()) pd_small = Tri::No;
    if (pd_small != Tri::Unknown) r.pd_criterion_agrees = (pd_small == r.separating) ? Tri::Yes : Tri::No;
  }
  return r;
}

DerivedBoundReport derived_bound_from(const EdBounds& a, const EdBounds& b, int length) {
  DerivedBoundReport r;
  r.a = a;
  r.b = b;
  r.length = length;
  const int allowed = length - 1;
  const bool fa = a.upper.is_finite(), fb = b.upper.is_finite();
  // the largest possible gap and the smallest possible gap between the intervals
  if (fa && fb) {
    int widest = std::max(a.upper.value - b.lower, b.upper.value - a.lower);
    r.holds = widest <= allowed ? Tri::Yes : Tri::Unknown;
  }
  int narrowest = 0;
  if (fb && a.lower > b.upper.value) narrowest = a.lower - b.upper.value;
  if (fa && b.lower > a.upper.value) narrowest = b.lower - a.upper.value;
  if (narrowest > allowed) r.holds = Tri::No;
  if (a.exact() && b.exact()) {
    int gap = std::abs(a.lower - b.lower);
    r.equality = gap == allowed;
    r.strict = gap < allowed;
  }
  return r;
}

std::string DerivedBoundReport::str() const {
  std::string s = "ed(A) in " + a.str() + ", ed(B) in " + b.str() + ", length " + std::to_string(length);
  if (equality) s += ": equality";
  else if (strict) s += ": strict";
  return s;
}

DerivedBoundReport verify_derived_bound(AlgebraPtr a, AlgebraPtr b_alg, const ProjComplex& t, const KnitBudget& budget,
                                        std::mt19937_64& rng) {
  EndK e = end_algebra(t, rng);
  bool match = e.b()->dim() == b_alg->dim() &&
               (match_hereditary(*e.b(), *b_alg).has_value() ||
                (!b_alg->is_hereditary_path_algebra() && match_quivers(e.b()->quiver(), b_alg->quiver()).has_value()));
  DerivedBoundReport r = derived_bound_from(ed_bounds(a, budget, rng), ed_bounds(b_alg, budget, rng), complex_length(t));
  r.end_matches = match;
  return r;
}

SiltingTheoremReport verify_silting_theorem(const ProjComplex& p, AlgebraPtr b_alg, const KnitBudget& budget,
                                            std::mt19937_64& rng, int cutoff) {
  SiltingTheoremReport r;
  r.silting = silting_report(p, rng);
  if (!r.silting.silting) {
    r.failed_hypothesis = "not a 2-term silting complex";
    return r;
  }
  InducedQ iq = induced_q(p, rng);
  AlgebraPtr b = iq.end.b();
  ProjComplex q = iq.q;
  if (b_alg) {
    if (auto m = match_hereditary(*b, *b_alg)) {
      q = transport(q, *m, b_alg);
      b = b_alg;
    }
  }
  ARQuiver ar_a, ar_b;
  r.ed_a = ed_bounds(p.alg, budget, rng, cutoff, &ar_a);
  r.ed_b = ed_bounds(b, budget, rng, cutoff, &ar_b);
  if (ar_a.nodes.empty()) ar_a = knit(p.alg, budget, rng);
  if (ar_b.nodes.empty()) ar_b = knit(b, budget, rng);
  r.sep = check_separating_splitting(iq.end.p, ar_a, &q, &ar_b, cutoff, rng);

  if (r.sep.separating == Tri::No) r.failed_hypothesis = "not separating";
  else if (r.sep.f_id_bound.is_infinite() || (r.sep.f_id_bound.is_finite() && r.sep.f_id_bound.value > 1))
    r.failed_hypothesis = "id > 1 on F(P)";
  r.hypotheses = r.sep.separating == Tri::Yes && r.sep.f_id_bound.is_finite() && r.sep.f_id_bound.value <= 1;

  if (r.ed_a.exact() && r.ed_b.exact()) r.ed_equal = r.ed_a.lower == r.ed_b.lower ? Tri::Yes : Tri::No;
  else if ((r.ed_a.upper.is_finite() && r.ed_a.upper.value < r.ed_b.lower) ||
           (r.ed_b.upper.is_finite() && r.ed_b.upper.value < r.ed_a.lower))
    r.ed_equal = Tri::No;
  if (r.hypotheses) r.theorem = r.ed_equal;
  return r;
}

StableExampleReport verify_stable_example(AlgebraPtr a, AlgebraPtr b, const KnitBudget& budget_a,
                                          const KnitBudget& budget_b, std::mt19937_64& rng, int cutoff) {
  StableExampleReport r;
  for (const auto& c : find_nodes(a, rng))
    if (c.is_node()) r.nodes.push_back(c.vertex);
  r.loewy_a = a->loewy_length();
  r.gd_a = global_dim(a, cutoff, rng);
  r.gd_b = global_dim(b, cutoff, rng);
  r.pd_first_simple = proj_dim(simple(a, 0), cutoff, rng);
  r.ed_a = ed_bounds(a, budget_a, rng, cutoff);
  r.ed_b = ed_bounds(b, budget_b, rng, cutoff);
  return r;
}

}  // namespace extdim
