// One line per acceptance criterion; exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "extdim/dsl.hpp"
#include "extdim/manifest.hpp"

using namespace extdim;

namespace {

const std::string kFix = EXTDIM_FIXTURES;

AlgebraPtr alg(const std::string& name) { return load_algebra(kFix + "/algebras/" + name + ".alg"); }
AlgebraPtr micro(const std::string& name) { return load_algebra(kFix + "/micro/" + name + ".alg"); }
ProjComplex cpx(const std::string& name, AlgebraPtr a) {
  return normalize_loaded(complex_from_json(Json::parse(read_file(kFix + "/complexes/" + name + ".json")), a), nullptr);
}

struct Check {
  std::ostringstream why;
  bool ok = true;
  void expect(bool c, const std::string& what) {
    if (!c) {
      if (!ok) why << "; ";
      why << what;
      ok = false;
    }
  }
};

using Dims = std::vector<std::vector<int>>;
Dims dims_of(const ARQuiver& ar, const std::vector<int>& idx) {
  Dims d;
  for (int i : idx) d.push_back(ar.nodes[i].module.dims);
  std::sort(d.begin(), d.end());
  return d;
}
std::vector<int> all_nodes(const ARQuiver& ar) {
  std::vector<int> v(ar.nodes.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  return v;
}

Scalar rand_scalar(const FieldSpec& f, std::mt19937_64& rng, int lo = -2, int hi = 2) {
  return Scalar(std::uniform_int_distribution<int>(lo, hi)(rng)).in_field(f);
}

// --- 1 --------------------------------------------------------------------

void criterion1(Check& c) {
  std::mt19937_64 rng(0);
  auto a = alg("ex1_A"), b = alg("ex1_B");
  ARQuiver ar = knit(a, KnitBudget{}, rng);
  c.expect(ar.complete, "knit(ex1_A) incomplete");
  const Dims frozen = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 0, 1, 0},
                       {0, 1, 0, 0, 1}, {0, 2, 1, 1, 1}, {0, 1, 0, 1, 1}, {0, 1, 1, 0, 1}, {0, 1, 1, 1, 0},
                       {0, 1, 1, 1, 1}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}};
  Dims want = frozen;
  std::sort(want.begin(), want.end());
  c.expect(dims_of(ar, all_nodes(ar)) == want, "AR vertex set differs from the 14 displayed modules");
  c.expect(ed_bounds(a, KnitBudget{}, rng).str() == "[0, 0]", "ed(ex1_A) != [0, 0]");
  ProjComplex p = cpx("ex1_P", a);
  EndK e = end_algebra(p, rng);
  const Quiver& q = e.b()->quiver();
  std::vector<int> deg(q.num_vertices());
  for (const auto& x : q.arrows) ++deg[x.src], ++deg[x.tgt];
  c.expect(q.num_vertices() == 5 && q.num_arrows() == 4 && *std::max_element(deg.begin(), deg.end()) == 4,
           "End(P) quiver is not a 5-vertex star");
  c.expect(classify_graph(q).family == GraphFamily::Euclidean, "End(P) graph not Euclidean");
  c.expect(ed_bounds(b, KnitBudget{}, rng).str() == "[1, 1]", "ed(ex1_B) != [1, 1]");
  auto d = verify_derived_bound(a, b, p, KnitBudget{}, rng);
  c.expect(d.end_matches, "End(P) does not match ex1_B");
  c.expect(d.equality && d.length == 2, "derived bound is not the equality |0 - 1| = 1");
}

// --- 2 --------------------------------------------------------------------

void criterion2(Check& c) {
  std::mt19937_64 rng(0);
  auto a = alg("ex2_A"), b = alg("ex2_B");
  ProjComplex p = cpx("ex2_P", a), qfix = cpx("ex2_Q", b);
  ARQuiver ar = knit(a, KnitBudget{}, rng);
  auto tp = torsion_pair(p, ar);
  c.expect(dims_of(ar, tp.torsion) == Dims{{1, 0, 0}}, "T(P) != add S(1)");
  c.expect(dims_of(ar, tp.torsion_free) == Dims{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}},
           "F(P) differs from the five displayed modules");
  InducedQ iq = induced_q(p, rng);
  auto m = match_hereditary(*iq.end.b(), *b);
  c.expect(m.has_value(), "End(P) does not match ex2_B");
  if (m) c.expect(complexes_isomorphic(transport(iq.q, *m, b), qfix, rng), "induced Q differs from the displayed one");
  auto r = verify_silting_theorem(p, b, KnitBudget{}, rng);
  c.expect(r.sep.separating == Tri::Yes && r.sep.splitting == Tri::Yes, "split flags not both true");
  c.expect(r.theorem == Tri::Yes && r.ed_a.str() == "[0, 0]" && r.ed_b.str() == "[0, 0]", "silting theorem check");
  c.expect(derived_bound_from(r.ed_a, r.ed_b, complex_length(p)).strict, "strictness |0 - 0| < 1 not reported");
}

// --- 3 --------------------------------------------------------------------

void criterion3(Check& c) {
  std::mt19937_64 rng(0);
  auto a = alg("ex1_A"), b = alg("ex1_B");
  ProjComplex p = cpx("ex1_P", a), q = cpx("ex1_Q", b);
  auto r = verify_silting_theorem(p, b, KnitBudget{}, rng);
  c.expect(!r.hypotheses && r.failed_hypothesis == "id > 1 on F(P)", "hypothesis failure not reported");
  c.expect(r.sep.f_id_bound.is_finite() && r.sep.f_id_bound.value == 2, "id S(1) != 2");
  c.expect(r.ed_a.str() == "[0, 0]" && r.ed_b.str() == "[1, 1]" && r.ed_equal == Tri::No, "ed mismatch 0 != 1 not reported");
  ARQuiver arb = knit(b, KnitBudget{}, rng);
  c.expect(torsion_pair(q, arb).split == Tri::No, "Q over B not reported as non-separating");
}

// --- 4 --------------------------------------------------------------------

void criterion4(Check& c) {
  std::mt19937_64 rng(0);
  auto a = alg("ex3_A"), b = alg("ex3_B");
  Manifest m = load_manifest(kFix + "/manifests/ex3.json");
  auto r = verify_stable_example(a, b, m.budget, m.budget, rng);
  c.expect(r.nodes == std::vector<int>{a->quiver().vertex_index("1")}, "nodes != {S(1)}");
  c.expect(r.loewy_a == 5, "Loewy length != 5");
  c.expect(r.pd_first_simple.is_infinite() && r.pd_first_simple.period_from >= 0 &&
               r.pd_first_simple.period_to > r.pd_first_simple.period_from,
           "pd S(1) not infinite with a period witness");
  c.expect(r.ed_b.str() == "[1, 1]", "ed(ex3_B) != [1, 1]");
  c.expect(r.ed_a.contains(1), "ed(ex3_A) interval does not contain 1");
}

// --- 5 --------------------------------------------------------------------

void criterion5(Check& c, std::string& note) {
  Manifest m = load_manifest(kFix + "/manifests/micro.json");
  int n = 0;
  for (const auto& [name, src] : m.algebras) {
    std::mt19937_64 rng(m.seed);
    auto a = load_algebra(kFix + "/manifests/" + src.path);
    if (a->dim() > 8 || a->num_vertices() > 3 || a->num_arrows() > 3 || a->field().is_rational()) {
      c.expect(false, name + " outside the corpus limits");
      continue;
    }
    ARQuiver ar = knit(a, m.budget, rng);
    if (!ar.complete) {
      c.expect(false, name + " not rep-finite within budget");
      continue;
    }
    int k = static_cast<int>(ar.nodes.size());
    int ed = ed_exhaustive(ar, k, SearchBounds{}, rng), wrd = wrd_exhaustive(ar, k, SearchBounds{}, rng);
    c.expect(ed >= 0 && ed == wrd, name + ": ed " + std::to_string(ed) + " != wrd " + std::to_string(wrd));
    ++n;
  }
  c.expect(n >= 10, "fewer than 10 algebras");
  note = std::to_string(n) + " algebras";
}

// --- 6 --------------------------------------------------------------------

struct Pool {
  std::vector<AlgebraPtr> algs;
  std::vector<ARQuiver> ars;
};

Pool complete_pool(std::mt19937_64& rng) {
  Pool p;
  for (auto a : {alg("ex1_A"), alg("ex2_A"), alg("ex2_B"), micro("m06_a3_linear"), micro("m11_cycle_rad2"),
                 micro("m12_cycle_rad3"), micro("m14_arrow_then_loop")}) {
    p.algs.push_back(a);
    p.ars.push_back(knit(a, KnitBudget{}, rng));
  }
  return p;
}

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[std::uniform_int_distribution<size_t>(0, v.size() - 1)(rng)];
}

// Prefers pairs with Ext^1 != 0 and a nonzero class; falls back to a split sequence.
ShortExact random_ses(const ARQuiver& ar, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 24; ++attempt) {
    const Rep& x = pick(ar.nodes, rng).module;
    const Rep& n = pick(ar.nodes, rng).module;
    ExtSpace e = ext1(x, n);
    if (e.dim() == 0) {
      if (attempt < 23) continue;
      DirectSum d = direct_sum(std::vector<Rep>{n, x});
      return ShortExact{n, d.module, x, d.inj[0], d.proj[1]};
    }
    std::vector<Scalar> coef;
    bool nonzero = false;
    while (!nonzero) {
      coef.clear();
      for (int k = 0; k < e.dim(); ++k) {
        coef.push_back(rand_scalar(x.alg->field(), rng));
        nonzero = nonzero || !coef.back().is_zero();
      }
    }
    Morphism xi = scale(coef[0], e.classes[0]);
    for (int k = 1; k < e.dim(); ++k) xi = add(xi, scale(coef[k], e.classes[k]));
    return extension(e, xi);
  }
  return {};
}

ProjComplex random_two_term(AlgebraPtr a, int lo, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nv(0, a->num_vertices() - 1), len(0, 2);
  ProjComplex x;
  x.alg = a;
  x.lo = lo;
  x.terms.resize(2);
  for (auto& t : x.terms) {
    int k = len(rng);
    for (int i = 0; i < k; ++i) t.push_back(nv(rng));
  }
  ProjMatrix d = ProjMatrix::zero(*a, x.terms[1], x.terms[0]);
  for (int r = 0; r < d.rows(); ++r)
    for (int col = 0; col < d.cols(); ++col)
      for (int bi : a->paths(d.tgt[r], d.src[col])) d.at(r, col)[bi] = rand_scalar(a->field(), rng, -1, 1);
  x.d = {d};
  return x;
}

std::vector<std::vector<int>> sorted_terms(const ProjComplex& x) {
  std::vector<std::vector<int>> t = x.terms;
  for (auto& v : t) std::sort(v.begin(), v.end());
  return t;
}

void criterion6(Check& c, std::string& note) {
  const int kChecks = 200;
  std::mt19937_64 rng(6);
  Pool pool = complete_pool(rng);
  for (size_t i = 0; i < pool.ars.size(); ++i) c.expect(pool.ars[i].complete, "pool AR quiver incomplete");
  auto any_ar = [&]() -> const ARQuiver& { return pick(pool.ars, rng); };
  int fails[7] = {};
  int nonsplit = 0, reduced = 0;

  for (int t = 0; t < kChecks; ++t) {
    ShortExact s = random_ses(any_ar(), rng);
    nonsplit += ext1_dim(s.right, s.left) > 0 && !isomorphic(s.middle, direct_sum(s.left, s.right), rng);
    bool ok = is_exact(s);
    for (size_t v = 0; v < s.middle.dims.size(); ++v) ok = ok && s.middle.dims[v] == s.left.dims[v] + s.right.dims[v];
    fails[0] += !ok;
  }
  for (int t = 0; t < kChecks; ++t) {
    ShortExact s = random_ses(any_ar(), rng);
    int i = std::uniform_int_distribution<int>(0, 2)(rng);
    ShortExact w = syzygy_sequence(s, i);
    bool ok = is_exact(w) && w.left.total_dim() == syzygies(s.right, i + 1)[i + 1].total_dim() &&
              w.right.total_dim() == syzygies(s.middle, i)[i].total_dim() &&
              w.middle.total_dim() >= syzygies(s.left, i)[i].total_dim();
    fails[1] += !ok;
  }
  for (int t = 0; t < kChecks; ++t) {
    const Rep& m = pick(any_ar().nodes, rng).module;
    Rep d = dual(m);
    fails[2] += !(dual(d) == m && d.total_dim() == m.total_dim());
  }
  for (int t = 0; t < kChecks; ++t) {
    AlgebraPtr a = pick(pool.algs, rng);
    int i = std::uniform_int_distribution<int>(0, a->num_vertices() - 1)(rng);
    fails[3] += !isomorphic(nakayama(projective(a, i)), injective(a, i), rng);
  }
  {
    std::vector<std::pair<int, int>> nonproj;
    for (size_t k = 0; k < pool.ars.size(); ++k)
      for (size_t i = 0; i < pool.ars[k].nodes.size(); ++i)
        if (!pool.ars[k].nodes[i].projective) nonproj.emplace_back(static_cast<int>(k), static_cast<int>(i));
    for (int t = 0; t < kChecks; ++t) {
      auto [k, i] = pick(nonproj, rng);
      const Rep& m = pool.ars[k].nodes[i].module;
      fails[4] += !isomorphic(tau_inverse(tau(m)), m, rng);
    }
  }
  for (int t = 0; t < kChecks; ++t) {
    AlgebraPtr a = pick(pool.algs, rng);
    ProjComplex x = random_two_term(a, -1, rng);
    if (t % 2) x = direct_sum(x, random_two_term(a, 0, rng));
    ProjComplex r = radical_normal_form(x);
    ProjComplex rr = radical_normal_form(r);
    reduced += r.total_rank() < x.total_rank();
    int v = std::uniform_int_distribution<int>(0, a->num_vertices() - 1)(rng);
    ProjComplex cc = ProjComplex::stalk(a, {v}, x.lo);
    cc.terms.push_back({v});
    cc.d = {identity_pm(*a, {v})};
    ProjComplex xc = direct_sum(x, cc);
    bool ok = r.is_radical() && rr.lo == r.lo && sorted_terms(rr) == sorted_terms(r) &&
              complex_length(xc) == complex_length(x) && sorted_terms(radical_normal_form(xc)) == sorted_terms(r);
    fails[5] += !ok;
  }
  {
    std::vector<std::pair<ProjComplex, ARQuiver>> twos;
    std::mt19937_64 r2(1);
    twos.emplace_back(cpx("ex1_P", pool.algs[0]), pool.ars[0]);
    twos.emplace_back(cpx("ex2_P", pool.algs[1]), pool.ars[1]);
    twos.emplace_back(cpx("ex2_Q", pool.algs[2]), pool.ars[2]);
    auto b1 = alg("ex1_B");
    twos.emplace_back(cpx("ex1_Q", b1), knit(b1, KnitBudget{40, 64}, r2));
    const int shifts[] = {-3, -2, -1, 2, 3};
    for (int t = 0; t < kChecks; ++t) {
      const auto& [p, ar] = pick(twos, rng);
      const Rep& m = pick(ar.nodes, rng).module;
      int j = shifts[std::uniform_int_distribution<int>(0, 4)(rng)];
      fails[6] += hom_to_module_dim(p, m, j) != 0;
    }
  }
  const char* names[] = {"SES additivity", "syzygy sequence", "dual involution", "nu P = I", "tau^- tau = id",
                         "radical normal form", "Hom(P, M[j]) vanishing"};
  int total = 0;
  for (int k = 0; k < 7; ++k) {
    total += fails[k];
    if (fails[k]) c.expect(false, std::string(names[k]) + ": " + std::to_string(fails[k]) + " failures");
  }
  note = std::to_string(7 * kChecks) + " checks, " + std::to_string(total) + " failures (" + std::to_string(nonsplit) +
         " non-split sequences, " + std::to_string(reduced) + " complexes reduced)";
}

// --- 7 --------------------------------------------------------------------

void criterion7(Check& c) {
  std::mt19937_64 rng(7);
  std::vector<std::pair<std::string, AlgebraPtr>> algs = {
      {"k", parse_algebra("field Q\nvertex 1\n")},
      {"k[x]/x^2", parse_algebra("field Q\nvertex 1\narrow x : 1 -> 1\nrel x.x\n")},
      {"ex2_A", alg("ex2_A")}};
  for (const auto& [name, a] : algs) {
    AlgebraPtr te = trivial_extension(*a, rng);
    c.expect(te->dim() == 2 * a->dim(), name + ": presented dimension != 2 dim A");
    FiniteAlgebra f = trivial_extension_constants(*a);
    c.expect(f.dim() == 2 * a->dim(), name + ": dimension != 2 dim A");
    c.expect(f.is_associative(), name + ": not associative");
    // t(a, g) = g(1): the coefficients of the dual trivial paths
    int n = f.dim();
    auto trace = [&](const Vec& x) {
      Scalar s(0);
      for (int i = 0; i < a->num_vertices(); ++i) s = s + x[a->dim() + i];
      return s;
    };
    Mat gram(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) gram(i, j) = trace(f.mul(f.unit(i), f.unit(j)));
    c.expect(gram == gram.transpose(), name + ": form not symmetric");
    c.expect(rank(gram) == n, name + ": form degenerate");
  }
}

// --- 8 --------------------------------------------------------------------

// finite < unknown/infinite; returns a sortable rank
long rank_of(const DimValue& d) { return d.is_finite() ? d.value : 1000000; }

void criterion8(Check& c, std::string& note) {
  std::mt19937_64 rng(8);
  const int cutoff = 12;
  int modules = 0, comparisons = 0;
  for (auto a : {alg("ex1_A"), alg("ex2_A"), alg("ex2_B"), micro("m06_a3_linear"), micro("m07_a3_zero_rel"),
                 micro("m12_cycle_rad3"), micro("m13_loop_then_arrow")}) {
    ARQuiver ar = knit(a, KnitBudget{}, rng);
    if (!ar.complete) {
      c.expect(false, "fixture AR quiver incomplete");
      continue;
    }
    std::vector<Rep> m1, m2, m3;
    for (int i = 0; i < a->num_vertices(); ++i) m1.push_back(projective(a, i));
    m2 = m1;
    for (int i = 0; i < a->num_vertices(); ++i) m2.push_back(injective(a, i));
    m3 = m2;
    for (int i = 0; i < a->num_vertices(); ++i) {
      Rep om = syzygy(injective(a, i)).omega;
      if (!om.is_zero()) m3.push_back(om);
    }
    AddCategory c1(m1, rng), c2(m2, rng), c3(m3, rng);
    const AddCategory* cats[] = {&c1, &c2, &c3};
    std::vector<std::vector<long>> w(3);
    for (const auto& node : ar.nodes) {
      ++modules;
      long prev = 0;
      for (int k = 0; k < 3; ++k) {
        long v = rank_of(wrd_upper(*cats[k], node.module, cutoff, rng).value);
        w[k].push_back(v);
        if (k > 0) {
          ++comparisons;
          c.expect(v <= prev, "monotonicity fails at " + node.module.dim_vector_string());
        }
        prev = v;
      }
    }
    for (int k = 0; k < 3; ++k) {
      long alg_prev = k ? rank_of(wrd_upper_algebra(*cats[k - 1], ar, cutoff, rng)) : 0;
      long alg_now = rank_of(wrd_upper_algebra(*cats[k], ar, cutoff, rng));
      if (k) c.expect(alg_now <= alg_prev, "algebra-level monotonicity fails");
      long sup = *std::max_element(w[k].begin(), w[k].end());
      c.expect(alg_now == sup, "algebra value is not the sup over indecomposables");
      for (size_t i = 0; i < ar.nodes.size(); ++i) {
        size_t j = std::uniform_int_distribution<size_t>(0, ar.nodes.size() - 1)(rng);
        Rep s = direct_sum(ar.nodes[i].module, ar.nodes[j].module);
        long v = rank_of(wrd_upper(*cats[k], s, cutoff, rng).value);
        ++comparisons;
        c.expect(v == std::max(w[k][i], w[k][j]),
                 "additivity fails at " + ar.nodes[i].module.dim_vector_string() + " + " +
                     ar.nodes[j].module.dim_vector_string());
      }
    }
  }
  note = std::to_string(modules) + " modules, " + std::to_string(comparisons) + " comparisons";
}

}  // namespace

int main() {
  struct Crit {
    int n;
    const char* name;
    double limit;
    std::function<void(Check&, std::string&)> run;
  };
  std::vector<Crit> crits = {
      {1, "first example reproduction", 10, [](Check& c, std::string&) { criterion1(c); }},
      {2, "A3 example reproduction", 5, [](Check& c, std::string&) { criterion2(c); }},
      {3, "counterexample discrimination", 10, [](Check& c, std::string&) { criterion3(c); }},
      {4, "stable equivalence example, n = 6", 20, [](Check& c, std::string&) { criterion4(c); }},
      {5, "wrd = ed oracle over F2", 300, criterion5},
      {6, "property suites", 120, criterion6},
      {7, "trivial extension", 5, [](Check& c, std::string&) { criterion7(c); }},
      {8, "wrd monotonicity and additivity", 300, criterion8},
  };
  int failed = 0;
  for (auto& k : crits) {
    Check c;
    std::string note;
    auto t0 = std::chrono::steady_clock::now();
    try {
      k.run(c, note);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(secs <= k.limit, "over the time limit");
    failed += !c.ok;
    std::printf("criterion %d  %-36s %s  %6.2fs / %3.0fs", k.n, k.name, c.ok ? "PASS" : "FAIL", secs, k.limit);
    if (!note.empty()) std::printf("  %s", note.c_str());
    if (!c.ok) std::printf("  (%s)", c.why.str().c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failed;
}
