#include "extdim/manifest.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <sstream>

#include "extdim/dsl.hpp"

namespace extdim {

std::string beilinson_dsl(int n, const FieldSpec& field) {
  if (n < 1) throw InputError("beilinson: n must be at least 1");
  std::ostringstream os;
  os << "# Beilinson algebra, n = " << n << "\n";
  os << "field " << (field.is_rational() ? std::string("Q") : "F " + std::to_string(field.p)) << "\n";
  os << "vertex";
  for (int k = 0; k <= n; ++k) os << " " << k;
  os << "\n";
  auto name = [](int i, int k) { return "x" + std::to_string(i) + "_" + std::to_string(k); };
  for (int k = 0; k < n; ++k)
    for (int i = 0; i <= n; ++i) os << "arrow " << name(i, k) << " : " << k << " -> " << k + 1 << "\n";
  for (int k = 0; k + 1 < n; ++k)
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        os << "rel " << name(i, k) << "." << name(j, k + 1) << " - " << name(j, k) << "." << name(i, k + 1) << "\n";
  return os.str();
}

namespace {

std::string join(const std::string& dir, const std::string& p) {
  return (std::filesystem::path(dir) / p).lexically_normal().string();
}

void check_hash(const std::string& path, const std::string& want) {
  std::string got = content_hash(read_file(path));
  if (!want.empty() && got != want) throw InputError(path + ": content hash " + got + " does not match manifest (" + want + ")");
}

}  // namespace

Manifest load_manifest(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  Manifest m;
  m.dir = std::filesystem::path(path).parent_path().string();
  try {
    m.id = j.at("id").get<std::string>();
    if (j.contains("field")) m.field = parse_field(j["field"].get<std::string>());
    m.seed = j.value("seed", 0ull);
    if (j.contains("budget")) {
      m.budget.max_dim = j["budget"].value("dim", m.budget.max_dim);
      m.budget.max_steps = j["budget"].value("steps", m.budget.max_steps);
    }
    m.cutoff = j.value("cutoff", m.cutoff);
    const Json algebras = j.value("algebras", Json::object());
    const Json complexes = j.value("complexes", Json::object());
    for (const auto& [name, a] : algebras.items()) {
      AlgebraSource s;
      if (a.contains("generator")) {
        s.generator = a["generator"].get<std::string>();
        if (s.generator != "beilinson") throw InputError(path + ": unknown generator '" + s.generator + "'");
        s.n = a.at("n").get<int>();
      } else {
        s.path = a.at("path").get<std::string>();
        s.hash = a.value("fnv1a", "");
        check_hash(join(m.dir, s.path), s.hash);
      }
      m.algebras[name] = s;
    }
    for (const auto& [name, c] : complexes.items()) {
      ComplexSource s;
      s.path = c.at("path").get<std::string>();
      s.hash = c.value("fnv1a", "");
      s.algebra = c.at("algebra").get<std::string>();
      if (!m.algebras.count(s.algebra)) throw InputError(path + ": complex '" + name + "' refers to unknown algebra");
      check_hash(join(m.dir, s.path), s.hash);
      m.complexes[name] = s;
    }
    for (const auto& c : j.at("claims")) {
      Claim cl;
      cl.id = c.at("id").get<std::string>();
      cl.anchor = c.value("anchor", "");
      cl.verifier = c.at("verifier").get<std::string>();
      cl.args = c.value("args", Json::object());
      cl.expect = c.at("expect");
      auto names = verifier_names();
      if (std::find(names.begin(), names.end(), cl.verifier) == names.end())
        throw InputError(path + ": claim '" + cl.id + "' uses unknown verifier '" + cl.verifier + "'");
      m.claims.push_back(cl);
    }
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
  return m;
}

std::vector<std::string> manifest_paths(const std::string& dir) {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(dir, ec))
    if (e.path().extension() == ".json") out.push_back(e.path().string());
  if (ec) throw InputError("cannot list " + dir + ": " + ec.message());
  std::sort(out.begin(), out.end());
  return out;
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Budget: return "budget";
    case ClaimStatus::Error: return "error";
  }
  return "?";
}

int FixtureRun::count(ClaimStatus s) const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [&](const ClaimResult& r) { return r.status == s; }));
}

Json FixtureRun::json() const {
  Json j;
  j["fixture"] = id;
  j["field"] = field;
  j["seed"] = seed;
  j["budget"] = {{"dim", budget.max_dim}, {"steps", budget.max_steps}};
  Json cs = Json::array();
  for (const auto& r : results) {
    Json c = {{"id", r.claim.id}, {"anchor", r.claim.anchor}, {"verifier", r.claim.verifier},
              {"status", to_string(r.status)}, {"expect", r.claim.expect}, {"value", r.value},
              {"certificate", r.certificate}, {"seconds", r.seconds}};
    if (!r.message.empty()) c["message"] = r.message;
    cs.push_back(c);
  }
  j["claims"] = cs;
  j["summary"] = {{"pass", count(ClaimStatus::Pass)}, {"fail", count(ClaimStatus::Fail)},
                  {"budget", count(ClaimStatus::Budget)}, {"error", count(ClaimStatus::Error)}};
  return j;
}

namespace {

struct Outcome {
  Outcome(Json v, std::string cert) : value(std::move(v)), certificate(std::move(cert)) {}
  Json value;
  std::string certificate;
  bool incomplete = false;    // a budget stopped the computation
  std::optional<bool> pass;   // overrides the comparison with `expect`
};

Json sorted_dims(const ARQuiver& ar, const std::vector<int>& idx) {
  std::vector<std::vector<int>> d;
  for (int i : idx) d.push_back(ar.nodes[i].module.dims);
  std::sort(d.begin(), d.end());
  return d;
}

std::string graph_string(const Quiver& q) {
  std::string s;
  for (const auto& g : classify_components(q)) s += (s.empty() ? "" : " + ") + g.str();
  return s;
}

class Context {
 public:
  Context(const Manifest& m, const RunOptions& opt) : m_(m) {
    field_ = opt.field ? *opt.field : m.field;
    seed_ = opt.seed ? *opt.seed : m.seed;
    budget_ = m.budget;
    if (opt.budget_dim) budget_.max_dim = *opt.budget_dim;
    if (opt.budget_steps) budget_.max_steps = *opt.budget_steps;
    rng_.seed(seed_);
  }

  const FieldSpec& field() const { return field_; }
  std::uint64_t seed() const { return seed_; }
  const KnitBudget& budget() const { return budget_; }
  int cutoff() const { return m_.cutoff; }
  std::mt19937_64& rng() { return rng_; }

  AlgebraPtr algebra(const std::string& name) {
    if (auto it = alg_.find(name); it != alg_.end()) return it->second;
    auto s = m_.algebras.find(name);
    if (s == m_.algebras.end()) throw InputError("unknown algebra '" + name + "'");
    AlgebraPtr a;
    try {
      if (!s->second.generator.empty()) a = parse_algebra(beilinson_dsl(s->second.n, field_));
      else a = parse_algebra(read_file(join(m_.dir, s->second.path)), field_);
    } catch (const ParseError& e) {
      throw InputError(name + ": " + e.what());
    }
    return alg_[name] = a;
  }

  const ProjComplex& complex(const std::string& name) {
    if (auto it = cpx_.find(name); it != cpx_.end()) return it->second;
    auto s = m_.complexes.find(name);
    if (s == m_.complexes.end()) throw InputError("unknown complex '" + name + "'");
    AlgebraPtr a = algebra(s->second.algebra);
    ProjComplex x = complex_from_json(Json::parse(read_file(join(m_.dir, s->second.path))), a);
    return cpx_[name] = normalize_loaded(x, nullptr);
  }
  AlgebraPtr complex_algebra(const std::string& name) {
    auto s = m_.complexes.find(name);
    if (s == m_.complexes.end()) throw InputError("unknown complex '" + name + "'");
    return algebra(s->second.algebra);
  }

  const ARQuiver& ar(const std::string& name) {
    if (auto it = ar_.find(name); it != ar_.end()) return it->second;
    return ar_[name] = knit(algebra(name), budget_, rng_);
  }

  const EdBounds& ed(const std::string& name) {
    if (auto it = ed_.find(name); it != ed_.end()) return it->second;
    ARQuiver ar;
    EdBounds e = ed_bounds(algebra(name), budget_, rng_, m_.cutoff, &ar);
    if (!ar_.count(name) && ar.complete) ar_[name] = std::move(ar);
    return ed_[name] = e;
  }

  const InducedQ& iq(const std::string& cname) {
    if (auto it = iq_.find(cname); it != iq_.end()) return it->second;
    return iq_.emplace(cname, induced_q(complex(cname), rng_)).first->second;
  }

 private:
  const Manifest& m_;
  FieldSpec field_;
  std::uint64_t seed_;
  KnitBudget budget_;
  std::mt19937_64 rng_;
  std::map<std::string, AlgebraPtr> alg_;
  std::map<std::string, ProjComplex> cpx_;
  std::map<std::string, ARQuiver> ar_;
  std::map<std::string, EdBounds> ed_;
  std::map<std::string, InducedQ> iq_;
};

std::string arg(const Claim& c, const char* key) {
  if (!c.args.contains(key) || !c.args[key].is_string())
    throw InputError("claim '" + c.id + "': missing string argument '" + key + "'");
  return c.args[key].get<std::string>();
}

int vertex_arg(const Claim& c, const AlgebraPtr& a) {
  int v = a->quiver().vertex_index(arg(c, "vertex"));
  if (v < 0) throw InputError("claim '" + c.id + "': unknown vertex");
  return v;
}

using Verifier = std::function<Outcome(Context&, const Claim&)>;

const std::map<std::string, Verifier>& registry() {
  static const std::map<std::string, Verifier> r = {
      {"algebra_dim", [](Context& ctx, const Claim& c) { return Outcome{ctx.algebra(arg(c, "algebra"))->dim(), "path basis"}; }},
      {"loewy_length",
       [](Context& ctx, const Claim& c) {
         return Outcome{ctx.algebra(arg(c, "algebra"))->loewy_length(), "radical powers of the path basis"};
       }},
      {"graph_class",
       [](Context& ctx, const Claim& c) {
         return Outcome{graph_string(ctx.algebra(arg(c, "algebra"))->quiver()), "underlying graph"};
       }},
      {"ar_dim_vectors",
       [](Context& ctx, const Claim& c) {
         const ARQuiver& ar = ctx.ar(arg(c, "algebra"));
         std::vector<int> all(ar.nodes.size());
         for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
         Outcome o{sorted_dims(ar, all), "knitting, " + std::to_string(ar.steps) + " steps"};
         o.incomplete = !ar.complete;
         return o;
       }},
      {"ar_count",
       [](Context& ctx, const Claim& c) {
         const ARQuiver& ar = ctx.ar(arg(c, "algebra"));
         Outcome o{static_cast<int>(ar.nodes.size()), "knitting"};
         o.incomplete = !ar.complete;
         return o;
       }},
      {"global_dim",
       [](Context& ctx, const Claim& c) {
         DimValue d = global_dim(ctx.algebra(arg(c, "algebra")), ctx.cutoff(), ctx.rng());
         return Outcome{dim_value_json(d), "minimal resolutions of the simples"};
       }},
      {"proj_dim_simple",
       [](Context& ctx, const Claim& c) {
         auto a = ctx.algebra(arg(c, "algebra"));
         DimValue d = proj_dim(simple(a, vertex_arg(c, a)), ctx.cutoff(), ctx.rng());
         Outcome o{dim_value_json(d), d.is_infinite() ? "syzygy period" : "minimal projective resolution"};
         o.incomplete = d.is_unknown();
         return o;
       }},
      {"inj_dim_simple",
       [](Context& ctx, const Claim& c) {
         auto a = ctx.algebra(arg(c, "algebra"));
         DimValue d = inj_dim(simple(a, vertex_arg(c, a)), ctx.cutoff(), ctx.rng());
         Outcome o{dim_value_json(d), "minimal injective coresolution"};
         o.incomplete = d.is_unknown();
         return o;
       }},
      {"nodes",
       [](Context& ctx, const Claim& c) {
         auto a = ctx.algebra(arg(c, "algebra"));
         Json v = Json::array();
         for (const auto& n : find_nodes(a, ctx.rng()))
           if (n.is_node()) v.push_back(a->quiver().vertices[n.vertex]);
         return Outcome{v, "almost split sequences starting at the simples"};
       }},
      {"ed_bounds",
       [](Context& ctx, const Claim& c) {
         std::string name = arg(c, "algebra");
         const EdBounds& e = ctx.ed(name);
         Outcome o{e.str(), e.lower_certificate + "; upper: " + e.upper_certificate};
         o.incomplete = !e.exact();
         return o;
       }},
      {"ed_contains",
       [](Context& ctx, const Claim& c) {
         const EdBounds& e = ctx.ed(arg(c, "algebra"));
         Outcome o{e.str(), e.lower_certificate + "; upper: " + e.upper_certificate};
         o.pass = c.expect.is_number_integer() && e.contains(c.expect.get<int>());
         return o;
       }},
      {"ed_upper",
       [](Context& ctx, const Claim& c) {
         const EdBounds& e = ctx.ed(arg(c, "algebra"));
         return Outcome{dim_value_json(e.upper), e.upper_certificate};
       }},
      {"silting",
       [](Context& ctx, const Claim& c) {
         auto r = silting_report(ctx.complex(arg(c, "complex")), ctx.rng());
         std::string v = r.tilting ? "tilting" : r.silting ? "silting" : r.presilting ? "presilting" : "not presilting";
         Outcome o{v, r.criterion + ": " + std::to_string(r.summand_classes) + " summand classes, " +
                          std::to_string(r.vertices) + " vertices, dim Hom(P, P[1]) = " + std::to_string(r.hom_shift_plus) +
                          ", dim Hom(P, P[-1]) = " + std::to_string(r.hom_shift_minus)};
         return o;
       }},
      {"complex_length",
       [](Context& ctx, const Claim& c) {
         return Outcome{complex_length(ctx.complex(arg(c, "complex"))), "radical normal form"};
       }},
      {"end_dim",
       [](Context& ctx, const Claim& c) {
         return Outcome{ctx.iq(arg(c, "complex")).end.b()->dim(), "Hom in the homotopy category"};
       }},
      {"end_graph_class",
       [](Context& ctx, const Claim& c) {
         return Outcome{graph_string(ctx.iq(arg(c, "complex")).end.b()->quiver()), "quiver of End_K(P)"};
       }},
      {"end_matches",
       [](Context& ctx, const Claim& c) {
         auto b = ctx.algebra(arg(c, "algebra"));
         bool ok = match_hereditary(*ctx.iq(arg(c, "complex")).end.b(), *b).has_value();
         return Outcome{ok, "hereditary quiver isomorphism"};
       }},
      {"torsion_class",
       [](Context& ctx, const Claim& c) {
         const ProjComplex& p = ctx.complex(arg(c, "complex"));
         const ARQuiver& ar = ctx.ar(arg(c, "algebra"));
         Outcome o{sorted_dims(ar, torsion_pair(p, ar).torsion), "Hom(P, U[1]) = 0 on the AR quiver"};
         o.incomplete = !ar.complete;
         return o;
       }},
      {"torsion_free_class",
       [](Context& ctx, const Claim& c) {
         const ProjComplex& p = ctx.complex(arg(c, "complex"));
         const ARQuiver& ar = ctx.ar(arg(c, "algebra"));
         Outcome o{sorted_dims(ar, torsion_pair(p, ar).torsion_free), "Hom(P, U) = 0 on the AR quiver"};
         o.incomplete = !ar.complete;
         return o;
       }},
      {"torsion_split",
       [](Context& ctx, const Claim& c) {
         const ProjComplex& p = ctx.complex(arg(c, "complex"));
         const ARQuiver& ar = ctx.ar(arg(c, "algebra"));
         auto tp = torsion_pair(p, ar);
         std::string cert = tp.split == Tri::No
                                ? std::to_string(tp.neither.size()) + " indecomposables outside T and F, e.g. " +
                                      ar.nodes[tp.neither.front()].module.dim_vector_string()
                                : "every indecomposable in T or F";
         Outcome o{to_string(tp.split), tp.partial && tp.split != Tri::No ? "partial AR quiver" : cert};
         o.incomplete = tp.split == Tri::Unknown;
         return o;
       }},
      {"induced_q",
       [](Context& ctx, const Claim& c) {
         const InducedQ& iq = ctx.iq(arg(c, "complex"));
         std::string qn = arg(c, "expected");
         const ProjComplex& want = ctx.complex(qn);
         auto m = match_hereditary(*iq.end.b(), *ctx.complex_algebra(qn));
         if (!m) return Outcome{false, "End_K(P) does not match the algebra of the expected complex"};
         bool iso = complexes_isomorphic(transport(iq.q, *m, want.alg), want, ctx.rng());
         return Outcome{iso, iso ? "chain isomorphism found" : "no chain isomorphism found"};
       }},
      {"f_id_bound",
       [](Context& ctx, const Claim& c) {
         const ARQuiver& ar = ctx.ar(arg(c, "algebra"));
         auto r = check_separating_splitting(ctx.complex(arg(c, "complex")), ar, nullptr, nullptr, ctx.cutoff(), ctx.rng());
         Outcome o{dim_value_json(r.f_id_bound), "injective coresolutions over F(P)"};
         o.incomplete = !ar.complete;
         return o;
       }},
      {"silting_theorem",
       [](Context& ctx, const Claim& c) {
         auto r = verify_silting_theorem(ctx.complex(arg(c, "complex")), ctx.algebra(arg(c, "algebra")), ctx.budget(),
                                         ctx.rng(), ctx.cutoff());
         Json v = {{"hypotheses", r.hypotheses},
                   {"failed_hypothesis", r.failed_hypothesis},
                   {"separating", to_string(r.sep.separating)},
                   {"splitting", to_string(r.sep.splitting)},
                   {"f_id_bound", r.sep.f_id_bound.str()},
                   {"ed_a", r.ed_a.str()},
                   {"ed_b", r.ed_b.str()},
                   {"ed_equal", to_string(r.ed_equal)},
                   {"theorem", to_string(r.theorem)}};
         return Outcome{v, "splitting via " + r.sep.splitting_source};
       }},
      {"derived_bound",
       [](Context& ctx, const Claim& c) {
         auto r = verify_derived_bound(ctx.algebra(arg(c, "algebra")), ctx.algebra(arg(c, "end")),
                                       ctx.complex(arg(c, "complex")), ctx.budget(), ctx.rng());
         std::string verdict = r.holds == Tri::No ? "fails"
                               : r.equality       ? "equality"
                               : r.strict         ? "strict"
                               : r.holds == Tri::Yes ? "holds"
                                                     : "unknown";
         Json v = {{"verdict", verdict}, {"ed_a", r.a.str()}, {"ed_b", r.b.str()}, {"length", r.length},
                   {"end_matches", r.end_matches}};
         Outcome o{v, r.str()};
         o.incomplete = r.holds == Tri::Unknown;
         return o;
       }},
      {"wrd_equals_ed",
       [](Context& ctx, const Claim& c) {
         const ARQuiver& ar = ctx.ar(arg(c, "algebra"));
         if (!ar.complete) {
           Outcome o{nullptr, "knitting incomplete"};
           o.incomplete = true;
           return o;
         }
         SearchBounds sb;
         int n = static_cast<int>(ar.nodes.size());
         int ed = ed_exhaustive(ar, n, sb, ctx.rng());
         int wrd = wrd_exhaustive(ar, n, sb, ctx.rng());
         Outcome o{{{"ed", ed}, {"wrd", wrd}, {"indecomposables", n}}, "exhaustive searches over the AR quiver"};
         o.pass = ed >= 0 && ed == wrd && (!c.expect.is_number_integer() || ed == c.expect.get<int>());
         return o;
       }},
  };
  return r;
}

bool matches(const Json& value, const Json& expect) {
  if (expect.is_object() && value.is_object()) {
    for (const auto& [k, v] : expect.items())
      if (!value.contains(k) || !matches(value[k], v)) return false;
    return true;
  }
  return value == expect;
}

}  // namespace

std::vector<std::string> verifier_names() {
  std::vector<std::string> out;
  for (const auto& [k, _] : registry()) out.push_back(k);
  return out;
}

FixtureRun run_manifest(const Manifest& m, const RunOptions& opt) {
  Context ctx(m, opt);
  FixtureRun run;
  run.id = m.id;
  run.field = ctx.field().name();
  run.seed = ctx.seed();
  run.budget = ctx.budget();
  for (const auto& c : m.claims) {
    ClaimResult r;
    r.claim = c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = registry().at(c.verifier)(ctx, c);
      r.value = o.value;
      r.certificate = o.certificate;
      bool ok = o.pass ? *o.pass : matches(o.value, c.expect);
      r.status = ok ? ClaimStatus::Pass : o.incomplete ? ClaimStatus::Budget : ClaimStatus::Fail;
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      r.status = ClaimStatus::Error;
      r.message = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    run.results.push_back(std::move(r));
  }
  return run;
}

}  // namespace extdim
