#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>

#include "extdim/dsl.hpp"
#include "extdim/manifest.hpp"

using namespace extdim;

namespace {

constexpr int kPass = 0, kClaimFailure = 1, kInputError = 2, kBudget = 3;

struct Globals {
  bool json = false;
  bool strict = false;
  std::optional<std::uint64_t> seed;
  std::optional<int> budget_dim, budget_steps;
  std::string field;
  std::string fixtures = EXTDIM_FIXTURES_DIR;

  std::optional<FieldSpec> field_spec() const {
    if (field.empty()) return std::nullopt;
    try {
      return parse_field(field);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  KnitBudget budget() const {
    KnitBudget b;
    if (budget_dim) b.max_dim = *budget_dim;
    if (budget_steps) b.max_steps = *budget_steps;
    return b;
  }
  std::mt19937_64 rng() const { return std::mt19937_64(seed.value_or(0)); }
};

struct Loaded {
  AlgebraPtr alg;
  AlgebraRef ref;
};

// A file path, or "beilinson:<n>".
Loaded load_alg(const std::string& spec, const Globals& g) {
  Loaded l;
  std::string text;
  if (spec.rfind("beilinson:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(spec.substr(10));
    } catch (const std::exception&) {
      throw InputError("beilinson:<n> needs an integer");
    }
    text = beilinson_dsl(n);
    l.ref.path = spec;
  } else {
    text = read_file(spec);
    l.ref.path = spec;
  }
  l.ref.hash = content_hash(text);
  try {
    l.alg = parse_algebra(text, g.field_spec());
  } catch (const ParseError& e) {
    throw InputError(spec + ":" + e.what());
  } catch (const AlgebraError& e) {
    throw InputError(spec + ": " + e.what());
  }
  return l;
}

struct LoadedComplex {
  Loaded alg;
  ProjComplex x;
  std::string warning;
};

// The complex names its algebra (path relative to the complex file, plus hash);
// `algebra` overrides it.
LoadedComplex load_complex(const std::string& path, const std::string& algebra, const Globals& g) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  LoadedComplex lc;
  if (!algebra.empty()) {
    lc.alg = load_alg(algebra, g);
  } else {
    if (!j.contains("algebra") || !j["algebra"].contains("path")) throw InputError(path + ": no algebra reference; use --algebra");
    std::string p = (std::filesystem::path(path).parent_path() / j["algebra"]["path"].get<std::string>()).string();
    lc.alg = load_alg(p, g);
    std::string want = j["algebra"].value("fnv1a", "");
    if (!want.empty() && want != lc.alg.ref.hash) throw InputError(path + ": algebra " + p + " does not match its recorded hash");
  }
  try {
    lc.x = normalize_loaded(complex_from_json(j, lc.alg.alg), &lc.warning);
  } catch (const Json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (!lc.warning.empty()) std::cerr << "warning: " << lc.warning << "\n";
  return lc;
}

void emit(const Globals& g, const Json& j, const std::string& text) {
  if (g.json) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

Json claim_meta(const Globals& g, const std::string& certificate) {
  KnitBudget b = g.budget();
  return {{"certificate", certificate}, {"budget", {{"dim", b.max_dim}, {"steps", b.max_steps}}}, {"seed", g.seed.value_or(0)}};
}

std::string components_string(const Quiver& q) {
  std::string s;
  for (const auto& c : classify_components(q)) s += (s.empty() ? "" : " + ") + c.str();
  return s;
}

std::string dims_list(const ARQuiver& ar, const std::vector<int>& idx) {
  std::string s;
  for (int i : idx) s += (s.empty() ? "" : " ") + ar.nodes[i].module.dim_vector_string();
  return s.empty() ? "(none)" : s;
}

int cmd_info(const Globals& g, const std::string& file) {
  Loaded l = load_alg(file, g);
  const Algebra& a = *l.alg;
  Json j = algebra_json(a);
  j["source"] = ref_json(l.ref);
  j["graph"] = components_string(a.quiver());
  j["hereditary"] = a.is_hereditary_path_algebra();
  std::ostringstream os;
  os << "field        " << a.field().name() << "\n";
  os << "vertices     " << a.num_vertices() << "\n";
  os << "arrows       " << a.num_arrows() << "\n";
  os << "dimension    " << a.dim() << "\n";
  os << "loewy length " << a.loewy_length() << "\n";
  os << "graph        " << components_string(a.quiver()) << (a.is_hereditary_path_algebra() ? " (hereditary)" : "") << "\n";
  os << "basis       ";
  for (int i = 0; i < a.dim(); ++i) os << " " << a.basis_string(i);
  os << "\n";
  emit(g, j, os.str());
  return kPass;
}

int cmd_ar(const Globals& g, const std::string& file, const std::string& dot) {
  Loaded l = load_alg(file, g);
  auto rng = g.rng();
  ARQuiver ar = knit(l.alg, g.budget(), rng);
  Json j = ar_json(ar, rng);
  j["meta"] = claim_meta(g, ar.complete ? "knitting finished" : "knitting stopped: " + ar.stop_reason);
  std::ostringstream os;
  os << (ar.complete ? "complete" : "partial (" + ar.stop_reason + ")") << ", " << ar.nodes.size() << " indecomposables\n";
  for (size_t i = 0; i < ar.nodes.size(); ++i) {
    const ARNode& n = ar.nodes[i];
    os << "  " << i << "  " << n.module.dim_vector_string() << (n.projective ? "  P" : "") << (n.injective ? "  I" : "");
    if (n.tau >= 0) os << "  tau=" << n.tau;
    os << "\n";
  }
  if (!dot.empty()) {
    std::ofstream out(dot);
    if (!out) throw InputError("cannot write " + dot);
    out << ar_dot(ar, rng);
  }
  emit(g, j, os.str());
  return ar.complete ? kPass : kBudget;
}

int cmd_dims(const Globals& g, const std::string& file, const std::string& module, int cutoff) {
  Loaded l = load_alg(file, g);
  auto rng = g.rng();
  AlgebraPtr a = l.alg;
  Json j;
  std::ostringstream os;
  bool unknown = false;
  auto row = [&](const std::string& name, const DimValue& d) {
    unknown = unknown || d.is_unknown();
    os << "  " << name << " = " << d.str();
    if (d.is_infinite()) os << "  (Omega^" << d.period_from << " ~ Omega^" << d.period_to << ")";
    os << "\n";
  };
  if (!module.empty()) {
    Json mj;
    try {
      mj = Json::parse(read_file(module));
    } catch (const Json::parse_error& e) {
      throw InputError(module + ": " + e.what());
    }
    std::string want = mj.contains("algebra") ? mj["algebra"].value("fnv1a", "") : "";
    if (!want.empty() && want != l.ref.hash) throw InputError(module + ": recorded algebra hash does not match " + file);
    Rep m = module_from_json(mj, a);
    DimValue pd = proj_dim(m, cutoff, rng), id = inj_dim(m, cutoff, rng);
    j["module"] = {{"dims", m.dims}, {"proj_dim", dim_value_json(pd)}, {"inj_dim", dim_value_json(id)},
                   {"loewy_length", loewy_length(m)}};
    os << "module " << m.dim_vector_string() << "\n";
    row("pd", pd);
    row("id", id);
  } else {
    DimValue gd = global_dim(a, cutoff, rng);
    j["global_dim"] = dim_value_json(gd);
    j["loewy_length"] = a->loewy_length();
    os << "loewy length = " << a->loewy_length() << "\n";
    row("gl.dim", gd);
    Json simples = Json::array();
    for (int i = 0; i < a->num_vertices(); ++i) {
      Rep s = simple(a, i);
      DimValue pd = proj_dim(s, cutoff, rng), id = inj_dim(s, cutoff, rng);
      simples.push_back({{"vertex", a->quiver().vertices[i]}, {"proj_dim", dim_value_json(pd)}, {"inj_dim", dim_value_json(id)}});
      row("pd S(" + a->quiver().vertices[i] + ")", pd);
      row("id S(" + a->quiver().vertices[i] + ")", id);
    }
    j["simples"] = simples;
    Json nodes = Json::array();
    for (const auto& n : find_nodes(a, rng))
      if (n.is_node()) nodes.push_back(a->quiver().vertices[n.vertex]);
    j["nodes"] = nodes;
    os << "nodes: " << (nodes.empty() ? std::string("(none)") : nodes.dump()) << "\n";
  }
  j["meta"] = claim_meta(g, "minimal resolutions, cutoff " + std::to_string(cutoff));
  emit(g, j, os.str());
  return unknown ? kBudget : kPass;
}

int cmd_silting(const Globals& g, const std::string& file, const std::string& algebra, const std::string& write_q) {
  LoadedComplex lc = load_complex(file, algebra, g);
  auto rng = g.rng();
  SiltingReport r = silting_report(lc.x, rng);
  Json j = {{"two_term", r.two_term}, {"presilting", r.presilting}, {"silting", r.silting}, {"tilting", r.tilting},
            {"hom_shift_plus", r.hom_shift_plus}, {"hom_shift_minus", r.hom_shift_minus},
            {"summand_classes", r.summand_classes}, {"vertices", r.vertices}, {"length", complex_length(lc.x)}};
  std::ostringstream os;
  os << std::boolalpha << "two-term " << r.two_term << ", presilting " << r.presilting << ", silting " << r.silting << ", tilting "
     << r.tilting << "\n";
  os << "dim Hom(P, P[1]) = " << r.hom_shift_plus << ", dim Hom(P, P[-1]) = " << r.hom_shift_minus << "\n";
  os << "summand classes " << r.summand_classes << " / vertices " << r.vertices << "  (" << r.criterion << ")\n";
  os << "length " << complex_length(lc.x) << "\n";
  if (r.silting) {
    InducedQ iq = induced_q(lc.x, rng);
    AlgebraPtr b = iq.end.b();
    j["end"] = algebra_json(*b);
    j["end"]["graph"] = components_string(b->quiver());
    j["induced_q"] = complex_json(iq.q, AlgebraRef{"(End_K(P))", content_hash(to_dsl(*b))});
    j["cone_in_add"] = iq.cone_in_add;
    os << "End_K(P): dim " << b->dim() << ", graph " << components_string(b->quiver()) << "\n";
    for (const auto& ar : b->quiver().arrows)
      os << "  " << ar.label << " : " << b->quiver().vertices[ar.src] << " -> " << b->quiver().vertices[ar.tgt] << "\n";
    os << "Q over End_K(P):";
    for (int d = iq.q.lo; d <= iq.q.hi(); ++d) {
      os << "  deg " << d << ":";
      for (int v : iq.q.term(d)) os << " P(" << b->quiver().vertices[v] << ")";
    }
    os << "\n";
    if (!write_q.empty()) {
      std::ofstream out(write_q);
      if (!out) throw InputError("cannot write " + write_q);
      out << to_dsl(*b);
      std::ofstream outq(write_q + ".json");
      outq << complex_json(iq.q, AlgebraRef{std::filesystem::path(write_q).filename().string(), content_hash(to_dsl(*b))}).dump(1)
           << "\n";
    }
  }
  j["meta"] = claim_meta(g, r.criterion);
  emit(g, j, os.str());
  return kPass;
}

int cmd_torsion(const Globals& g, const std::string& file, const std::string& algebra) {
  LoadedComplex lc = load_complex(file, algebra, g);
  auto rng = g.rng();
  ARQuiver ar = knit(lc.alg.alg, g.budget(), rng);
  TorsionPairReport tp = torsion_pair(lc.x, ar);
  auto dims = [&](const std::vector<int>& idx) {
    Json a = Json::array();
    for (int i : idx) a.push_back(ar.nodes[i].module.dims);
    return a;
  };
  Json j = {{"torsion", dims(tp.torsion)}, {"torsion_free", dims(tp.torsion_free)}, {"neither", dims(tp.neither)},
            {"split", to_string(tp.split)}, {"partial", tp.partial}};
  j["meta"] = claim_meta(g, tp.partial ? "partial AR quiver: " + ar.stop_reason : "complete AR quiver");
  std::ostringstream os;
  os << "T: " << dims_list(ar, tp.torsion) << "\n";
  os << "F: " << dims_list(ar, tp.torsion_free) << "\n";
  os << "neither: " << dims_list(ar, tp.neither) << "\n";
  os << "split: " << to_string(tp.split) << (tp.partial ? " (partial AR quiver)" : "") << "\n";
  emit(g, j, os.str());
  return tp.split == Tri::Unknown ? kBudget : kPass;
}

int cmd_ed(const Globals& g, const std::string& file, int cutoff, bool exhaustive) {
  Loaded l = load_alg(file, g);
  auto rng = g.rng();
  ARQuiver ar;
  EdBounds e = ed_bounds(l.alg, g.budget(), rng, cutoff, &ar);
  Json j = ed_bounds_json(e);
  std::ostringstream os;
  os << "ed in " << e.str() << "\n  lower: " << e.lower_certificate << "\n  upper: " << e.upper_certificate << "\n";
  for (const auto& [name, v] : e.candidates) os << "    " << name << ": " << v.str() << "\n";
  if (exhaustive) {
    if (l.alg->field().is_rational()) throw InputError("--exhaustive needs a finite field (use --field F2)");
    if (!ar.complete) ar = knit(l.alg, g.budget(), rng);
    if (ar.complete) {
      int n = static_cast<int>(ar.nodes.size());
      int ed = ed_exhaustive(ar, n, SearchBounds{}, rng), wrd = wrd_exhaustive(ar, n, SearchBounds{}, rng);
      j["exhaustive"] = {{"ed", ed}, {"wrd", wrd}};
      os << "exhaustive: ed = " << ed << ", wrd = " << wrd << "\n";
    } else {
      j["exhaustive"] = nullptr;
      os << "exhaustive: AR quiver incomplete\n";
    }
  }
  j["meta"] = claim_meta(g, e.lower_certificate + "; " + e.upper_certificate);
  emit(g, j, os.str());
  return e.exact() || ar.complete ? kPass : kBudget;
}

std::string resolve_manifest(const Globals& g, const std::string& target) {
  if (std::filesystem::exists(target) && std::filesystem::is_regular_file(target)) return target;
  std::string p = (std::filesystem::path(g.fixtures) / "manifests" / (target + ".json")).string();
  if (!std::filesystem::exists(p)) throw InputError("no fixture '" + target + "' (looked for " + p + ")");
  return p;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& targets) {
  std::vector<std::string> paths;
  for (const auto& t : targets) {
    if (t == "all") {
      auto all = manifest_paths((std::filesystem::path(g.fixtures) / "manifests").string());
      paths.insert(paths.end(), all.begin(), all.end());
    } else {
      paths.push_back(resolve_manifest(g, t));
    }
  }
  std::vector<Manifest> ms;
  for (const auto& p : paths) ms.push_back(load_manifest(p));
  RunOptions opt;
  opt.field = g.field_spec();
  opt.seed = g.seed;
  opt.budget_dim = g.budget_dim;
  opt.budget_steps = g.budget_steps;
  std::vector<std::future<FixtureRun>> jobs;
  for (const auto& m : ms) jobs.push_back(std::async(std::launch::async, [&m, &opt] { return run_manifest(m, opt); }));
  Json out = Json::array();
  int fail = 0, budget = 0;
  std::ostringstream os;
  for (auto& job : jobs) {
    FixtureRun r = job.get();
    out.push_back(r.json());
    os << r.id << " (" << r.field << ", seed " << r.seed << ")\n";
    for (const auto& c : r.results) {
      os << "  [" << to_string(c.status) << "] " << c.claim.id;
      if (!c.claim.anchor.empty()) os << "  -- " << c.claim.anchor;
      os << "\n";
      if (c.status != ClaimStatus::Pass)
        os << "      expected " << c.claim.expect.dump() << ", got " << c.value.dump()
           << (c.message.empty() ? "" : " (" + c.message + ")") << "\n";
    }
    fail += r.count(ClaimStatus::Fail) + r.count(ClaimStatus::Error);
    budget += r.count(ClaimStatus::Budget);
    os << "  " << r.count(ClaimStatus::Pass) << "/" << r.results.size() << " claims pass\n";
  }
  emit(g, out, os.str());
  if (!g.strict) return kPass;
  if (fail) return kClaimFailure;
  return budget ? kBudget : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for bound quiver algebras: AR quivers, silting complexes, extension dimension"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--strict", g.strict, "nonzero exit on failed claims");
  app.add_option("--seed", g.seed, "seed for randomized subroutines (default 0, or the manifest's)");
  app.add_option("--budget-dim", g.budget_dim, "max total dimension of knitted modules");
  app.add_option("--budget-steps", g.budget_steps, "max knitting steps");
  app.add_option("--field", g.field, "Q or F<p>; overrides the declared field");
  app.add_option("--fixtures", g.fixtures, "fixture directory")->envname("EXTDIM_FIXTURES");

  std::string file, algebra, module, dot, write_q;
  int cutoff = 12;
  bool exhaustive = false;
  std::vector<std::string> targets;

  auto* info = app.add_subcommand("info", "dimension, basis, Loewy length, graph type");
  info->add_option("algebra", file, "algebra file or beilinson:<n>")->required();
  auto* ar = app.add_subcommand("ar", "knit the Auslander-Reiten quiver");
  ar->add_option("algebra", file, "algebra file or beilinson:<n>")->required();
  ar->add_option("--dot", dot, "write a Graphviz file");
  auto* dims = app.add_subcommand("dims", "projective, injective and global dimensions; nodes");
  dims->add_option("algebra", file, "algebra file or beilinson:<n>")->required();
  dims->add_option("--module", module, "module JSON file");
  dims->add_option("--cutoff", cutoff, "resolution length cutoff");
  auto* silt = app.add_subcommand("silting", "silting test, End_K(P) and the induced complex over it");
  silt->add_option("complex", file, "complex JSON file")->required();
  silt->add_option("--algebra", algebra, "algebra file (default: the one named in the complex)");
  silt->add_option("--write-q", write_q, "write End_K(P) to FILE and the induced complex to FILE.json");
  auto* tors = app.add_subcommand("torsion", "torsion pair induced by a 2-term complex");
  tors->add_option("complex", file, "complex JSON file")->required();
  tors->add_option("--algebra", algebra, "algebra file (default: the one named in the complex)");
  auto* ed = app.add_subcommand("ed", "bounds for the extension dimension");
  ed->add_option("algebra", file, "algebra file or beilinson:<n>")->required();
  ed->add_option("--cutoff", cutoff, "resolution length cutoff");
  ed->add_flag("--exhaustive", exhaustive, "exhaustive ed and wrd over a finite field");
  auto* verify = app.add_subcommand("verify", "check the claims of fixture manifests");
  verify->add_option("fixture", targets, "fixture id, manifest path, or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kInputError;
  }

  try {
    if (*info) return cmd_info(g, file);
    if (*ar) return cmd_ar(g, file, dot);
    if (*dims) return cmd_dims(g, file, module, cutoff);
    if (*silt) return cmd_silting(g, file, algebra, write_q);
    if (*tors) return cmd_torsion(g, file, algebra);
    if (*ed) return cmd_ed(g, file, cutoff, exhaustive);
    if (*verify) return cmd_verify(g, targets);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kClaimFailure;
  }
  return kPass;
}
