#include "extdim/io.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

namespace extdim {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json scalar_json(const Scalar& s) {
  if (s.is_residue()) return static_cast<long long>(s.residue_value());
  std::string t = s.str();
  if (t.find('/') == std::string::npos && t.size() < 18) return std::stoll(t);
  return t;
}

Scalar scalar_from_json(const Json& j, const FieldSpec& f) {
  Scalar s;
  if (j.is_number_integer()) s = Scalar::parse(std::to_string(j.get<long long>()));
  else if (j.is_string()) {
    try {
      std::string t = j.get<std::string>();
      if (!t.empty() && t[0] == '-') s = -Scalar::parse(t.substr(1));
      else s = Scalar::parse(t);
    } catch (const std::exception& e) {
      throw InputError(std::string("bad scalar: ") + e.what());
    }
  } else {
    throw InputError("scalar must be an integer or a string like \"3/4\"");
  }
  return s.in_field(f);
}

Json algebra_json(const Algebra& a) {
  const Quiver& q = a.quiver();
  Json j;
  j["field"] = a.field().name();
  j["vertices"] = q.vertices;
  Json arrows = Json::array();
  for (const auto& ar : q.arrows) arrows.push_back({{"label", ar.label}, {"src", q.vertices[ar.src]}, {"tgt", q.vertices[ar.tgt]}});
  j["arrows"] = arrows;
  Json basis = Json::array();
  for (const auto& b : a.basis()) {
    Json w = Json::array();
    for (int x : b.word) w.push_back(q.arrows[x].label);
    basis.push_back({{"src", q.vertices[b.src]}, {"tgt", q.vertices[b.tgt]}, {"path", w}});
  }
  j["basis"] = basis;
  Json table = Json::array();
  for (int x = 0; x < a.dim(); ++x)
    for (int y = 0; y < a.dim(); ++y)
      for (const auto& [k, c] : a.mult(x, y)) table.push_back({x, y, k, scalar_json(c)});
  j["table"] = table;
  j["dim"] = a.dim();
  j["loewy_length"] = a.loewy_length();
  return j;
}

Json ref_json(const AlgebraRef& r) { return {{"path", r.path}, {"fnv1a", r.hash}}; }

Json module_json(const Rep& m, const AlgebraRef& ref) {
  const Quiver& q = m.alg->quiver();
  Json j;
  j["algebra"] = ref_json(ref);
  j["dims"] = m.dims;
  Json arrows = Json::object();
  for (int a = 0; a < q.num_arrows(); ++a) {
    Json rows = Json::array();
    const Mat& x = m.arrows[a];
    for (int r = 0; r < x.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < x.cols(); ++c) row.push_back(scalar_json(x(r, c)));
      rows.push_back(row);
    }
    arrows[q.arrows[a].label] = rows;
  }
  j["arrows"] = arrows;
  return j;
}

Rep module_from_json(const Json& j, AlgebraPtr a) {
  const Quiver& q = a->quiver();
  if (!j.contains("dims") || !j["dims"].is_array()) throw InputError("module: missing \"dims\"");
  Rep m;
  m.alg = a;
  m.dims = j["dims"].get<std::vector<int>>();
  if (static_cast<int>(m.dims.size()) != q.num_vertices()) throw InputError("module: dimension vector has wrong length");
  for (int d : m.dims)
    if (d < 0) throw InputError("module: negative dimension");
  const Json& arrows = j.value("arrows", Json::object());
  for (const auto& [label, _] : arrows.items())
    if (q.arrow_index(label) < 0) throw InputError("module: unknown arrow '" + label + "'");
  for (int x = 0; x < q.num_arrows(); ++x) {
    int rows = m.dims[q.arrows[x].tgt], cols = m.dims[q.arrows[x].src];
    Mat mat(rows, cols);
    if (arrows.contains(q.arrows[x].label)) {
      const Json& rj = arrows[q.arrows[x].label];
      bool empty_ok = rj.is_array() && rj.empty() && (rows == 0 || cols == 0);
      if (!empty_ok) {
        if (!rj.is_array() || static_cast<int>(rj.size()) != rows)
          throw InputError("module: arrow '" + q.arrows[x].label + "' needs " + std::to_string(rows) + " rows");
        for (int r = 0; r < rows; ++r) {
          if (!rj[r].is_array() || static_cast<int>(rj[r].size()) != cols)
            throw InputError("module: arrow '" + q.arrows[x].label + "' needs " + std::to_string(cols) + " columns");
          for (int c = 0; c < cols; ++c) mat(r, c) = scalar_from_json(rj[r][c], a->field());
        }
      }
    } else {
      mat = mat.in_field(a->field());
    }
    m.arrows.push_back(mat.in_field(a->field()));
  }
  std::string why;
  if (!m.is_valid(&why)) throw InputError("module violates the relations: " + why);
  return m;
}

namespace {

std::vector<std::string> basis_labels(const Algebra& a) {
  std::vector<std::string> out;
  for (int i = 0; i < a.dim(); ++i) out.push_back(a.basis_string(i));
  return out;
}

Vec entry_from_json(const Json& e, const Algebra& a, const std::map<std::string, int>& index) {
  Vec v(a.dim());
  for (auto& x : v) x = x.in_field(a.field());
  if (e.is_number_integer() && e.get<long long>() == 0) return v;
  if (e.is_array()) {
    if (static_cast<int>(e.size()) != a.dim())
      throw InputError("complex: coordinate array must have " + std::to_string(a.dim()) + " entries");
    for (int i = 0; i < a.dim(); ++i) v[i] = scalar_from_json(e[i], a.field());
    return v;
  }
  if (e.is_object()) {
    for (const auto& [path, c] : e.items()) {
      auto it = index.find(path);
      if (it == index.end()) throw InputError("complex: '" + path + "' is not a basis path");
      v[it->second] = scalar_from_json(c, a.field());
    }
    return v;
  }
  throw InputError("complex: an entry is a coordinate array, an object {path: coef}, or 0");
}

}  // namespace

Json complex_json(const ProjComplex& x, const AlgebraRef& ref) {
  const Algebra& a = *x.alg;
  Json j;
  j["algebra"] = ref_json(ref);
  j["basis"] = basis_labels(a);
  j["lo"] = x.lo;
  Json terms = Json::array();
  for (const auto& t : x.terms) {
    Json tj = Json::array();
    for (size_t i = 0; i < t.size();) {
      size_t k = i;
      while (k < t.size() && t[k] == t[i]) ++k;
      tj.push_back({a.quiver().vertices[t[i]], static_cast<int>(k - i)});
      i = k;
    }
    terms.push_back(tj);
  }
  j["terms"] = terms;
  Json ds = Json::array();
  for (const auto& d : x.d) {
    Json rows = Json::array();
    for (int r = 0; r < d.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < d.cols(); ++c) {
        const Vec& e = d.at(r, c);
        if (is_zero(e)) {
          row.push_back(0);
          continue;
        }
        Json ej = Json::array();
        for (const auto& s : e) ej.push_back(scalar_json(s));
        row.push_back(ej);
      }
      rows.push_back(row);
    }
    ds.push_back(rows);
  }
  j["differentials"] = ds;
  return j;
}

ProjComplex complex_from_json(const Json& j, AlgebraPtr a) {
  const Quiver& q = a->quiver();
  if (j.contains("basis") && j["basis"] != Json(basis_labels(*a)))
    throw InputError("complex: path basis does not match the algebra");
  ProjComplex x;
  x.alg = a;
  x.lo = j.value("lo", 0);
  if (!j.contains("terms") || !j["terms"].is_array() || j["terms"].empty()) throw InputError("complex: missing \"terms\"");
  for (const auto& tj : j["terms"]) {
    std::vector<int> t;
    for (const auto& item : tj) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_number_integer())
        throw InputError("complex: a term entry is [vertex label, multiplicity]");
      int v = q.vertex_index(item[0].get<std::string>());
      if (v < 0) throw InputError("complex: unknown vertex '" + item[0].get<std::string>() + "'");
      int mult = item[1].get<int>();
      if (mult < 0) throw InputError("complex: negative multiplicity");
      t.insert(t.end(), mult, v);
    }
    x.terms.push_back(t);
  }
  std::map<std::string, int> index;
  for (int i = 0; i < a->dim(); ++i) index[a->basis_string(i)] = i;
  const Json& ds = j.value("differentials", Json::array());
  if (ds.size() + 1 != x.terms.size()) throw InputError("complex: need one differential between consecutive terms");
  for (size_t k = 0; k < ds.size(); ++k) {
    ProjMatrix d = ProjMatrix::zero(*a, x.terms[k + 1], x.terms[k]);
    const Json& rows = ds[k];
    if (!rows.is_array() || static_cast<int>(rows.size()) != d.rows())
      throw InputError("complex: differential " + std::to_string(k) + " needs " + std::to_string(d.rows()) + " rows");
    for (int r = 0; r < d.rows(); ++r) {
      if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != d.cols())
        throw InputError("complex: differential " + std::to_string(k) + " needs " + std::to_string(d.cols()) + " columns");
      for (int c = 0; c < d.cols(); ++c) {
        Vec e = entry_from_json(rows[r][c], *a, index);
        int u = d.tgt[r], v = d.src[c];
        for (int b = 0; b < a->dim(); ++b)
          if (!e[b].is_zero() && (a->basis(b).src != u || a->basis(b).tgt != v))
            throw InputError("complex: entry (" + std::to_string(r) + ", " + std::to_string(c) + ") of differential " +
                             std::to_string(k) + " uses '" + a->basis_string(b) + "', not a path from " + q.vertices[u] +
                             " to " + q.vertices[v]);
        d.at(r, c) = e;
      }
    }
    x.d.push_back(d);
  }
  if (!x.is_complex()) throw InputError("complex: d o d != 0");
  return x;
}

ProjComplex normalize_loaded(const ProjComplex& x, std::string* warning) {
  ProjComplex r = radical_normal_form(x);
  if (warning) {
    warning->clear();
    if (r.total_rank() != x.total_rank() || r.lo != x.lo || r.terms.size() != x.terms.size())
      *warning = "complex was not radical; replaced by its radical normal form (" + std::to_string(x.total_rank()) +
                 " -> " + std::to_string(r.total_rank()) + " indecomposable projectives)";
  }
  return r;
}

Json dim_value_json(const DimValue& d) {
  Json j;
  switch (d.kind) {
    case DimValue::Kind::Finite:
      j["kind"] = "finite";
      j["value"] = d.value;
      break;
    case DimValue::Kind::Infinite:
      j["kind"] = "infinite";
      j["period"] = {d.period_from, d.period_to};
      break;
    case DimValue::Kind::Unknown:
      j["kind"] = "unknown";
      j["cutoff"] = d.cutoff;
      break;
  }
  if (!d.reason.empty()) j["certificate"] = d.reason;
  return j;
}

Json ed_bounds_json(const EdBounds& e) {
  Json j;
  j["interval"] = e.str();
  j["lower"] = e.lower;
  j["lower_certificate"] = e.lower_certificate;
  j["upper"] = dim_value_json(e.upper);
  j["upper_certificate"] = e.upper_certificate;
  Json c = Json::array();
  for (const auto& [name, v] : e.candidates) c.push_back({{"bound", name}, {"value", dim_value_json(v)}});
  j["candidates"] = c;
  return j;
}

Json ar_json(const ARQuiver& ar, std::mt19937_64& rng) {
  Json j;
  j["complete"] = ar.complete;
  j["steps"] = ar.steps;
  if (!ar.complete) j["stop_reason"] = ar.stop_reason;
  Json nodes = Json::array();
  for (size_t i = 0; i < ar.nodes.size(); ++i) {
    const ARNode& n = ar.nodes[i];
    Json nj = {{"id", i}, {"dims", n.module.dims}, {"projective", n.projective}, {"injective", n.injective}};
    if (n.tau >= 0) nj["tau"] = n.tau;
    if (n.tau_inv >= 0) nj["tau_inv"] = n.tau_inv;
    nodes.push_back(nj);
  }
  j["nodes"] = nodes;
  Json meshes = Json::array();
  for (const auto& m : ar.meshes) {
    Json mid = Json::array();
    for (auto [node, mult] : m.middle) mid.push_back({node, mult});
    meshes.push_back({{"start", m.start}, {"end", m.end}, {"middle", mid}});
  }
  j["meshes"] = meshes;
  Json arrows = Json::array();
  for (auto [f, t, mult] : ar.arrows(rng)) arrows.push_back({f, t, mult});
  j["irreducible_maps"] = arrows;
  return j;
}

std::string ar_dot(const ARQuiver& ar, std::mt19937_64& rng) {
  std::ostringstream os;
  os << "digraph ar {\n  rankdir=LR;\n";
  for (size_t i = 0; i < ar.nodes.size(); ++i) {
    const ARNode& n = ar.nodes[i];
    os << "  n" << i << " [label=\"" << n.module.dim_vector_string() << "\"";
    if (n.projective && n.injective) os << ", shape=doubleoctagon";
    else if (n.projective) os << ", shape=box";
    else if (n.injective) os << ", shape=diamond";
    os << "];\n";
  }
  for (auto [f, t, mult] : ar.arrows(rng)) {
    os << "  n" << f << " -> n" << t;
    if (mult > 1) os << " [label=\"" << mult << "\"]";
    os << ";\n";
  }
  for (size_t i = 0; i < ar.nodes.size(); ++i)
    if (ar.nodes[i].tau >= 0) os << "  n" << i << " -> n" << ar.nodes[i].tau << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace extdim
