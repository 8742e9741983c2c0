#include "extdim/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace extdim {

namespace {

bool label_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '\'' || c >= 0x80;
}

class LineLexer {
 public:
  LineLexer(std::string_view s, int line) : s_(s), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  int col() {
    skip_ws();
    return static_cast<int>(pos_) + 1;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept(std::string_view t) {
    skip_ws();
    if (s_.substr(pos_, t.size()) == t) {
      pos_ += t.size();
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::string label(const char* what) {
    skip_ws();
    size_t b = pos_;
    while (pos_ < s_.size() && label_char(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail(std::string("expected ") + what);
    return std::string(s_.substr(b, pos_ - b));
  }
  std::string number() {
    skip_ws();
    size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (d == pos_) fail("expected denominator");
    }
    return std::string(s_.substr(b, pos_ - b));
  }
  bool digit_next() {
    char c = peek();
    return c >= '0' && c <= '9';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(line_, col(), msg); }
  [[noreturn]] void fail_at(int c, const std::string& msg) const { throw ParseError(line_, c, msg); }

 private:
  std::string_view s_;
  size_t pos_ = 0;
  int line_;
};

}  // namespace

FieldSpec parse_field(const std::string& s0) {
  std::string s;
  for (char c : s0)
    if (c != ' ' && c != '_') s += c;
  if (s == "Q" || s == "q") return FieldSpec{0};
  if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) {
    try {
      size_t used = 0;
      unsigned long p = std::stoul(s.substr(1), &used);
      if (used == s.size() - 1 && p < (1ul << 31) && is_prime(p)) return FieldSpec{static_cast<std::uint32_t>(p)};
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument("unknown field '" + s0 + "' (use Q or F<p> with p prime)");
}

AlgebraPtr parse_algebra(std::string_view text, std::optional<FieldSpec> field_override) {
  FieldSpec field{0};
  bool field_seen = false;
  Quiver q;
  std::vector<Relation> rels;
  std::vector<std::pair<int, int>> rel_pos;
  int line_no = 0;
  size_t start = 0;
  bool any = false;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    LineLexer lx(line, line_no);
    if (lx.at_end()) {
      if (end == text.size()) break;
      continue;
    }
    any = true;
    int kw_col = lx.col();
    std::string kw = lx.label("keyword");
    if (kw == "field") {
      if (field_seen) lx.fail_at(kw_col, "field declared twice");
      field_seen = true;
      int c = lx.col();
      std::string f = lx.label("field name");
      if (f == "F" && lx.digit_next()) f += lx.number();
      try {
        field = parse_field(f);
      } catch (const std::invalid_argument& e) {
        lx.fail_at(c, e.what());
      }
    } else if (kw == "vertex") {
      if (!q.arrows.empty()) lx.fail_at(kw_col, "vertices must be declared before arrows");
      if (lx.at_end()) lx.fail("expected vertex label");
      while (!lx.at_end()) {
        int c = lx.col();
        std::string v = lx.label("vertex label");
        if (q.vertex_index(v) >= 0) lx.fail_at(c, "duplicate vertex '" + v + "'");
        q.vertices.push_back(v);
      }
    } else if (kw == "arrow") {
      int c = lx.col();
      std::string a = lx.label("arrow label");
      if (q.arrow_index(a) >= 0 || q.vertex_index(a) >= 0) lx.fail_at(c, "duplicate label '" + a + "'");
      if (std::isdigit(static_cast<unsigned char>(a[0]))) lx.fail_at(c, "arrow labels must not start with a digit");
      lx.expect(':', "':'");
      int cs = lx.col();
      std::string s = lx.label("source vertex");
      if (!lx.accept("->")) lx.fail("expected '->'");
      int ct = lx.col();
      std::string t = lx.label("target vertex");
      int si = q.vertex_index(s), ti = q.vertex_index(t);
      if (si < 0) lx.fail_at(cs, "undeclared vertex '" + s + "'");
      if (ti < 0) lx.fail_at(ct, "undeclared vertex '" + t + "'");
      q.arrows.push_back({a, si, ti});
    } else if (kw == "rel") {
      Relation r;
      int sign = 1;
      if (lx.accept('-')) sign = -1;
      else lx.accept('+');
      int first_src = -1, first_tgt = -1;
      while (true) {
        int tc = lx.col();
        Scalar coef(sign);
        if (lx.digit_next()) {
          coef = coef * Scalar::parse(lx.number());
          lx.expect('*', "'*' after coefficient");
        }
        Word w;
        do {
          int ac = lx.col();
          std::string a = lx.label("arrow label");
          int ai = q.arrow_index(a);
          if (ai < 0) lx.fail_at(ac, "undeclared arrow '" + a + "'");
          if (!w.empty() && q.arrows[w.back()].tgt != q.arrows[ai].src)
            lx.fail_at(ac, "'" + a + "' does not start where the previous arrow ends");
          w.push_back(ai);
        } while (lx.accept('.'));
        if (w.size() < 2) lx.fail_at(tc, "relation term of length < 2");
        int s = q.arrows[w.front()].src, t = q.arrows[w.back()].tgt;
        if (first_src < 0) {
          first_src = s;
          first_tgt = t;
        } else if (s != first_src || t != first_tgt) {
          lx.fail_at(tc, "relation terms are not parallel");
        }
        r.push_back({coef, w});
        if (lx.at_end()) break;
        if (lx.accept('+')) sign = 1;
        else if (lx.accept('-')) sign = -1;
        else lx.fail("expected '+', '-' or end of line");
      }
      rels.push_back(std::move(r));
      rel_pos.emplace_back(line_no, kw_col);
    } else {
      lx.fail_at(kw_col, "unknown keyword '" + kw + "'");
    }
    if (!lx.at_end()) lx.fail("unexpected trailing input");
    if (end == text.size()) break;
  }
  if (!any) throw ParseError(1, 1, "empty algebra description");
  if (q.vertices.empty()) throw ParseError(line_no, 1, "no vertices declared");
  if (field_override) field = *field_override;
  try {
    return Algebra::from_relations(field, std::move(q), std::move(rels));
  } catch (const AlgebraError& e) {
    int l = rel_pos.empty() ? 1 : rel_pos.front().first;
    throw ParseError(l, 1, e.what());
  }
}

AlgebraPtr load_algebra(const std::string& path, std::optional<FieldSpec> field_override) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), field_override);
}

std::string to_dsl(const Algebra& a) {
  std::ostringstream os;
  os << "field " << (a.field().is_rational() ? std::string("Q") : "F " + std::to_string(a.field().p)) << "\n";
  os << "vertex";
  for (const auto& v : a.quiver().vertices) os << " " << v;
  os << "\n";
  for (const auto& ar : a.quiver().arrows)
    os << "arrow " << ar.label << " : " << a.quiver().vertices[ar.src] << " -> " << a.quiver().vertices[ar.tgt] << "\n";
  for (const auto& r : a.relations()) {
    os << "rel";
    bool first = true;
    for (const auto& t : r) {
      Scalar c = t.coef;
      bool neg = !c.is_residue() && c.to_mpq() < 0;
      if (neg) c = -c;
      os << (first ? (neg ? " -" : " ") : (neg ? " - " : " + "));
      if (!c.is_one()) os << c.str() << "*";
      os << a.word_string(t.word, 0);
      first = false;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace extdim
