#include "orbiklt/document.hpp"

#include <cctype>
#include <charconv>
#include <set>

#include "orbiklt/errors.hpp"

namespace orbiklt {

namespace {

using nlohmann::json;

class Parser {
 public:
  Parser(std::string_view text, Document& doc) : text_(text), doc_(doc) {}

  void parse() {
    while (true) {
      skip_space(true);
      if (at_end()) return;
      const int line = line_;
      const std::string key = identifier();
      skip_space(false);
      expect('=');
      if (doc_.root.contains(key)) fail("duplicate key '" + key + "'", line);
      doc_.root[key] = value(key);
      skip_space(false);
      if (!at_end() && peek() != '\n') fail("expected end of line after value of '" + key + "'");
    }
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char next() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      line_start_ = pos_;
    }
    return c;
  }

  [[noreturn]] void fail(const std::string& msg, int line = -1) const {
    const int l = line < 0 ? line_ : line;
    const auto col = line < 0 ? pos_ - line_start_ + 1 : 1;
    throw ParseError("line " + std::to_string(l) + ", column " + std::to_string(col) + ": " + msg);
  }

  // Skips blanks and comments; newlines only when `newlines` is set.
  void skip_space(bool newlines) {
    while (!at_end()) {
      const char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') next();
      } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        next();
      } else {
        return;
      }
    }
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    next();
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) next();
    if (start == pos_) fail("expected a key");
    return std::string(text_.substr(start, pos_ - start));
  }

  json value(const std::string& path) {
    skip_space(true);
    if (at_end()) fail("missing value for '" + path + "'");
    doc_.lines[path] = line_;
    const char c = peek();
    if (c == '[') return list(path);
    if (c == '{') return map(path);
    if (c == '"') return string();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return integer();
    const std::string word = identifier();
    if (word == "true") return true;
    if (word == "false") return false;
    fail("unexpected token '" + word + "'");
  }

  json integer() {
    const std::size_t start = pos_;
    if (peek() == '-') next();
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) next();
    if (!at_end() && (peek() == '.' || peek() == 'e' || peek() == 'E')) {
      fail("float literals are not accepted; use exact integers");
    }
    const std::string_view digits = text_.substr(start, pos_ - start);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) fail("bad integer '" + std::string(digits) + "'");
    return v;
  }

  json string() {
    expect('"');
    std::string out;
    while (true) {
      if (at_end() || peek() == '\n') fail("unterminated string");
      char c = next();
      if (c == '"') break;
      if (c == '\\') {
        if (at_end()) fail("unterminated string");
        c = next();
        if (c != '"' && c != '\\') fail("unsupported escape");
      }
      out += c;
    }
    return out;
  }

  json list(const std::string& path) {
    expect('[');
    json out = json::array();
    while (true) {
      skip_space(true);
      if (!at_end() && peek() == ']') break;
      out.push_back(value(path + "[" + std::to_string(out.size()) + "]"));
      skip_space(true);
      if (!at_end() && peek() == ',') {
        next();
        continue;
      }
      break;
    }
    expect(']');
    return out;
  }

  json map(const std::string& path) {
    expect('{');
    json out = json::object();
    while (true) {
      skip_space(true);
      if (!at_end() && peek() == '}') break;
      const std::string key = !at_end() && peek() == '"' ? string().get<std::string>() : identifier();
      skip_space(true);
      expect(':');
      if (out.contains(key)) fail("duplicate key '" + key + "' in " + path);
      out[key] = value(path + "." + key);
      skip_space(true);
      if (!at_end() && peek() == ',') {
        next();
        continue;
      }
      break;
    }
    expect('}');
    return out;
  }

  std::string_view text_;
  Document& doc_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::size_t line_start_ = 0;
};

// Typed access with path-qualified diagnostics.
class Reader {
 public:
  explicit Reader(const Document& doc) : doc_(doc) {}

  [[noreturn]] void fail(const std::string& path, const std::string& msg) const {
    throw ParseError(doc_.where(path) + ": " + msg);
  }

  std::int64_t integer(const json& v, const std::string& path, std::int64_t min) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < min) fail(path, "expected an integer >= " + std::to_string(min) + ", got " + std::to_string(x));
    return x;
  }

  const json& array(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected a list");
    return v;
  }

  const json& object(const json& v, const std::string& path, std::set<std::string> allowed) const {
    if (!v.is_object()) fail(path, "expected a map");
    for (const auto& [k, _] : v.items()) {
      if (!allowed.count(k)) fail(path, "unknown field '" + k + "'");
    }
    return v;
  }

  const json& field(const json& obj, const std::string& path, const std::string& key) const {
    if (!obj.contains(key)) fail(path, "missing field '" + key + "'");
    return obj.at(key);
  }

  void only_keys(std::set<std::string> allowed) const {
    for (const auto& [k, _] : doc_.root.items()) {
      if (!allowed.count(k)) throw ParseError(doc_.where(k) + ": unknown key '" + k + "'");
    }
  }

 private:
  const Document& doc_;
};

}  // namespace

std::string Document::where(const std::string& path) const {
  const auto it = lines.find(path);
  if (it == lines.end()) return path;
  return "line " + std::to_string(it->second) + ": " + path;
}

Document parse_document(std::string_view text) {
  Document doc;
  Parser(text, doc).parse();
  return doc;
}

DualGraph graph_from_document(const Document& doc) {
  Reader rd(doc);
  rd.only_keys({"vertices", "edges", "branches"});
  if (!doc.root.contains("vertices")) throw ParseError("missing key 'vertices'");

  std::vector<WhiteVertex> vertices;
  const auto& vs = rd.array(doc.root["vertices"], "vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    vertices.push_back({rd.integer(vs[i], "vertices[" + std::to_string(i) + "]", 1)});
  }
  if (vertices.empty()) rd.fail("vertices", "needs at least one vertex");
  const auto n = static_cast<std::int64_t>(vertices.size());

  std::vector<Edge> edges;
  if (doc.root.contains("edges")) {
    const auto& es = rd.array(doc.root["edges"], "edges");
    for (std::size_t k = 0; k < es.size(); ++k) {
      const std::string path = "edges[" + std::to_string(k) + "]";
      const auto& e = rd.array(es[k], path);
      if (e.size() != 2) rd.fail(path, "an edge is a pair [i, j]");
      const auto i = rd.integer(e[0], path + "[0]", 0);
      const auto j = rd.integer(e[1], path + "[1]", 0);
      if (i >= n || j >= n) rd.fail(path, "vertex index out of range");
      if (i == j) rd.fail(path, "self-loop");
      edges.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }

  std::vector<BranchAttachment> branches;
  if (doc.root.contains("branches")) {
    const auto& bs = rd.array(doc.root["branches"], "branches");
    for (std::size_t k = 0; k < bs.size(); ++k) {
      const std::string path = "branches[" + std::to_string(k) + "]";
      const auto& b = rd.object(bs[k], path, {"vertex", "mult", "inter"});
      const auto v = rd.integer(rd.field(b, path, "vertex"), path + ".vertex", 0);
      if (v >= n) rd.fail(path + ".vertex", "vertex index out of range");
      const auto m = rd.integer(rd.field(b, path, "mult"), path + ".mult", 2);
      const auto inter = b.contains("inter") ? rd.integer(b["inter"], path + ".inter", 1) : 1;
      branches.push_back({static_cast<std::size_t>(v), Multiplicity(m), inter});
    }
  }
  try {
    return DualGraph(std::move(vertices), std::move(edges), std::move(branches));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

GermConfig germ_from_document(const Document& doc) {
  Reader rd(doc);
  rd.only_keys({"branches", "contact"});
  std::vector<GermBranch> branches;
  if (doc.root.contains("branches")) {
    const auto& bs = rd.array(doc.root["branches"], "branches");
    for (std::size_t k = 0; k < bs.size(); ++k) {
      const std::string path = "branches[" + std::to_string(k) + "]";
      const auto& b = rd.object(bs[k], path, {"kind", "p", "q", "mult"});
      const auto& kind = rd.field(b, path, "kind");
      if (!kind.is_string()) rd.fail(path + ".kind", "expected \"smooth\" or \"cusp\"");
      const auto m = rd.integer(rd.field(b, path, "mult"), path + ".mult", 2);
      if (kind == "smooth") {
        if (b.contains("p") || b.contains("q")) rd.fail(path, "a smooth branch takes no p, q");
        branches.push_back(GermBranch::smooth(m));
      } else if (kind == "cusp") {
        const auto p = rd.integer(rd.field(b, path, "p"), path + ".p", 2);
        const auto q = rd.integer(rd.field(b, path, "q"), path + ".q", 2);
        branches.push_back(GermBranch::cusp(p, q, m));
      } else {
        rd.fail(path + ".kind", "expected \"smooth\" or \"cusp\"");
      }
    }
  }
  std::vector<Contact> contacts;
  if (doc.root.contains("contact")) {
    const auto& cs = rd.array(doc.root["contact"], "contact");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const std::string path = "contact[" + std::to_string(k) + "]";
      const auto& c = rd.array(cs[k], path);
      if (c.size() != 3) rd.fail(path, "a contact is a triple [i, j, t]");
      const auto i = rd.integer(c[0], path + "[0]", 0);
      const auto j = rd.integer(c[1], path + "[1]", 0);
      const auto t = rd.integer(c[2], path + "[2]", 1);
      contacts.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), t});
    }
  }
  try {
    return GermConfig(std::move(branches), contacts);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid germ: ") + e.what());
  }
}

FibrationData fibration_from_document(const Document& doc) {
  Reader rd(doc);
  rd.only_keys({"baseGenus", "fibers"});
  FibrationData f;
  if (!doc.root.contains("baseGenus")) throw ParseError("missing key 'baseGenus'");
  f.base_genus = rd.integer(doc.root["baseGenus"], "baseGenus", 0);
  if (doc.root.contains("fibers")) {
    const auto& fs = rd.array(doc.root["fibers"], "fibers");
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const std::string path = "fibers[" + std::to_string(k) + "]";
      const auto& fb = rd.object(fs[k], path, {"point", "components"});
      const auto& point = rd.field(fb, path, "point");
      if (!point.is_string()) rd.fail(path + ".point", "expected a string label");
      const auto label = point.get<std::string>();
      if (f.marked_fibers.count(label)) rd.fail(path + ".point", "duplicate point '" + label + "'");
      const auto& comps = rd.array(rd.field(fb, path, "components"), path + ".components");
      if (comps.empty()) rd.fail(path + ".components", "a fiber needs at least one component");
      FiberData data;
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const std::string cpath = path + ".components[" + std::to_string(c) + "]";
        const auto& pair = rd.array(comps[c], cpath);
        if (pair.size() != 2) rd.fail(cpath, "a component is a pair [m, orbMult]");
        data.components.push_back(
            {rd.integer(pair[0], cpath + "[0]", 1), Multiplicity(rd.integer(pair[1], cpath + "[1]", 1))});
      }
      f.marked_fibers.emplace(label, std::move(data));
    }
  }
  return f;
}

}  // namespace orbiklt
