#include "liftprop/dsl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

namespace liftprop::dsl {
namespace {

enum class Tok { kIdent, kLBrace, kRBrace, kComma, kRight, kLeft, kEq, kFat, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool is_ident_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '\'';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int l = line;
    const int cl = col;
    auto two = src.substr(i, 2);
    if (two == "->") {
      out.push_back({Tok::kRight, "->", l, cl});
      advance(2);
    } else if (two == "<-") {
      out.push_back({Tok::kLeft, "<-", l, cl});
      advance(2);
    } else if (two == "=>") {
      out.push_back({Tok::kFat, "=>", l, cl});
      advance(2);
    } else if (c == '=') {
      out.push_back({Tok::kEq, "=", l, cl});
      advance(1);
    } else if (c == '{') {
      out.push_back({Tok::kLBrace, "{", l, cl});
      advance(1);
    } else if (c == '}') {
      out.push_back({Tok::kRBrace, "}", l, cl});
      advance(1);
    } else if (c == ',') {
      out.push_back({Tok::kComma, ",", l, cl});
      advance(1);
    } else if (is_ident_char(c)) {
      std::size_t j = i;
      while (j < src.size() && is_ident_char(src[j])) ++j;
      out.push_back({Tok::kIdent, std::string(src.substr(i, j - i)), l, cl});
      advance(j - i);
    } else {
      throw SyntaxError(std::string("unexpected character '") + c + "'", l, cl);
    }
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

struct Chain {
  std::vector<std::string> idents;
  std::vector<Tok> links;  // links[k] joins idents[k] and idents[k + 1]
};

struct SpaceExpr {
  std::vector<Chain> chains;
  int line = 0;
  int column = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  SpaceExpr space() {
    SpaceExpr e;
    e.line = peek().line;
    e.column = peek().column;
    expect(Tok::kLBrace, "'{'");
    if (peek().kind != Tok::kRBrace) {
      e.chains.push_back(chain());
      while (peek().kind == Tok::kComma) {
        next();
        e.chains.push_back(chain());
      }
    }
    expect(Tok::kRBrace, "'}' or ','");
    return e;
  }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_end() const { return peek().kind == Tok::kEnd; }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(msg + ", found " + found, t.line, t.column);
  }

 private:
  Chain chain() {
    Chain c;
    c.idents.push_back(expect(Tok::kIdent, "identifier").text);
    while (peek().kind == Tok::kRight || peek().kind == Tok::kLeft || peek().kind == Tok::kEq) {
      c.links.push_back(next().kind);
      c.idents.push_back(expect(Tok::kIdent, "identifier").text);
    }
    return c;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Identifiers in first-mention order.
std::vector<std::string> mentioned(const SpaceExpr& e) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& c : e.chains) {
    for (const auto& id : c.idents) {
      if (seen.insert(id).second) out.push_back(id);
    }
  }
  return out;
}

FinSpace build_space(const SpaceExpr& e) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& c : e.chains) {
    for (std::size_t k = 0; k < c.links.size(); ++k) {
      const auto& a = c.idents[k];
      const auto& b = c.idents[k + 1];
      switch (c.links[k]) {
        case Tok::kRight: edges.emplace_back(a, b); break;
        case Tok::kLeft: edges.emplace_back(b, a); break;
        default:
          edges.emplace_back(a, b);
          edges.emplace_back(b, a);
      }
    }
  }
  return FinSpace::from_named(mentioned(e), edges);
}

CMap build_map(const SpaceExpr& dom_expr, const SpaceExpr& cod_expr) {
  auto dom = share(build_space(dom_expr));
  const auto labels = mentioned(cod_expr);
  std::unordered_map<std::string, std::size_t> label_index;
  for (std::size_t i = 0; i < labels.size(); ++i) label_index.emplace(labels[i], i);

  std::vector<std::size_t> parent(labels.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  for (const auto& c : cod_expr.chains) {
    for (std::size_t k = 0; k < c.links.size(); ++k) {
      const std::size_t a = label_index.at(c.idents[k]);
      const std::size_t b = label_index.at(c.idents[k + 1]);
      switch (c.links[k]) {
        case Tok::kRight: arrows.emplace_back(a, b); break;
        case Tok::kLeft: arrows.emplace_back(b, a); break;
        default: {
          // Keep the earlier-mentioned label as the class root.
          const std::size_t ra = find(a);
          const std::size_t rb = find(b);
          if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
      }
    }
  }

  std::vector<std::string> cod_points;
  std::vector<PointId> class_point(labels.size());
  std::unordered_map<std::size_t, PointId> root_point;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::size_t r = find(i);
    auto [it, fresh] = root_point.emplace(r, cod_points.size());
    if (fresh) cod_points.push_back(labels[r]);
    class_point[i] = it->second;
  }
  std::vector<std::pair<PointId, PointId>> cod_edges;
  for (auto [a, b] : arrows) cod_edges.emplace_back(class_point[a], class_point[b]);
  auto cod = share(FinSpace(std::move(cod_points), cod_edges));

  std::vector<PointId> assign(dom->size());
  for (PointId p = 0; p < dom->size(); ++p) {
    auto it = label_index.find(dom->name(p));
    if (it == label_index.end()) {
      throw SyntaxError("domain point '" + dom->name(p) + "' does not appear in the codomain",
                        cod_expr.line, cod_expr.column);
    }
    assign[p] = class_point[it->second];
  }
  return CMap(dom, cod, std::move(assign));
}

// --- rendering -------------------------------------------------------------

// Classes of mutually specializing points, in order of their lowest member.
std::vector<PointSet> indistinguishable_classes(const FinSpace& x) {
  std::vector<PointSet> out;
  PointSet seen;
  for (PointId p = 0; p < x.size(); ++p) {
    if (seen.contains(p)) continue;
    const PointSet cls = x.up(p) & x.down(p);
    seen |= cls;
    out.push_back(cls);
  }
  return out;
}

// Covering pairs between classes: x -> y strictly with nothing strictly in
// between. Returned as pairs of class indices, ordered by source then target.
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(
    const FinSpace& x, const std::vector<PointSet>& classes) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  auto rep = [&](std::size_t c) { return classes[c].lowest(); };
  auto strictly = [&](std::size_t a, std::size_t b) {
    return a != b && x.specializes(rep(a), rep(b));
  };
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = 0; b < classes.size(); ++b) {
      if (!strictly(a, b)) continue;
      bool covered = true;
      for (std::size_t m = 0; m < classes.size() && covered; ++m) {
        if (strictly(a, m) && strictly(m, b)) covered = false;
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  return out;
}

// Joins node labels into chains. labels[n] is printed in full on the first
// mention of node n and as its first label afterwards.
std::string chains_text(const std::vector<std::vector<std::string>>& labels,
                        const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<bool> printed(labels.size(), false);
  std::vector<bool> used(edges.size(), false);
  std::vector<bool> touched(labels.size(), false);
  for (auto [a, b] : edges) touched[a] = touched[b] = true;

  auto label = [&](std::size_t n) {
    std::string s;
    if (printed[n]) return labels[n].front();
    printed[n] = true;
    for (std::size_t k = 0; k < labels[n].size(); ++k) {
      if (k) s += " = ";
      s += labels[n][k];
    }
    return s;
  };

  std::vector<std::string> chains;
  for (std::size_t n = 0; n < labels.size(); ++n) {
    if (!touched[n] && labels[n].size() >= 1) chains.push_back(label(n));
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (used[e]) continue;
    used[e] = true;
    std::string text = label(edges[e].first) + " -> " + label(edges[e].second);
    std::size_t cur = edges[e].second;
    for (bool extended = true; extended;) {
      extended = false;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (used[k]) continue;
        if (edges[k].first == cur) {
          text += " -> " + label(edges[k].second);
          cur = edges[k].second;
        } else if (edges[k].second == cur) {
          text += " <- " + label(edges[k].first);
          cur = edges[k].first;
        } else {
          continue;
        }
        used[k] = extended = true;
        break;
      }
    }
    chains.push_back(std::move(text));
  }
  std::string out = "{";
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (i) out += ", ";
    out += chains[i];
  }
  return out + "}";
}

std::string space_text(const FinSpace& x) {
  const auto classes = indistinguishable_classes(x);
  std::vector<std::vector<std::string>> labels;
  for (PointSet c : classes) {
    std::vector<std::string> names;
    for (PointId p : c.members()) names.push_back(x.name(p));
    labels.push_back(std::move(names));
  }
  return chains_text(labels, covering_pairs(x, classes));
}

std::string codomain_text(const CMap& f) {
  const FinSpace& dom = f.dom();
  const FinSpace& cod = f.cod();
  std::set<std::string> taken(dom.points().begin(), dom.points().end());
  std::vector<std::vector<std::string>> labels(cod.size());
  for (PointId p = 0; p < dom.size(); ++p) labels[f(p)].push_back(dom.name(p));
  for (PointId c = 0; c < cod.size(); ++c) {
    if (!labels[c].empty()) continue;
    std::string fresh = cod.name(c);
    while (taken.count(fresh)) fresh += '\'';
    taken.insert(fresh);
    labels[c].push_back(fresh);
  }
  const auto classes = indistinguishable_classes(cod);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // "=" merges in a codomain, so indistinguishable codomain points are
  // written as a cycle of arrows.
  for (PointSet cls : classes) {
    const auto ids = cls.members();
    if (ids.size() < 2) continue;
    for (std::size_t k = 0; k < ids.size(); ++k) edges.emplace_back(ids[k], ids[(k + 1) % ids.size()]);
  }
  for (auto [a, b] : covering_pairs(cod, classes)) {
    edges.emplace_back(classes[a].lowest(), classes[b].lowest());
  }
  return chains_text(labels, edges);
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void dot_body(std::ostringstream& os, const FinSpace& x, const std::string& prefix,
              const std::string& indent) {
  const auto classes = indistinguishable_classes(x);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::string label;
    for (PointId p : classes[c].members()) {
      if (!label.empty()) label += "=";
      label += x.name(p);
    }
    os << indent << prefix << c << " [label=" << quote(label) << "];\n";
  }
  for (auto [a, b] : covering_pairs(x, classes)) {
    os << indent << prefix << a << " -> " << prefix << b << ";\n";
  }
}

std::size_t class_of(const std::vector<PointSet>& classes, PointId p) {
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].contains(p)) return c;
  }
  return classes.size();
}

}  // namespace

FinSpace parse_space(std::string_view text) {
  Parser p(text);
  auto e = p.space();
  if (!p.at_end()) p.fail("expected end of input");
  return build_space(e);
}

CMap parse_map(std::string_view text) {
  Parser p(text);
  auto dom = p.space();
  p.expect(Tok::kFat, "'=>'");
  auto cod = p.space();
  if (!p.at_end()) p.fail("expected end of input");
  return build_map(dom, cod);
}

TopoFile parse_file(std::string_view text) {
  Parser p(text);
  TopoFile out;
  std::set<std::string> names;
  while (!p.at_end()) {
    const Token& kw = p.peek();
    if (kw.kind != Tok::kIdent || (kw.text != "space" && kw.text != "map")) {
      p.fail("expected 'space' or 'map'");
    }
    const bool is_map = p.next().text == "map";
    const Token& name_tok = p.expect(Tok::kIdent, "statement name");
    std::string name = name_tok.text;
    if (!names.insert(name).second) {
      throw SyntaxError("duplicate statement name '" + name + "'", name_tok.line,
                        name_tok.column);
    }
    p.expect(Tok::kEq, "'='");
    auto first = p.space();
    if (is_map) {
      p.expect(Tok::kFat, "'=>'");
      auto second = p.space();
      out.maps.push_back({name, build_map(first, second)});
    } else {
      out.spaces.push_back({name, share(build_space(first))});
    }
    out.order.emplace_back(std::move(name), is_map);
  }
  return out;
}

nlohmann::json to_data(const FinSpace& x) {
  nlohmann::json spec = nlohmann::json::array();
  for (PointId a = 0; a < x.size(); ++a) {
    for (PointId b = 0; b < x.size(); ++b) {
      if (a != b && x.specializes(a, b)) spec.push_back({x.name(a), x.name(b)});
    }
  }
  return {{"points", x.points()}, {"spec", std::move(spec)}};
}

nlohmann::json to_data(const CMap& f) {
  nlohmann::json assign = nlohmann::json::array();
  for (PointId p = 0; p < f.dom().size(); ++p) {
    assign.push_back({f.dom().name(p), f.cod().name(f(p))});
  }
  return {{"dom", to_data(f.dom())}, {"cod", to_data(f.cod())}, {"assign", std::move(assign)}};
}

FinSpace space_from_data(const nlohmann::json& j) {
  try {
    auto points = j.at("points").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : j.at("spec")) {
      edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    return FinSpace::from_named(std::move(points), edges);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed space data: ") + e.what());
  }
}

CMap map_from_data(const nlohmann::json& j) {
  try {
    auto dom = share(space_from_data(j.at("dom")));
    auto cod = share(space_from_data(j.at("cod")));
    std::vector<PointId> assign(dom->size(), cod->size());
    for (const auto& e : j.at("assign")) {
      assign.at(dom->index(e.at(0).get<std::string>())) = cod->index(e.at(1).get<std::string>());
    }
    return CMap(dom, cod, std::move(assign));
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed map data: ") + e.what());
  } catch (const std::out_of_range&) {
    throw DomainError("malformed map data: assignment mentions an unknown point");
  }
}

std::string render(const FinSpace& x, Format format) {
  switch (format) {
    case Format::kText: return space_text(x);
    case Format::kData: return to_data(x).dump();
    case Format::kDot: {
      std::ostringstream os;
      os << "digraph space {\n";
      dot_body(os, x, "n", "  ");
      os << "}\n";
      return os.str();
    }
  }
  return {};
}

std::string render(const CMap& f, Format format) {
  switch (format) {
    case Format::kText: return space_text(f.dom()) + " => " + codomain_text(f);
    case Format::kData: return to_data(f).dump();
    case Format::kDot: {
      std::ostringstream os;
      os << "digraph map {\n  subgraph cluster_dom {\n    label=\"dom\";\n";
      dot_body(os, f.dom(), "d", "    ");
      os << "  }\n  subgraph cluster_cod {\n    label=\"cod\";\n";
      dot_body(os, f.cod(), "c", "    ");
      os << "  }\n";
      const auto dom_classes = indistinguishable_classes(f.dom());
      const auto cod_classes = indistinguishable_classes(f.cod());
      std::set<std::pair<std::size_t, std::size_t>> drawn;
      for (PointId p = 0; p < f.dom().size(); ++p) {
        const auto e = std::make_pair(class_of(dom_classes, p), class_of(cod_classes, f(p)));
        if (drawn.insert(e).second) {
          os << "  d" << e.first << " -> c" << e.second << " [style=dashed];\n";
        }
      }
      os << "}\n";
      return os.str();
    }
  }
  return {};
}

}  // namespace liftprop::dsl
