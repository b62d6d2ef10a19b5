#include "qmono/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qmono/errors.hpp"

namespace qmono {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line;

  void skip_spaces() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_spaces();
    return pos >= text.size();
  }
  int column() const { return static_cast<int>(pos) + 1; }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::parse_error,
                "line " + std::to_string(line) + ", column " + std::to_string(column()) + ": " + message);
  }

  bool match(char c) {
    skip_spaces();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!match(c)) fail("expected '" + std::string(1, c) + "' " + what);
  }

  bool match_word(const std::string& word) {
    skip_spaces();
    if (text.compare(pos, word.size(), word) == 0) {
      pos += word.size();
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_spaces();
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected an identifier");
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }
};

}  // namespace

MonomialPresentation parse_presentation(const std::string& text) {
  MonomialPresentation p;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::pair<std::string, std::string>> seen_relations;

  std::istringstream stream(text);
  std::string raw;
  int line_number = 0;
  while (std::getline(stream, raw)) {
    ++line_number;
    const std::size_t hash = raw.find('#');
    std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
    Cursor cur{body, 0, line_number};
    if (cur.done()) continue;

    if (cur.match_word("vertices")) {
      cur.expect(':', "after 'vertices'");
      bool any = false;
      while (!cur.done()) {
        const std::string name = cur.identifier();
        if (std::find(vertices.begin(), vertices.end(), name) != vertices.end())
          cur.fail("duplicate vertex '" + name + "'");
        vertices.push_back(name);
        any = true;
      }
      if (!any) cur.fail("expected at least one vertex name");
    } else if (cur.match_word("arrow")) {
      const std::string name = cur.identifier();
      cur.expect(':', "after the arrow name");
      const std::string source = cur.identifier();
      if (!cur.match('-') || !cur.match('>')) cur.fail("expected '->'");
      const std::string target = cur.identifier();
      if (!cur.done()) cur.fail("unexpected trailing input");
      for (const Arrow& a : arrows) {
        if (a.name == name) cur.fail("duplicate arrow '" + name + "'");
      }
      if (std::find(vertices.begin(), vertices.end(), source) == vertices.end())
        throw Error(ErrorCode::undeclared_name,
                    "line " + std::to_string(line_number) + ": unknown vertex '" + source + "'");
      if (std::find(vertices.begin(), vertices.end(), target) == vertices.end())
        throw Error(ErrorCode::undeclared_name,
                    "line " + std::to_string(line_number) + ": unknown vertex '" + target + "'");
      arrows.push_back(Arrow{name, source, target});
    } else if (cur.match_word("relation")) {
      const std::string second = cur.identifier();
      cur.expect('.', "between the two arrow names");
      const std::string first = cur.identifier();
      if (!cur.done()) cur.fail("unexpected trailing input");
      const auto find_arrow = [&](const std::string& name) -> const Arrow* {
        for (const Arrow& a : arrows)
          if (a.name == name) return &a;
        return nullptr;
      };
      const Arrow* fa = find_arrow(first);
      const Arrow* sa = find_arrow(second);
      if (!fa)
        throw Error(ErrorCode::undeclared_name,
                    "line " + std::to_string(line_number) + ": unknown arrow '" + first + "'");
      if (!sa)
        throw Error(ErrorCode::undeclared_name,
                    "line " + std::to_string(line_number) + ": unknown arrow '" + second + "'");
      if (fa->target != sa->source)
        throw Error(ErrorCode::non_composable_relation,
                    "line " + std::to_string(line_number) + ": relation " + second + "." + first +
                        " is not composable: '" + first + "' ends at '" + fa->target + "' but '" +
                        second + "' starts at '" + sa->source + "'");
      const std::pair<std::string, std::string> key{first, second};
      if (std::find(seen_relations.begin(), seen_relations.end(), key) != seen_relations.end())
        cur.fail("duplicate relation " + second + "." + first);
      seen_relations.push_back(key);
      p.forbidden.push_back(LengthTwoPath{first, second});
    } else {
      cur.fail("expected 'vertices:', 'arrow' or 'relation'");
    }
  }
  p.quiver = Quiver(std::move(vertices), std::move(arrows));
  return p;
}

std::string render_presentation(const MonomialPresentation& p) {
  std::string out;
  if (p.quiver.vertex_count() > 0) {
    out += "vertices:";
    for (const std::string& v : p.quiver.vertices()) out += " " + v;
    out += "\n";
  }
  for (const Arrow& a : p.quiver.arrows())
    out += "arrow " + a.name + ": " + a.source + " -> " + a.target + "\n";
  for (const LengthTwoPath& rel : p.forbidden)
    out += "relation " + rel.second + "." + rel.first + "\n";
  return out;
}

StableObject parse_object_expr(const AlgebraPtr& algebra, const std::string& text) {
  Cursor cur{text, 0, 1};
  std::vector<Generator> gens;
  if (cur.match('0')) {
    if (!cur.done())
      throw Error(ErrorCode::invalid_expression, "unexpected input after '0'");
    return StableObject(algebra, std::move(gens));
  }
  while (true) {
    cur.skip_spaces();
    long multiplicity = 1;
    if (cur.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[cur.pos]))) {
      std::size_t start = cur.pos;
      while (cur.pos < text.size() && std::isdigit(static_cast<unsigned char>(text[cur.pos]))) ++cur.pos;
      multiplicity = std::stol(text.substr(start, cur.pos - start));
      if (multiplicity <= 0)
        throw Error(ErrorCode::invalid_expression, "multiplicity must be positive");
      cur.expect('*', "after a multiplicity");
    }
    cur.skip_spaces();
    if (cur.pos >= text.size())
      throw Error(ErrorCode::invalid_expression, "expected a term A(...), S(...) or P(...)");
    const char ctor = text[cur.pos];
    if (ctor != 'A' && ctor != 'S' && ctor != 'P')
      throw Error(ErrorCode::invalid_expression,
                  std::string("unknown constructor '") + ctor + "'; use A, S or P");
    ++cur.pos;
    cur.expect('(', "after the constructor");
    const std::string name = cur.identifier();
    cur.expect(')', "after the name");

    Generator g;
    if (ctor == 'A') {
      g.kind = GeneratorKind::arrow;
      g.index = algebra->quiver().arrow_index(name);
      if (g.index < 0) throw Error(ErrorCode::unknown_arrow, "no arrow '" + name + "'");
    } else {
      g.kind = ctor == 'S' ? GeneratorKind::simple : GeneratorKind::projective;
      g.index = algebra->quiver().vertex_index(name);
      if (g.index < 0) throw Error(ErrorCode::unknown_vertex, "no vertex '" + name + "'");
    }
    for (long k = 0; k < multiplicity; ++k) gens.push_back(g);

    if (cur.done()) break;
    if (!cur.match('+'))
      throw Error(ErrorCode::invalid_expression, "expected '+' between terms");
  }
  return StableObject(algebra, std::move(gens));
}

}  // namespace qmono
