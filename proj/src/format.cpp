#include "levikit/format.hpp"

#include <map>
#include <sstream>

namespace levikit {

namespace {

std::string strip(const std::string& line) {
  std::string s = line.substr(0, line.find('#'));
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Diagram parse_diagram(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
  }

  struct RawGroup {
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> rows;
    int declared_at = 0;
  };
  std::map<std::string, RawGroup> raw_groups;
  std::map<std::string, GroupPtr> groups;
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::map<std::string, size_t> edge_index;
  std::map<std::string, std::vector<std::string>> dom_tokens, map_tokens;

  size_t i = 0;
  while (i < lines.size()) {
    int lineno = static_cast<int>(i) + 1;
    std::string s = strip(lines[i]);
    ++i;
    if (s.empty()) continue;
    auto toks = split_ws(s);

    if (toks[0] == "group") {
      if (toks.size() < 3 || toks[1].back() != ':') parse_fail(lineno, "expected 'group NAME: elements...'");
      std::string name = toks[1].substr(0, toks[1].size() - 1);
      RawGroup g;
      g.names.assign(toks.begin() + 2, toks.end());
      g.declared_at = lineno;
      if (!raw_groups.emplace(name, std::move(g)).second) {
        parse_fail(lineno, "group '" + name + "' redeclared");
      }
    } else if (toks[0] == "table") {
      if (toks.size() != 2 || toks[1].back() != ':') parse_fail(lineno, "expected 'table NAME:'");
      std::string name = toks[1].substr(0, toks[1].size() - 1);
      auto it = raw_groups.find(name);
      if (it == raw_groups.end()) parse_fail(lineno, "table for undeclared group '" + name + "'");
      const size_t n = it->second.names.size();
      while (it->second.rows.size() < n && i < lines.size()) {
        std::string row = strip(lines[i]);
        ++i;
        if (row.empty()) continue;
        it->second.rows.push_back(split_ws(row));
      }
      if (it->second.rows.size() < n) parse_fail(lineno, "table '" + name + "' is truncated");
      try {
        groups[name] = group_from_table(it->second.names, it->second.rows);
      } catch (const Error& e) {
        parse_fail(lineno, std::string("group '" + name + "': ") + e.what());
      }
    } else if (toks[0] == "vertex") {
      if (toks.size() != 4 || toks[2] != "group") parse_fail(lineno, "expected 'vertex V group NAME'");
      auto it = groups.find(toks[3]);
      if (it == groups.end()) parse_fail(lineno, "unknown group '" + toks[3] + "'");
      vertices.push_back(VertexSpec{toks[1], it->second});
    } else if (toks[0] == "edge") {
      if (toks.size() != 5 || toks[1].back() != ':' || toks[3] != "->") {
        parse_fail(lineno, "expected 'edge X: V1 -> V2'");
      }
      std::string id = toks[1].substr(0, toks[1].size() - 1);
      edge_index[id] = edges.size();
      edges.push_back(EdgeSpec{id, toks[2], toks[4], {}, {}});
    } else if (toks[0] == "dom" || toks[0] == "map") {
      if (toks.size() < 2 || toks[1].back() != ':') parse_fail(lineno, "expected '" + toks[0] + " X: ...'");
      std::string id = toks[1].substr(0, toks[1].size() - 1);
      if (!edge_index.count(id)) parse_fail(lineno, "unknown edge '" + id + "'");
      auto& dst = toks[0] == "dom" ? dom_tokens[id] : map_tokens[id];
      dst.assign(toks.begin() + 2, toks.end());
    } else {
      parse_fail(lineno, "unrecognized directive '" + toks[0] + "'");
    }
  }

  if (vertices.empty()) {
    throw Error(ErrorCode::ParseError, "no vertices");
  }

  auto group_of_vertex = [&](const std::string& v) -> GroupPtr {
    for (const auto& spec : vertices) {
      if (spec.id == v) return spec.group;
    }
    return nullptr;
  };
  auto element = [](const GroupPtr& g, const std::string& name, const std::string& ctx) {
    Elem e = g->index_of(name);
    if (e < 0) {
      throw Error(ErrorCode::ParseError, ctx + ": unknown group element '" + name + "'");
    }
    return e;
  };

  for (auto& e : edges) {
    GroupPtr src = group_of_vertex(e.source);
    GroupPtr tgt = group_of_vertex(e.target);
    if (!src || !tgt) {
      throw Error(ErrorCode::DanglingEdge, "edge '" + e.id + "' references unknown vertex");
    }
    for (const auto& t : dom_tokens[e.id]) {
      e.domain_gens.push_back(element(src, t, "dom " + e.id));
    }
    // map X: g -> h pairs
    const auto& mt = map_tokens[e.id];
    std::map<Elem, Elem> images;
    for (size_t k = 0; k < mt.size(); k += 3) {
      if (k + 2 >= mt.size() || mt[k + 1] != "->") {
        throw Error(ErrorCode::ParseError, "map " + e.id + ": expected 'g -> h' pairs");
      }
      images[element(src, mt[k], "map " + e.id)] = element(tgt, mt[k + 2], "map " + e.id);
    }
    for (Elem g : e.domain_gens) {
      auto it = images.find(g);
      if (it == images.end()) {
        throw Error(ErrorCode::ParseError,
                    "map " + e.id + ": no image for generator '" + src->name(g) + "'");
      }
      e.gen_images.push_back(it->second);
    }
  }
  return build_diagram(vertices, edges);
}

std::string print_diagram(const Diagram& d) {
  std::ostringstream out;
  std::map<const FiniteGroup*, std::string> group_names;
  int counter = 0;
  for (const auto& v : d.vertices) {
    if (group_names.count(v.group.get())) continue;
    std::string name = "G" + std::to_string(counter++);
    group_names[v.group.get()] = name;
    out << "group " << name << ":";
    for (Elem g = 0; g < v.group->order(); ++g) out << " " << v.group->name(g);
    out << "\ntable " << name << ":\n";
    for (Elem a = 0; a < v.group->order(); ++a) {
      for (Elem b = 0; b < v.group->order(); ++b) {
        out << (b ? " " : "") << v.group->name(v.group->mul(a, b));
      }
      out << "\n";
    }
  }
  for (const auto& v : d.vertices) {
    out << "vertex " << v.id << " group " << group_names[v.group.get()] << "\n";
  }
  for (const auto& e : d.edges) {
    const GroupPtr& src = d.group_at(e.source);
    const GroupPtr& tgt = d.group_at(e.target);
    out << "edge " << e.id << ": " << d.vertices[e.source].id << " -> "
        << d.vertices[e.target].id << "\n";
    out << "dom " << e.id << ":";
    for (Elem g : e.hom.domain.members) out << " " << src->name(g);
    out << "\nmap " << e.id << ":";
    for (Elem g : e.hom.domain.members) {
      out << " " << src->name(g) << " -> " << tgt->name(e.hom.apply(g));
    }
    out << "\n";
  }
  return out.str();
}

namespace {

struct WordToken {
  enum Kind { Group, Forward, Backward, At } kind;
  std::string text;
};

std::vector<WordToken> lex_word(const std::string& text) {
  std::vector<WordToken> out;
  for (const auto& t : split_ws(text)) {
    if (t.size() >= 2 && t.front() == '[' && t.back() == ']') {
      out.push_back({WordToken::Group, t.substr(1, t.size() - 2)});
    } else if (t.size() >= 1 && t.front() == '@') {
      out.push_back({WordToken::At, t.substr(1)});
    } else if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
      out.push_back({WordToken::Backward, t.substr(0, t.size() - 3)});
    } else {
      out.push_back({WordToken::Forward, t});
    }
  }
  return out;
}

int infer_dom(const Diagram& d, const std::vector<WordToken>& toks) {
  for (const auto& t : toks) {
    if (t.kind == WordToken::At) continue;  // handled by caller
    if (t.kind == WordToken::Forward || t.kind == WordToken::Backward) {
      int e = d.edge_index(t.text);
      if (e < 0) throw Error(ErrorCode::ParseError, "unknown edge '" + t.text + "'");
      return t.kind == WordToken::Forward ? d.edges[e].source : d.edges[e].target;
    }
  }
  if (d.vertices.size() == 1) return 0;
  throw Error(ErrorCode::ParseError,
              "ambiguous word domain; add a leading @V annotation");
}

}  // namespace

GroupoidWord parse_word(const Diagram& d, const std::string& text) {
  auto toks = lex_word(text);
  GroupoidWord w;
  size_t start = 0;
  if (!toks.empty() && toks[0].kind == WordToken::At) {
    w.dom = d.vertex_index(toks[0].text);
    if (w.dom < 0) throw Error(ErrorCode::ParseError, "unknown vertex '" + toks[0].text + "'");
    start = 1;
  } else {
    w.dom = infer_dom(d, toks);
  }
  int cur = w.dom;
  for (size_t i = start; i < toks.size(); ++i) {
    const auto& t = toks[i];
    switch (t.kind) {
      case WordToken::At:
        throw Error(ErrorCode::ParseError, "@V annotation only allowed at the start");
      case WordToken::Group: {
        Elem g = d.group_at(cur)->index_of(t.text);
        if (g < 0) {
          throw Error(ErrorCode::ParseError, "unknown element '" + t.text + "' at vertex " +
                                                 d.vertices[cur].id);
        }
        w.letters.push_back(GroupLetter{cur, g});
        break;
      }
      case WordToken::Forward:
      case WordToken::Backward: {
        int e = d.edge_index(t.text);
        if (e < 0) throw Error(ErrorCode::ParseError, "unknown edge '" + t.text + "'");
        bool forward = t.kind == WordToken::Forward;
        EdgeLetter el{e, forward};
        if (letter_dom(d, Letter{el}) != cur) {
          throw Error(ErrorCode::NonComposable,
                      "edge letter '" + t.text + "' does not compose at vertex " +
                          d.vertices[cur].id);
        }
        w.letters.push_back(el);
        cur = letter_cod(d, Letter{el});
        break;
      }
    }
  }
  return w;
}

std::vector<Token> parse_category_tokens(const Diagram& d, const std::string& text,
                                         int& dom) {
  GroupoidWord w = parse_word(d, text);
  dom = w.dom;
  std::vector<Token> out;
  for (const auto& l : w.letters) {
    if (const auto* g = std::get_if<GroupLetter>(&l)) {
      out.push_back(GroupToken{g->vertex, g->g});
    } else {
      const auto& e = std::get<EdgeLetter>(l);
      if (!e.forward) {
        throw Error(ErrorCode::ParseError,
                    "backward edge letters are not category elements");
      }
      const Edge& edge = d.edges[e.edge];
      out.push_back(AtomToken{d.group_at(edge.source)->identity(), e.edge,
                              d.group_at(edge.target)->identity()});
    }
  }
  return out;
}

}  // namespace levikit
