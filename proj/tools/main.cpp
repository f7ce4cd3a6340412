// levikit command-line front end.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "levikit/format.hpp"
#include "levikit/zappa_szep.hpp"

using nlohmann::json;
using namespace levikit;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSemantic = 3;

int default_max_len() {
  if (const char* env = std::getenv("LEVIKIT_MAX_LEN")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 4;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Diagram load(const std::string& path) { return parse_diagram(slurp(path)); }

json nf_to_json(const Diagram& d, const GroupoidNormalForm& nf) {
  json steps = json::array();
  for (const auto& s : nf.steps) {
    const Edge& e = d.edges[s.edge.edge];
    int rep_vertex = s.edge.forward ? e.source : e.target;
    steps.push_back({{"rep", d.group_at(rep_vertex)->name(s.rep)},
                     {"edge", e.id},
                     {"forward", s.edge.forward}});
  }
  return {{"dom", d.vertices[nf.dom].id},
          {"cod", d.vertices[nf.cod].id},
          {"steps", steps},
          {"last", d.group_at(nf.cod)->name(nf.last)},
          {"edge_letters", nf.edge_letters()}};
}

json tensor_to_json(const Diagram& d, const TensorElement& u) {
  json atoms = json::array();
  for (const auto& a : u.atoms) {
    const Edge& e = d.edges[a.edge];
    atoms.push_back({{"rep", d.group_at(e.source)->name(a.rep)}, {"edge", e.id}});
  }
  return {{"dom", d.vertices[u.dom].id},
          {"cod", d.vertices[u.cod].id},
          {"atoms", atoms},
          {"tail", d.group_at(u.cod)->name(u.tail)},
          {"length", u.length()}};
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int cmd_validate(const std::string& file, bool as_json) {
  Diagram d = load(file);
  DiagramKind kind = classify(d);
  std::ostringstream out;
  out << "valid: " << d.vertices.size() << " vertices, " << d.edges.size()
      << " edges, kind " << diagram_kind_name(kind) << "\n";
  emit(as_json, {{"valid", true},
                 {"vertices", d.vertices.size()},
                 {"edges", d.edges.size()},
                 {"kind", diagram_kind_name(kind)}},
       out.str());
  return kExitTrue;
}

int cmd_classify(const std::string& file, bool as_json) {
  Diagram d = load(file);
  const char* kind = diagram_kind_name(classify(d));
  emit(as_json, {{"kind", kind}}, std::string(kind) + "\n");
  return kExitTrue;
}

int cmd_normal_form(const std::string& file, const std::string& word, bool category,
                    bool as_json) {
  Diagram d = load(file);
  if (category) {
    int dom = -1;
    std::vector<Token> tokens = parse_category_tokens(d, word, dom);
    TensorElement u = normalize(d, tokens, dom);
    emit(as_json, tensor_to_json(d, u), to_string(d, u) + "\n");
  } else {
    GroupoidNormalForm nf = reduce(d, parse_word(d, word));
    emit(as_json, nf_to_json(d, nf), to_string(d, nf) + "\n");
  }
  return kExitTrue;
}

int cmd_equal(const std::string& file, const std::string& w1, const std::string& w2,
              bool as_json) {
  Diagram d = load(file);
  bool eq = words_equal(d, parse_word(d, w1), parse_word(d, w2));
  emit(as_json, {{"equal", eq}}, std::string(eq ? "equal" : "not-equal") + "\n");
  return eq ? kExitTrue : kExitFalse;
}

int cmd_enumerate(const std::string& file, const std::string& base, int edges,
                  bool as_json) {
  Diagram d = load(file);
  int v = d.vertex_index(base);
  if (v < 0) throw Error(ErrorCode::ParseError, "unknown vertex: " + base);
  auto forms = vertex_group_words(d, v, edges);
  if (as_json) {
    json list = json::array();
    for (const auto& nf : forms) list.push_back(nf_to_json(d, nf));
    std::cout << json{{"count", forms.size()}, {"forms", list}}.dump(2) << "\n";
  } else {
    for (const auto& nf : forms) std::cout << to_string(d, nf) << "\n";
    std::cout << "count: " << forms.size() << "\n";
  }
  return kExitTrue;
}

int cmd_axioms(const std::string& file, int max_len, bool as_json) {
  Diagram d = load(file);
  AxiomReport report = check_axioms(derive_action(d), max_len);
  LeviReport levi = verify_levi(enumerate_truncation(d, max_len));
  bool ok = report.pass() && levi.pass();
  if (as_json) {
    json axioms = json::array();
    for (const auto& a : report.axioms) {
      axioms.push_back({{"name", a.name}, {"pass", a.pass}, {"witness", a.witness}});
    }
    std::cout << json{{"axioms", axioms},
                      {"levi",
                       {{"lf1", levi.lf1},
                        {"lf2", levi.lf2},
                        {"lf3", levi.lf3},
                        {"equidivisible", levi.equidivisible},
                        {"counterexample", levi.counterexample}}},
                      {"pass", ok}}
                     .dump(2)
              << "\n";
  } else {
    for (const auto& a : report.axioms) {
      std::cout << a.name << ": " << (a.pass ? "pass" : "FAIL " + a.witness) << "\n";
    }
    std::cout << "LF1: " << (levi.lf1 ? "pass" : "FAIL") << "\n"
              << "LF2: " << (levi.lf2 ? "pass" : "FAIL") << "\n"
              << "LF3: " << (levi.lf3 ? "pass" : "FAIL") << "\n"
              << "equidivisibility: " << (levi.equidivisible ? "pass" : "FAIL") << "\n";
    if (!levi.counterexample.empty()) {
      std::cout << "counterexample: " << levi.counterexample << "\n";
    }
  }
  return ok ? kExitTrue : kExitFalse;
}

int cmd_greens(const std::string& file, const std::string& w1, const std::string& w2,
               const std::string& rel, bool as_json) {
  Diagram d = load(file);
  GreensRelation r;
  if (rel == "L") {
    r = GreensRelation::L;
  } else if (rel == "R") {
    r = GreensRelation::R;
  } else if (rel == "J") {
    r = GreensRelation::J;
  } else {
    throw CLI::ValidationError("--rel must be L, R or J");
  }
  int dom1 = -1, dom2 = -1;
  auto toks1 = parse_category_tokens(d, w1, dom1);
  auto toks2 = parse_category_tokens(d, w2, dom2);
  TensorElement u = normalize(d, toks1, dom1);
  TensorElement v = normalize(d, toks2, dom2);
  bool related = greens(d, u, v, r);
  emit(as_json, {{"relation", rel}, {"related", related}},
       std::string(related ? "related" : "not-related") + "\n");
  return related ? kExitTrue : kExitFalse;
}

int cmd_embed_check(const std::string& file, int max_len, bool as_json) {
  Diagram d = load(file);
  bool ok = embedding_check(enumerate_truncation(d, max_len));
  emit(as_json, {{"embeds", ok}}, std::string(ok ? "embeds" : "FAIL") + "\n");
  return ok ? kExitTrue : kExitFalse;
}

int cmd_conjugate(const std::string& file1, const std::string& file2,
                  const std::string& edges, bool as_json) {
  Diagram d1 = load(file1);
  Diagram d2 = load(file2);
  std::vector<int> corr;
  if (edges.empty()) {
    for (size_t i = 0; i < d1.edges.size(); ++i) corr.push_back(static_cast<int>(i));
  } else {
    std::istringstream in(edges);
    std::string part;
    while (std::getline(in, part, ',')) {
      int j = d2.edge_index(part);
      if (j < 0) throw Error(ErrorCode::ParseError, "unknown edge in --edges: " + part);
      corr.push_back(j);
    }
  }
  if (corr.size() != d1.edges.size()) {
    throw Error(ErrorCode::ParseError, "--edges must list one edge of FILE2 per edge of FILE1");
  }
  auto witness = diagrams_conjugate(d1, d2, corr);
  if (as_json) {
    json j{{"conjugate", witness.has_value()}};
    if (witness) {
      json per_edge = json::array();
      for (size_t i = 0; i < witness->per_edge.size(); ++i) {
        const Edge& e = d1.edges[i];
        per_edge.push_back(
            {{"edge", e.id},
             {"source_conjugator",
              d1.group_at(e.source)->name(witness->per_edge[i].source_conjugator)},
             {"target_conjugator",
              d1.group_at(e.target)->name(witness->per_edge[i].target_conjugator)}});
      }
      j["witness"] = per_edge;
    }
    std::cout << j.dump(2) << "\n";
  } else if (witness) {
    std::cout << "conjugate\n";
    for (size_t i = 0; i < witness->per_edge.size(); ++i) {
      const Edge& e = d1.edges[i];
      std::cout << "  " << e.id << ": a = "
                << d1.group_at(e.source)->name(witness->per_edge[i].source_conjugator)
                << ", b = "
                << d1.group_at(e.target)->name(witness->per_edge[i].target_conjugator)
                << "\n";
    }
  } else {
    std::cout << "not-conjugate\n";
  }
  return witness ? kExitTrue : kExitFalse;
}

int cmd_presentation(const std::string& file, const std::string& shape, bool as_json) {
  Diagram d = load(file);
  PresentationShape s;
  if (shape == "hnn") {
    s = PresentationShape::Hnn;
  } else if (shape == "amalgam") {
    s = PresentationShape::Amalgam;
  } else {
    throw CLI::ValidationError("--shape must be hnn or amalgam");
  }
  Presentation p = emit_presentation(d, s);
  emit(as_json, {{"generators", p.generators}, {"relators", p.relators}},
       to_string(p) + "\n");
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"levikit: normal forms and word problems for fundamental groupoids "
               "of finite graphs of groups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string file, file2, word, word2, base, rel = "J", shape, edges_map;
  int edges = 2;
  int max_len = default_max_len();
  bool category = false;

  auto* validate = app.add_subcommand("validate", "parse a diagram and report its kind");
  validate->add_option("FILE", file)->required();

  auto* classify_cmd = app.add_subcommand("classify", "print the diagram kind");
  classify_cmd->add_option("FILE", file)->required();

  auto* normal_form = app.add_subcommand("normal-form", "reduce a word to normal form");
  normal_form->add_option("FILE", file)->required();
  normal_form->add_option("WORD", word)->required();
  normal_form->add_flag("--category", category,
                        "interpret the word in the tensor category (no inverses)");

  auto* equal = app.add_subcommand("equal", "decide equality of two groupoid words");
  equal->add_option("FILE", file)->required();
  equal->add_option("WORD1", word)->required();
  equal->add_option("WORD2", word2)->required();

  auto* enumerate = app.add_subcommand(
      "enumerate", "list vertex-group normal forms up to an edge-letter bound");
  enumerate->add_option("FILE", file)->required();
  enumerate->add_option("--base", base, "base vertex")->required();
  enumerate->add_option("--edges", edges, "max edge letters");

  auto* axioms = app.add_subcommand("axioms", "verify action axioms and Levi properties");
  axioms->add_option("FILE", file)->required();
  axioms->add_option("--max-len", max_len, "truncation bound");

  auto* greens_cmd = app.add_subcommand("greens", "test a Green's relation");
  greens_cmd->add_option("FILE", file)->required();
  greens_cmd->add_option("WORD1", word)->required();
  greens_cmd->add_option("WORD2", word2)->required();
  greens_cmd->add_option("--rel", rel, "L, R or J");

  auto* embed = app.add_subcommand("embed-check",
                                   "check the groupoid embedding on a truncation");
  embed->add_option("FILE", file)->required();
  embed->add_option("--max-len", max_len, "truncation bound");

  auto* conjugate = app.add_subcommand("conjugate", "test conjugacy of two diagrams");
  conjugate->add_option("FILE1", file)->required();
  conjugate->add_option("FILE2", file2)->required();
  conjugate->add_option("--edges", edges_map,
                        "comma-separated FILE2 edge ids matched to FILE1 edges in order");

  auto* presentation = app.add_subcommand("presentation", "emit a group presentation");
  presentation->add_option("FILE", file)->required();
  presentation->add_option("--shape", shape, "hnn or amalgam")->required();

  try {
    app.parse(argc, argv);
    if (validate->parsed()) return cmd_validate(file, as_json);
    if (classify_cmd->parsed()) return cmd_classify(file, as_json);
    if (normal_form->parsed()) return cmd_normal_form(file, word, category, as_json);
    if (equal->parsed()) return cmd_equal(file, word, word2, as_json);
    if (enumerate->parsed()) return cmd_enumerate(file, base, edges, as_json);
    if (axioms->parsed()) return cmd_axioms(file, max_len, as_json);
    if (greens_cmd->parsed()) return cmd_greens(file, word, word2, rel, as_json);
    if (embed->parsed()) return cmd_embed_check(file, max_len, as_json);
    if (conjugate->parsed()) return cmd_conjugate(file, file2, edges_map, as_json);
    if (presentation->parsed()) return cmd_presentation(file, shape, as_json);
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
}
