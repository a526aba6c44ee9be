#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "shexd/error.hpp"
#include "shexd/flooding.hpp"
#include "shexd/rdf.hpp"
#include "shexd/shexc.hpp"
#include "shexd/witness_json.hpp"

namespace shexd::test {

inline std::string corpus_path(const std::string& name) { return std::string(SHEXD_CORPUS_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Instance {
  Schema schema;
  Graph graph;
  PrefixMap prefixes;

  NodeId node(const std::string& text) const { return resolve_node(graph, text, prefixes); }
  TypingEntry pos(const std::string& n, const std::string& s) const { return {node(n), s, true}; }
  TypingEntry neg(const std::string& n, const std::string& s) const { return {node(n), s, false}; }
  EdgeId edge(const std::string& s, const std::string& prop, const std::string& o) const {
    NodeId src = node(s), tgt = node(o);
    bool inverse = prop.starts_with("^");
    std::string p = inverse ? prop.substr(1) : prop;
    auto colon = p.find(':');
    std::string iri = prefixes.at(p.substr(0, colon)) + p.substr(colon + 1);
    for (EdgeId e : graph.neighbourhood(src)) {
      const Edge& ed = graph.edge(e);
      if (ed.target == tgt && ed.prop.iri == iri && ed.prop.inverse == inverse) return e;
    }
    throw Error("no edge " + s + " " + prop + " " + o);
  }
};

inline Instance load(const std::string& schema_file, const std::string& data_file) {
  Instance inst;
  inst.schema = parse_schema(slurp(corpus_path(schema_file)));
  TripleSet data = parse_data(slurp(corpus_path(data_file)), DataFormat::TurtleLite);
  inst.graph = build_graph(data);
  inst.prefixes = inst.schema.prefixes;
  inst.prefixes.insert(data.prefixes.begin(), data.prefixes.end());
  return inst;
}

inline Instance running_example() { return load("issues.shex", "issues.ttl"); }

}  // namespace shexd::test
