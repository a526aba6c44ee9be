#include "shexd/witness_json.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "shexd/error.hpp"

namespace shexd {

using nlohmann::json;

namespace {

std::string show_node(const Graph& graph, NodeId n, const PrefixMap& prefixes) {
  const Term& t = graph.node(n).term;
  if (t.kind == TermKind::Iri) return compact_iri(t.text, prefixes);
  if (t.kind == TermKind::Blank) return t.to_ntriples();
  std::string out = "\"" + escape_string(t.text) + "\"";
  if (!t.lang.empty()) return out + "@" + t.lang;
  if (t.datatype == vocab::xsd_string) return out;
  return out + "^^" + compact_iri(t.datatype, prefixes);
}

std::string show_consumer(const Consumer& c, const PrefixMap& prefixes) {
  if (c.kind != Consumer::Kind::Extra) return c.to_string();
  std::string iri = compact_iri(c.prop.iri, prefixes);
  return std::string("extra:") + (c.prop.inverse ? "^" : "") + iri;
}

json entry_json(const TypingEntry& e, const Graph& graph) {
  return {{"node", graph.node(e.node).key}, {"shape", e.shape}, {"sign", e.positive ? "+" : "-"}};
}

json entries_json(std::vector<TypingEntry> entries, const Graph& graph) {
  std::sort(entries.begin(), entries.end(), [&](const TypingEntry& a, const TypingEntry& b) {
    return std::tie(graph.node(a.node).key, a.shape, b.positive) <
           std::tie(graph.node(b.node).key, b.shape, a.positive);
  });
  json out = json::array();
  for (const auto& e : entries) out.push_back(entry_json(e, graph));
  return out;
}

}  // namespace

std::string witness_to_json(const GlobalTypingWitness& gtw, const Graph& graph) {
  json out;
  out["typing"] = entries_json({gtw.typing.begin(), gtw.typing.end()}, graph);
  json witnesses = json::object();
  for (const auto& [h, w] : gtw.lw) {
    json edges = json::object();
    for (const auto& [e, c] : w) edges[graph.edge(e).id] = c.to_string();
    witnesses[graph.node(h.first).key + "|" + h.second] = std::move(edges);
  }
  out["witnesses"] = std::move(witnesses);
  return out.dump(2) + "\n";
}

std::string witness_table(const GlobalTypingWitness& gtw, const Graph& graph, const PrefixMap& prefixes) {
  struct Row {
    std::string node, shape, edge, consumer;
  };
  std::vector<Row> rows;
  for (const auto& [h, w] : gtw.lw) {
    for (const auto& [e, c] : w) {
      const Edge& edge = graph.edge(e);
      std::string prop = (edge.prop.inverse ? "^" : "") + compact_iri(edge.prop.iri, prefixes);
      rows.push_back({show_node(graph, h.first, prefixes), h.second,
                      prop + " " + show_node(graph, edge.target, prefixes), show_consumer(c, prefixes)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.node, a.shape, a.edge) < std::tie(b.node, b.shape, b.edge);
  });
  std::size_t wn = 4, ws = 5, we = 4;
  for (const auto& r : rows) {
    wn = std::max(wn, r.node.size());
    ws = std::max(ws, r.shape.size());
    we = std::max(we, r.edge.size());
  }
  std::ostringstream os;
  os << std::left << std::setw(wn + 2) << "node" << std::setw(ws + 2) << "shape" << std::setw(we + 2) << "edge"
     << "consumer\n";
  for (const auto& r : rows)
    os << std::setw(wn + 2) << r.node << std::setw(ws + 2) << r.shape << std::setw(we + 2) << r.edge
       << r.consumer << "\n";
  return os.str();
}

std::string failure_to_json(const ValidationFailure& failure, const Graph& graph) {
  json out;
  out["reason"] = failure.reason == ValidationFailure::Reason::IncompatibleInitialTyping
                      ? "IncompatibleInitialTyping"
                      : "Unsatisfiable";
  out["failed"] = entries_json(failure.failed, graph);
  out["leaves"] = entries_json(failure.leaves, graph);
  json counts = json::object();
  for (const auto& [e, n] : failure.candidates) counts[graph.node(e.node).key + "|" + e.shape] = n;
  out["candidates"] = std::move(counts);
  return out.dump(2) + "\n";
}

std::string failure_report(const ValidationFailure& failure, const Graph& graph, const PrefixMap& prefixes) {
  std::ostringstream os;
  if (failure.reason == ValidationFailure::Reason::IncompatibleInitialTyping) {
    os << "initial typing contradicts the certain typing:\n";
    for (const auto& e : failure.failed) os << "  " << to_string(e, graph, prefixes) << "\n";
    return os.str();
  }
  os << "validation failed:\n";
  for (const auto& e : failure.failed) {
    os << "  " << to_string(e, graph, prefixes);
    if (auto it = failure.candidates.find(e); it != failure.candidates.end())
      os << " (" << it->second << " candidates examined)";
    os << "\n";
  }
  if (!failure.leaves.empty()) {
    os << "exhausted without a failed dependency:\n";
    for (const auto& e : failure.leaves) os << "  " << to_string(e, graph, prefixes) << "\n";
  }
  return os.str();
}

NodeId resolve_node(const Graph& graph, std::string_view text, const PrefixMap& prefixes) {
  if (text.empty()) throw UnknownNode("(empty)");
  std::string key;
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') {
    key = std::string(text);
  } else if (text.starts_with("_:")) {
    key = std::string(text);
  } else if (text.starts_with("\"") || std::isdigit(static_cast<unsigned char>(text.front()))) {
    // parse the literal as the object of a throwaway triple
    std::string doc;
    for (const auto& [p, ns] : prefixes) doc += "@prefix " + p + ": <" + ns + "> .\n";
    doc += "<urn:x:s> <urn:x:p> " + std::string(text) + " .";
    TripleSet ts = parse_data(doc, DataFormat::TurtleLite);
    if (ts.size() != 1) throw UnknownNode(std::string(text));
    key = ts.triples[0].object.to_ntriples();
  } else if (auto colon = text.find(':'); colon != std::string_view::npos) {
    auto it = prefixes.find(text.substr(0, colon));
    if (it == prefixes.end()) {
      if (text.find("://") == std::string_view::npos) throw UnknownPrefix(std::string(text.substr(0, colon)), 1, 1);
      key = "<" + std::string(text) + ">";
    } else {
      key = "<" + it->second + std::string(text.substr(colon + 1)) + ">";
    }
  } else {
    key = "<" + std::string(text) + ">";
  }
  auto n = graph.find_key(key);
  if (!n) throw UnknownNode(key);
  return *n;
}

ShapeLabel resolve_shape(std::string_view text) {
  if (text.size() >= 2 && text.front() == '<' && text.back() == '>') text = text.substr(1, text.size() - 2);
  return ShapeLabel(text);
}

Typing parse_typing_json(std::string_view text, const Graph& graph, const PrefixMap& prefixes) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaJsonError("$", "not valid JSON");
  std::string base = "$";
  if (doc.is_object()) {
    if (!doc.contains("typing")) throw SchemaJsonError("$", "expected an array or an object with \"typing\"");
    json inner = doc["typing"];
    doc = std::move(inner);
    base = "$.typing";
  }
  if (!doc.is_array()) throw SchemaJsonError(base, "expected an array");
  Typing out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    std::string path = base + "[" + std::to_string(i) + "]";
    const json& item = doc[i];
    if (!item.is_object()) throw SchemaJsonError(path, "expected an object");
    for (const char* field : {"node", "shape"})
      if (!item.contains(field) || !item[field].is_string())
        throw SchemaJsonError(path + "." + field, "expected a string");
    bool positive = true;
    if (item.contains("sign")) {
      const json& s = item["sign"];
      if (s == "+") positive = true;
      else if (s == "-") positive = false;
      else throw SchemaJsonError(path + ".sign", "expected \"+\" or \"-\"");
    }
    NodeId n = resolve_node(graph, item["node"].get<std::string>(), prefixes);
    out.insert({n, resolve_shape(item["shape"].get<std::string>()), positive});
  }
  return out;
}

}  // namespace shexd
