#include "shexd/typing.hpp"

namespace shexd {

bool is_consistent(const Typing& typing) {
  for (const auto& e : typing)
    if (e.positive && typing.count(e.negated())) return false;
  return true;
}

bool check_compatible(const Typing& a, const Typing& b) {
  const Typing& small = a.size() <= b.size() ? a : b;
  const Typing& large = a.size() <= b.size() ? b : a;
  for (const auto& e : small)
    if (large.count(e.negated())) return false;
  return true;
}

std::string to_string(const TypingEntry& entry, const Graph& graph, const PrefixMap& prefixes) {
  const Term& t = graph.node(entry.node).term;
  std::string node = t.kind == TermKind::Iri ? compact_iri(t.text, prefixes) : t.to_ntriples();
  return "(" + node + ", " + (entry.positive ? "" : "!") + "<" + entry.shape + ">)";
}

}  // namespace shexd
