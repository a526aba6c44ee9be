#pragma once

#include <string>
#include <string_view>

#include "shexd/verify.hpp"

namespace shexd {

// {"typing": [{"node", "shape", "sign"}...], "witnesses": {"<node>|<shape>":
// {"<edge-id>": consumer}}}. Nodes are written as N-Triples terms; entries
// are sorted, so equal witnesses serialize to equal bytes.
std::string witness_to_json(const GlobalTypingWitness& gtw, const Graph& graph);

// One row per (node, shape, edge) with IRIs compacted against `prefixes`.
std::string witness_table(const GlobalTypingWitness& gtw, const Graph& graph, const PrefixMap& prefixes = {});

std::string failure_to_json(const ValidationFailure& failure, const Graph& graph);
std::string failure_report(const ValidationFailure& failure, const Graph& graph, const PrefixMap& prefixes = {});

// A node written as <iri>, prefix:local, _:label or an N-Triples literal.
// Throws UnknownNode, or UnknownPrefix for an undeclared prefix.
NodeId resolve_node(const Graph& graph, std::string_view text, const PrefixMap& prefixes = {});

// "IssueShape" or "<IssueShape>".
ShapeLabel resolve_shape(std::string_view text);

// A JSON array of {"node", "shape", "sign"?} objects, or an object holding
// one under "typing" (so a witness file is accepted as input). Throws
// SchemaJsonError on malformed input.
Typing parse_typing_json(std::string_view text, const Graph& graph, const PrefixMap& prefixes = {});

}  // namespace shexd
