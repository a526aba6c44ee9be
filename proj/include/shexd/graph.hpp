#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "shexd/rdf.hpp"

namespace shexd {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

// A property, or its inverse ("^p").
struct DirectedProperty {
  std::string iri;
  bool inverse = false;

  DirectedProperty flipped() const { return {iri, !inverse}; }
  std::string to_string() const { return inverse ? "^" + iri : iri; }
  static DirectedProperty from_string(std::string_view text);

  auto operator<=>(const DirectedProperty&) const = default;
  bool operator==(const DirectedProperty&) const = default;
};

struct Node {
  std::string key;  // N-Triples form of the term; unique within the graph
  Term term;
  Value value;
};

struct Edge {
  NodeId source;
  DirectedProperty prop;
  NodeId target;
  std::string id;   // source|>|iri|target or source|<|iri|target
  EdgeId inverse;   // the paired edge in the opposite direction

  bool forward() const { return !prop.inverse; }
};

// The node/edge/val abstraction of a triple set: each triple (s, p, o) yields
// the forward edge (s, p, o) and the inverse edge (o, ^p, s). Immutable once
// built, so concurrent readers are safe.
class Graph {
 public:
  Graph() = default;
  explicit Graph(const std::vector<Triple>& triples);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t triple_count() const { return edges_.size() / 2; }

  const Node& node(NodeId n) const { return nodes_.at(n); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const Value& val(NodeId n) const { return nodes_.at(n).value; }

  std::optional<NodeId> find(const Term& term) const;
  std::optional<NodeId> find_key(std::string_view key) const;
  // Throws UnknownNode.
  NodeId require(const Term& term) const;

  // Edges whose source is `n`, ordered by edge id.
  std::span<const EdgeId> neighbourhood(NodeId n) const;

  bool has_property(NodeId n, const DirectedProperty& prop) const;

  // Triples of the forward edges, ordered by edge id.
  std::vector<Triple> triples() const;

 private:
  NodeId intern(const Term& term);

  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
  std::unordered_map<std::string, NodeId> by_key_;
};

Graph build_graph(const TripleSet& triples);

// Throws UnknownNode when `n` is not a node of `graph`.
std::span<const EdgeId> neighbourhood(const Graph& graph, NodeId n);

std::string edge_id(const std::string& source_key, const DirectedProperty& prop,
                    const std::string& target_key);

}  // namespace shexd
