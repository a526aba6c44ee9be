#include "shexd/graph.hpp"

#include <algorithm>

#include "shexd/error.hpp"

namespace shexd {

DirectedProperty DirectedProperty::from_string(std::string_view text) {
  if (!text.empty() && text.front() == '^') return {std::string(text.substr(1)), true};
  return {std::string(text), false};
}

std::string edge_id(const std::string& source_key, const DirectedProperty& prop,
                    const std::string& target_key) {
  return source_key + (prop.inverse ? "|<|" : "|>|") + prop.iri + "|" + target_key;
}

NodeId Graph::intern(const Term& term) {
  std::string key = term.to_ntriples();
  auto [it, inserted] = by_key_.try_emplace(key, static_cast<NodeId>(nodes_.size()));
  if (inserted) {
    nodes_.push_back(Node{std::move(key), term, term.value()});
    adjacency_.emplace_back();
  }
  return it->second;
}

Graph::Graph(const std::vector<Triple>& triples) {
  for (const auto& t : triples) {
    NodeId s = intern(t.subject);
    NodeId o = intern(t.object);
    auto fwd = static_cast<EdgeId>(edges_.size());
    DirectedProperty p{t.predicate, false};
    edges_.push_back(Edge{s, p, o, edge_id(nodes_[s].key, p, nodes_[o].key), fwd + 1});
    edges_.push_back(Edge{o, p.flipped(), s, edge_id(nodes_[o].key, p.flipped(), nodes_[s].key), fwd});
    adjacency_[s].push_back(fwd);
    adjacency_[o].push_back(fwd + 1);
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [this](EdgeId a, EdgeId b) { return edges_[a].id < edges_[b].id; });
  }
}

std::optional<NodeId> Graph::find(const Term& term) const { return find_key(term.to_ntriples()); }

std::optional<NodeId> Graph::find_key(std::string_view key) const {
  auto it = by_key_.find(std::string(key));
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

NodeId Graph::require(const Term& term) const {
  auto n = find(term);
  if (!n) throw UnknownNode(term.to_ntriples());
  return *n;
}

std::span<const EdgeId> Graph::neighbourhood(NodeId n) const {
  if (n >= adjacency_.size()) throw UnknownNode("#" + std::to_string(n));
  return adjacency_[n];
}

bool Graph::has_property(NodeId n, const DirectedProperty& prop) const {
  for (EdgeId e : neighbourhood(n))
    if (edges_[e].prop == prop) return true;
  return false;
}

std::vector<Triple> Graph::triples() const {
  std::vector<EdgeId> forward;
  for (EdgeId e = 0; e < edges_.size(); e += 2) forward.push_back(e);
  std::sort(forward.begin(), forward.end(),
            [this](EdgeId a, EdgeId b) { return edges_[a].id < edges_[b].id; });
  std::vector<Triple> out;
  out.reserve(forward.size());
  for (EdgeId e : forward) {
    const Edge& edge = edges_[e];
    out.push_back(Triple{nodes_[edge.source].term, edge.prop.iri, nodes_[edge.target].term});
  }
  return out;
}

Graph build_graph(const TripleSet& triples) { return Graph(triples.triples); }

std::span<const EdgeId> neighbourhood(const Graph& graph, NodeId n) {
  return graph.neighbourhood(n);
}

}  // namespace shexd
