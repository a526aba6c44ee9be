#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>

#include "shexd/graph.hpp"
#include "shexd/matching.hpp"
#include "shexd/schema.hpp"
#include "shexd/typing.hpp"

namespace shexd {

struct EngineOptions {
  MatchOptions match;
  bool lookahead = false;
};

// The certain typing: every (node, S) with S reachable from a negated label
// is decided exactly, bottom-up over the (acyclic) reachable part of the
// dependency graph. Decisions are made on demand and memoized; decide_all()
// computes every pair in reverse topological order.
class CertainTyping {
 public:
  // Throws NotWellDefined.
  CertainTyping(const Graph& graph, const Schema& schema, EngineOptions options = {});

  const Graph& graph() const { return *graph_; }
  const Schema& schema() const { return *schema_; }

  // negated_shapes(Sch)
  const std::set<ShapeLabel>& negated() const { return negated_; }
  // Labels reachable from a negated label; their pairs are decidable.
  const std::set<ShapeLabel>& region() const { return region_; }
  bool decidable(const ShapeLabel& label) const { return region_.count(label) != 0; }

  // Requires decidable(label).
  bool holds(NodeId node, const ShapeLabel& label) const;
  // Witness of a positive decision; nullptr when the pair does not hold.
  const LocalWitness* witness(NodeId node, const ShapeLabel& label) const;

  void decide_all() const;
  // Labels of the region in reverse topological order (dependencies first).
  std::vector<ShapeLabel> decision_order() const;

  // Decided pairs: both signs for negated labels, positives for the other
  // region labels.
  Typing typing() const;
  std::size_t decided() const { return memo_.size(); }

 private:
  struct Decision {
    bool holds = false;
    LocalWitness witness;
  };

  const Decision& decide(NodeId node, const ShapeLabel& label) const;

  const Graph* graph_;
  const Schema* schema_;
  EngineOptions options_;
  std::set<ShapeLabel> negated_;
  std::set<ShapeLabel> region_;
  mutable std::map<std::pair<NodeId, ShapeLabel>, Decision> memo_;
};

// gtw-extra with the certain typing standing in for the typing: every edge
// assigned Extra(q) violates some conjunct of every constraint on q, either a
// value set it fails or a shape conjunct whose opposite sign is certain.
bool check_gtw_extra(const Graph& graph, const Schema& schema, const ShapeLabel& shape,
                     const LocalWitness& witness, const CertainTyping& certain);

// The propagated entries are consistent with the certain typing: positives on
// decidable labels hold, and negatives are certain negatives.
bool agrees_with_certain(const Typing& propagated, const CertainTyping& certain);

}  // namespace shexd
