#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "shexd/bag.hpp"
#include "shexd/graph.hpp"
#include "shexd/schema.hpp"
#include "shexd/typing.hpp"

namespace shexd {

// Total map from the focus node's neighbourhood to triple consumers.
using LocalWitness = std::map<EdgeId, Consumer>;

struct MatchOptions {
  std::size_t bag_bound = kDefaultBagBound;
  bool force_brute = false;  // skip the interval fast path
};

bool value_satisfies(const Value& value, const ValueSet& set);

// Extra(q) matches an edge labelled q; ByConstraint(Ci) matches when the
// property agrees and every value-set conjunct holds (shape conjuncts are
// left to propagation). Open never matches here.
bool edge_matches(const Graph& graph, const Edge& edge, const Consumer& consumer,
                  const ShapeDefinition& def);

// {Open} when no triple constraint and no EXTRA names the edge's property;
// otherwise the matching ByConstraint consumers in id order, then Extra.
// With `lookahead`, ByConstraint(Ci) is dropped when a positive shape
// conjunct of Ci requires a property the opposite node lacks.
std::vector<Consumer> matching_consumers(const Graph& graph, EdgeId edge, const ShapeDefinition& def,
                                         const Schema* lookahead = nullptr);

// Directed properties every neighbourhood satisfying `expr` must contain.
std::set<DirectedProperty> required_properties(const ShapeExpr& expr);

// Drops ByConstraint consumers ruled out by one-step look-ahead.
std::vector<Consumer> lookahead_prune(const std::vector<Consumer>& list, const Graph& graph, EdgeId edge,
                                      const ShapeDefinition& def, const Schema& schema);

// Lazy enumeration of the cartesian product of the matching lists of the
// neighbourhood edges (canonical edge order, last edge varying fastest).
class CandidateWitnesses {
 public:
  CandidateWitnesses() = default;
  CandidateWitnesses(const Graph& graph, NodeId node, const ShapeDefinition& def,
                     const Schema* lookahead = nullptr);

  // Number of candidates; saturates at UINT64_MAX.
  std::uint64_t count() const { return count_; }
  std::uint64_t position() const { return position_; }
  bool done() const { return done_; }
  LocalWitness current() const;
  void next();

  const std::vector<EdgeId>& edges() const { return edges_; }
  const std::vector<std::vector<Consumer>>& lists() const { return lists_; }

 private:
  std::vector<EdgeId> edges_;
  std::vector<std::vector<Consumer>> lists_;
  std::vector<std::size_t> digits_;
  std::uint64_t count_ = 0;
  std::uint64_t position_ = 0;
  bool done_ = true;
};

// Materializes every candidate; for tests and small nodes.
std::vector<LocalWitness> candidate_witnesses(const Graph& graph, NodeId node, const ShapeDefinition& def,
                                              const Schema* lookahead = nullptr);

// Restriction of the witness to ByConstraint consumers, as a bag of ids.
ConsumerBag constraint_bag(const LocalWitness& witness);

// Decides witness, neigh(node) |- def: edge/consumer agreement, no Extra
// where a value-set-only constraint matches, Open only for unmentioned
// properties, CLOSED / ^CLOSED, and the ByConstraint bag against the
// expression (interval when single-occurrence after unfolding, otherwise
// exhaustive). Throws BagTooLarge from the exhaustive matcher.
bool check_local_witness(const Graph& graph, NodeId node, const ShapeDefinition& def,
                         const LocalWitness& witness, const MatchOptions& options = {});

// Decides whether the bag of triple-constraint ids matches the expression.
bool expr_matches(const ShapeExpr& expr, const ConsumerBag& bag, const MatchOptions& options = {});

// (target, T) / (target, ¬T) for each shape conjunct of each constraint an
// edge is assigned to.
Typing propagation(const Graph& graph, const ShapeDefinition& def, const LocalWitness& witness);

}  // namespace shexd
