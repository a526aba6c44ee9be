#include "shexd/matching.hpp"

#include <algorithm>
#include <limits>

namespace shexd {

bool value_satisfies(const Value& value, const ValueSet& set) {
  switch (set.kind) {
    case ValueSet::Kind::Values:
      return std::find(set.values.begin(), set.values.end(), value) != set.values.end();
    case ValueSet::Kind::Datatype:
      return value.is_literal() && value.datatype == set.datatype;
    case ValueSet::Kind::NodeKind:
      switch (set.node_kind) {
        case NodeKind::Iri: return value.is_iri();
        case NodeKind::BNode: return value.is_blank();
        case NodeKind::Literal: return value.is_literal();
        case NodeKind::NonLiteral: return !value.is_literal();
      }
  }
  return false;
}

static bool tc_matches(const Graph& graph, const Edge& edge, const TripleConstraint& tc) {
  if (tc.prop != edge.prop) return false;
  const Value& v = graph.val(edge.target);
  for (const auto& a : tc.value_class) {
    if (const auto* vs = std::get_if<ValueSet>(&a))
      if (!value_satisfies(v, *vs)) return false;
  }
  return true;
}

static const TripleConstraint* find_tc(const ShapeDefinition& def, int id) {
  const TripleConstraint* out = nullptr;
  for_each_constraint(def.expr, [&](const TripleConstraint& tc) {
    if (tc.id == id && !out) out = &tc;
  });
  return out;
}

bool edge_matches(const Graph& graph, const Edge& edge, const Consumer& consumer,
                  const ShapeDefinition& def) {
  switch (consumer.kind) {
    case Consumer::Kind::Extra: return consumer.prop == edge.prop && def.is_extra(edge.prop);
    case Consumer::Kind::ByConstraint: {
      const TripleConstraint* tc = find_tc(def, consumer.tc);
      return tc && tc_matches(graph, edge, *tc);
    }
    case Consumer::Kind::Open: return false;
  }
  return false;
}

std::vector<Consumer> matching_consumers(const Graph& graph, EdgeId edge_id, const ShapeDefinition& def,
                                         const Schema* lookahead) {
  const Edge& edge = graph.edge(edge_id);
  std::vector<Consumer> out;
  bool mentioned = def.is_extra(edge.prop);
  for (const auto* tc : def.constraints()) {
    if (tc->prop != edge.prop) continue;
    mentioned = true;
    if (tc_matches(graph, edge, *tc)) out.push_back(Consumer::by_constraint(tc->id));
  }
  if (def.is_extra(edge.prop)) out.push_back(Consumer::extra(edge.prop));
  if (!mentioned) {
    bool closed = edge.forward() ? def.closed_fwd : def.closed_inv;
    if (!closed) out.push_back(Consumer::open());
    return out;
  }
  if (lookahead) return lookahead_prune(out, graph, edge_id, def, *lookahead);
  return out;
}

std::set<DirectedProperty> required_properties(const ShapeExpr& expr) {
  switch (expr.kind) {
    case ExprKind::Empty: return {};
    case ExprKind::TC: return {expr.tc.prop};
    case ExprKind::Repetition:
      return expr.min >= 1 ? required_properties(expr.child()) : std::set<DirectedProperty>{};
    case ExprKind::Group: {
      std::set<DirectedProperty> out;
      for (const auto& c : expr.children) out.merge(required_properties(c));
      return out;
    }
    case ExprKind::SomeOf: {
      std::set<DirectedProperty> out = required_properties(expr.children.front());
      for (std::size_t i = 1; i < expr.children.size(); ++i) {
        std::set<DirectedProperty> next = required_properties(expr.children[i]);
        std::set<DirectedProperty> both;
        std::set_intersection(out.begin(), out.end(), next.begin(), next.end(),
                              std::inserter(both, both.begin()));
        out = std::move(both);
      }
      return out;
    }
  }
  return {};
}

std::vector<Consumer> lookahead_prune(const std::vector<Consumer>& list, const Graph& graph, EdgeId edge_id,
                                      const ShapeDefinition& def, const Schema& schema) {
  const Edge& edge = graph.edge(edge_id);
  std::vector<Consumer> out;
  for (const auto& c : list) {
    bool keep = true;
    if (c.kind == Consumer::Kind::ByConstraint) {
      const TripleConstraint* tc = find_tc(def, c.tc);
      for (const auto& a : tc->value_class) {
        const auto* ref = std::get_if<ShapeRef>(&a);
        if (!ref || ref->negated) continue;
        for (const auto& p : required_properties(schema.shape(ref->label).expr)) {
          if (!graph.has_property(edge.target, p)) keep = false;
        }
      }
    }
    if (keep) out.push_back(c);
  }
  return out;
}

CandidateWitnesses::CandidateWitnesses(const Graph& graph, NodeId node, const ShapeDefinition& def,
                                       const Schema* lookahead) {
  auto neigh = graph.neighbourhood(node);
  edges_.assign(neigh.begin(), neigh.end());
  count_ = 1;
  for (EdgeId e : edges_) {
    lists_.push_back(matching_consumers(graph, e, def, lookahead));
    std::uint64_t n = lists_.back().size();
    if (n == 0) count_ = 0;
    else if (count_ > std::numeric_limits<std::uint64_t>::max() / n) count_ = std::numeric_limits<std::uint64_t>::max();
    else count_ *= n;
  }
  digits_.assign(edges_.size(), 0);
  done_ = count_ == 0;
}

LocalWitness CandidateWitnesses::current() const {
  LocalWitness w;
  for (std::size_t i = 0; i < edges_.size(); ++i) w.emplace(edges_[i], lists_[i][digits_[i]]);
  return w;
}

void CandidateWitnesses::next() {
  if (done_) return;
  ++position_;
  for (std::size_t i = edges_.size(); i-- > 0;) {
    if (++digits_[i] < lists_[i].size()) return;
    digits_[i] = 0;
  }
  done_ = true;
}

std::vector<LocalWitness> candidate_witnesses(const Graph& graph, NodeId node, const ShapeDefinition& def,
                                              const Schema* lookahead) {
  std::vector<LocalWitness> out;
  for (CandidateWitnesses it(graph, node, def, lookahead); !it.done(); it.next()) out.push_back(it.current());
  return out;
}

ConsumerBag constraint_bag(const LocalWitness& witness) {
  ConsumerBag bag;
  for (const auto& [edge, c] : witness)
    if (c.kind == Consumer::Kind::ByConstraint) ++bag[c.tc];
  return bag;
}

bool expr_matches(const ShapeExpr& expr, const ConsumerBag& bag, const MatchOptions& options) {
  if (!options.force_brute) {
    if (is_single_occurrence(expr)) return bag_matches(expr, bag);
    ShapeExpr unfolded = unfold_repetitions(expr);
    if (is_single_occurrence(unfolded)) return bag_matches(unfolded, bag);
  }
  return brute_match(expr, bag, options.bag_bound);
}

bool check_local_witness(const Graph& graph, NodeId node, const ShapeDefinition& def,
                         const LocalWitness& witness, const MatchOptions& options) {
  auto neigh = graph.neighbourhood(node);
  if (witness.size() != neigh.size()) return false;
  auto constraints = def.constraints();
  for (EdgeId e : neigh) {
    auto it = witness.find(e);
    if (it == witness.end()) return false;
    const Edge& edge = graph.edge(e);
    const Consumer& c = it->second;
    switch (c.kind) {
      case Consumer::Kind::ByConstraint:
        if (!edge_matches(graph, edge, c, def)) return false;
        break;
      case Consumer::Kind::Extra:
        if (!edge_matches(graph, edge, c, def)) return false;
        for (const auto* tc : constraints)
          if (tc->all_value_sets() && tc_matches(graph, edge, *tc)) return false;
        break;
      case Consumer::Kind::Open:
        if (def.is_extra(edge.prop)) return false;
        for (const auto* tc : constraints)
          if (tc->prop == edge.prop) return false;
        if (edge.forward() ? def.closed_fwd : def.closed_inv) return false;
        break;
    }
  }
  return expr_matches(def.expr, constraint_bag(witness), options);
}

Typing propagation(const Graph& graph, const ShapeDefinition& def, const LocalWitness& witness) {
  Typing out;
  for (const auto& [e, c] : witness) {
    if (c.kind != Consumer::Kind::ByConstraint) continue;
    const TripleConstraint* tc = find_tc(def, c.tc);
    if (!tc) continue;
    NodeId target = graph.edge(e).target;
    for (const auto& a : tc->value_class) {
      if (const auto* ref = std::get_if<ShapeRef>(&a)) out.insert({target, ref->label, !ref->negated});
    }
  }
  return out;
}

}  // namespace shexd
