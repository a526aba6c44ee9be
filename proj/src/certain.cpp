#include "shexd/certain.hpp"

#include <functional>

#include "shexd/error.hpp"

namespace shexd {

CertainTyping::CertainTyping(const Graph& graph, const Schema& schema, EngineOptions options)
    : graph_(&graph), schema_(&schema), options_(options) {
  require_well_defined(schema);
  negated_ = negated_shapes(schema);
  region_ = reachable_labels(schema, negated_);
}

bool CertainTyping::holds(NodeId node, const ShapeLabel& label) const { return decide(node, label).holds; }

const LocalWitness* CertainTyping::witness(NodeId node, const ShapeLabel& label) const {
  const Decision& d = decide(node, label);
  return d.holds ? &d.witness : nullptr;
}

const CertainTyping::Decision& CertainTyping::decide(NodeId node, const ShapeLabel& label) const {
  auto key = std::make_pair(node, label);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  if (!decidable(label)) throw Error("shape <" + label + "> is not reachable from a negated shape");

  const ShapeDefinition& def = schema_->shape(label);
  Decision d;
  const Schema* la = options_.lookahead ? schema_ : nullptr;
  for (CandidateWitnesses it(*graph_, node, def, la); !it.done(); it.next()) {
    LocalWitness w = it.current();
    if (!check_local_witness(*graph_, node, def, w, options_.match)) continue;
    if (!agrees_with_certain(propagation(*graph_, def, w), *this)) continue;
    if (!check_gtw_extra(*graph_, *schema_, label, w, *this)) continue;
    d.holds = true;
    d.witness = std::move(w);
    break;
  }
  return memo_.emplace(std::move(key), std::move(d)).first->second;
}

std::vector<ShapeLabel> CertainTyping::decision_order() const {
  DependencyGraph g = dependency_graph(*schema_);
  std::vector<ShapeLabel> order;
  std::set<ShapeLabel> done;
  std::function<void(const ShapeLabel&)> visit = [&](const ShapeLabel& l) {
    if (!done.insert(l).second) return;
    for (const auto& t : g[l]) visit(t);
    order.push_back(l);
  };
  for (const auto& l : region_) visit(l);
  return order;
}

void CertainTyping::decide_all() const {
  for (const auto& label : decision_order())
    for (NodeId n = 0; n < graph_->node_count(); ++n) decide(n, label);
}

Typing CertainTyping::typing() const {
  decide_all();
  Typing out;
  for (const auto& [key, d] : memo_) {
    bool negated = negated_.count(key.second) != 0;
    if (d.holds) out.insert(pos(key.first, key.second));
    else if (negated) out.insert(neg(key.first, key.second));
  }
  return out;
}

bool agrees_with_certain(const Typing& propagated, const CertainTyping& certain) {
  for (const auto& e : propagated) {
    if (e.positive) {
      if (certain.decidable(e.shape) && !certain.holds(e.node, e.shape)) return false;
    } else {
      if (!certain.negated().count(e.shape) || certain.holds(e.node, e.shape)) return false;
    }
  }
  return true;
}

bool check_gtw_extra(const Graph& graph, const Schema& schema, const ShapeLabel& shape,
                     const LocalWitness& witness, const CertainTyping& certain) {
  const ShapeDefinition& def = schema.shape(shape);
  auto constraints = def.constraints();
  for (const auto& [e, c] : witness) {
    if (c.kind != Consumer::Kind::Extra) continue;
    const Edge& edge = graph.edge(e);
    const Value& v = graph.val(edge.target);
    for (const auto* tc : constraints) {
      if (tc->prop != edge.prop) continue;
      bool violated = false;
      for (const auto& a : tc->value_class) {
        if (const auto* vs = std::get_if<ValueSet>(&a)) {
          violated = !value_satisfies(v, *vs);
        } else {
          const auto& ref = std::get<ShapeRef>(a);
          // the opposite of the conjunct must be certain
          if (!certain.decidable(ref.label)) continue;
          bool h = certain.holds(edge.target, ref.label);
          violated = ref.negated ? h : !h;
          if (!ref.negated && !certain.negated().count(ref.label)) violated = false;
        }
        if (violated) break;
      }
      if (!violated) return false;
    }
  }
  return true;
}

}  // namespace shexd
