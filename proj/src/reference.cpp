#include "shexd/reference.hpp"

#include "shexd/error.hpp"

namespace shexd {

namespace {

struct SearchState {
  Typing typing;
  std::map<Hypothesis, LocalWitness> lw;
  std::set<Hypothesis> pending;
  std::set<NodeId> nodes;
};

class ReferenceSearch {
 public:
  ReferenceSearch(const Graph& graph, const Schema& schema, const ReferenceOptions& options)
      : graph_(graph),
        schema_(schema),
        options_(options),
        match_{options.bag_bound, true},
        certain_(graph, schema, EngineOptions{match_, false}) {}

  const CertainTyping& certain() const { return certain_; }

  bool search(SearchState& state) {
    if (state.pending.empty()) {
      GlobalTypingWitness gtw{state.typing, state.lw};
      return !witness_defect(gtw, graph_, schema_, certain_, match_);
    }
    Hypothesis h = *state.pending.begin();
    state.pending.erase(state.pending.begin());
    const ShapeDefinition& def = schema_.shape(h.second);

    CandidateWitnesses cur(graph_, h.first, def);
    if (cur.count() > options_.max_candidates)
      throw SearchBudgetExceeded("node " + graph_.node(h.first).key + " has " + std::to_string(cur.count()) +
                                 " candidates for <" + h.second + ">, above the bound of " +
                                 std::to_string(options_.max_candidates));
    for (; !cur.done(); cur.next()) {
      if (++steps_ > options_.max_steps)
        throw SearchBudgetExceeded("reference search exceeded " + std::to_string(options_.max_steps) + " steps");
      LocalWitness w = cur.current();
      if (!check_local_witness(graph_, h.first, def, w, match_)) continue;
      if (!check_gtw_extra(graph_, schema_, h.second, w, certain_)) continue;
      Typing p = propagation(graph_, def, w);
      if (!agrees_with_certain(p, certain_)) continue;
      bool clash = false;
      for (const auto& e : p) clash = clash || state.typing.count(e.negated());
      if (clash) continue;

      SearchState next = state;
      next.lw[h] = std::move(w);
      for (const auto& e : p) {
        next.typing.insert(e);
        if (!e.positive || next.lw.count({e.node, e.shape})) continue;
        next.pending.insert({e.node, e.shape});
        add_node(next, e.node);
      }
      if (search(next)) {
        state = std::move(next);
        return true;
      }
    }
    return false;
  }

  void add_node(SearchState& state, NodeId n) {
    if (state.nodes.insert(n).second && state.nodes.size() > options_.max_nodes)
      throw SearchBudgetExceeded("reference search reached more than " + std::to_string(options_.max_nodes) +
                                 " nodes");
  }

 private:
  const Graph& graph_;
  const Schema& schema_;
  ReferenceOptions options_;
  MatchOptions match_;
  CertainTyping certain_;
  std::uint64_t steps_ = 0;
};

}  // namespace

ValidationResult reference_validate(const Graph& graph, const Schema& schema, const Typing& typing0,
                                    const ReferenceOptions& options) {
  ReferenceSearch search(graph, schema, options);
  const CertainTyping& certain = search.certain();
  check_initial_typing(typing0, graph, schema, certain.negated());

  ValidationFailure failure;
  for (const auto& e : typing0)
    if (certain.negated().count(e.shape) && certain.holds(e.node, e.shape) != e.positive)
      failure.failed.push_back(e);
  if (!failure.failed.empty() || !is_consistent(typing0)) {
    failure.reason = ValidationFailure::Reason::IncompatibleInitialTyping;
    failure.leaves = failure.failed;
    return failure;
  }

  SearchState state;
  state.typing = typing0;
  for (const auto& e : typing0) {
    if (!e.positive) continue;
    state.pending.insert({e.node, e.shape});
    search.add_node(state, e.node);
  }
  if (search.search(state)) return GlobalTypingWitness{state.typing, state.lw};

  failure.reason = ValidationFailure::Reason::Unsatisfiable;
  for (const auto& e : typing0)
    if (e.positive) failure.failed.push_back(e);
  return failure;
}

}  // namespace shexd
