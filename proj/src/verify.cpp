#include "shexd/verify.hpp"

#include <deque>

#include "shexd/error.hpp"

namespace shexd {

void check_initial_typing(const Typing& typing0, const Graph& graph, const Schema& schema,
                          const std::set<ShapeLabel>& negated) {
  for (const auto& e : typing0) {
    if (e.node >= graph.node_count()) throw UnknownNode("#" + std::to_string(e.node));
    if (!schema.has_shape(e.shape)) throw UndefinedShapeReference(e.shape);
    if (!e.positive && !negated.count(e.shape))
      throw Error("negative initial typing for <" + e.shape + ">, which never appears negated");
  }
}

std::optional<std::string> witness_defect(const GlobalTypingWitness& gtw, const Graph& graph,
                                          const Schema& schema, const CertainTyping& certain,
                                          const MatchOptions& options) {
  auto show = [&](const TypingEntry& e) { return to_string(e, graph); };
  if (!is_consistent(gtw.typing)) return "typing is inconsistent";
  for (const auto& e : gtw.typing) {
    if (e.node >= graph.node_count()) return "unknown node in " + show(e);
    if (!schema.has_shape(e.shape)) return "undefined shape in " + show(e);
    if (e.positive && !gtw.lw.count({e.node, e.shape})) return "no local witness for " + show(e);
  }
  for (const auto& [h, w] : gtw.lw) {
    TypingEntry e = pos(h.first, h.second);
    if (!gtw.typing.count(e)) return "local witness for " + show(e) + ", which is not typed";
    const ShapeDefinition& def = schema.shape(h.second);
    if (!check_local_witness(graph, h.first, def, w, options)) return "invalid local witness for " + show(e);
    for (const auto& p : propagation(graph, def, w))
      if (!gtw.typing.count(p)) return show(e) + " propagates " + show(p) + ", which is not typed";
    if (!check_gtw_extra(graph, schema, h.second, w, certain))
      return "an EXTRA edge of " + show(e) + " satisfies the constraint it skips";
  }
  for (const auto& e : gtw.typing) {
    if (!e.positive) {
      if (!certain.negated().count(e.shape) || certain.holds(e.node, e.shape))
        return show(e) + " is not a certain negative";
    } else if (certain.decidable(e.shape) && !certain.holds(e.node, e.shape)) {
      return show(e) + " contradicts the certain typing";
    }
  }
  return std::nullopt;
}

bool verify_global_typing_witness(const GlobalTypingWitness& gtw, const Graph& graph, const Schema& schema,
                                  const CertainTyping& certain, const MatchOptions& options) {
  return !witness_defect(gtw, graph, schema, certain, options).has_value();
}

GlobalTypingWitness close_witness(const Typing& roots, const std::map<Hypothesis, LocalWitness>& lw,
                                  const CertainTyping& certain) {
  GlobalTypingWitness out;
  std::deque<TypingEntry> queue(roots.begin(), roots.end());
  while (!queue.empty()) {
    TypingEntry e = queue.front();
    queue.pop_front();
    if (!out.typing.insert(e).second || !e.positive) continue;
    Hypothesis h{e.node, e.shape};
    const LocalWitness* w = nullptr;
    if (auto it = lw.find(h); it != lw.end()) w = &it->second;
    else if (certain.decidable(e.shape)) w = certain.witness(e.node, e.shape);
    if (!w) throw Error("no proof for " + to_string(e, certain.graph()));
    out.lw.emplace(h, *w);
    for (const auto& p : propagation(certain.graph(), certain.schema().shape(e.shape), *w)) queue.push_back(p);
  }
  return out;
}

}  // namespace shexd
