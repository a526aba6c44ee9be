#include "shexd/flooding.hpp"

#include <deque>

namespace shexd {

std::set<Hypothesis> to_remove(const Hypothesis& failed, const RequiresRelation& relation,
                               const std::set<Hypothesis>& protect) {
  std::map<Hypothesis, std::set<Hypothesis>> requirers;
  std::map<Hypothesis, std::set<Hypothesis>> required;
  for (const auto& [a, b] : relation) {
    requirers[b].insert(a);
    required[a].insert(b);
  }
  std::set<Hypothesis> out;
  for (const auto& a : requirers[failed])
    if (a != failed) out.insert(a);
  std::deque<Hypothesis> work(out.begin(), out.end());
  while (!work.empty()) {
    Hypothesis a = work.front();
    work.pop_front();
    for (const auto& b : required[a]) {
      if (b == failed || out.count(b) || protect.count(b)) continue;
      bool all = true;
      for (const auto& r : requirers[b]) all = all && out.count(r);
      if (!all) continue;
      out.insert(b);
      work.push_back(b);
    }
  }
  return out;
}

namespace {

class Flooding {
 public:
  Flooding(const CertainTyping& certain, const Typing& typing0, const EngineOptions& options,
           FloodingStats& stats)
      : certain_(certain),
        graph_(certain.graph()),
        schema_(certain.schema()),
        typing0_(typing0),
        options_(options),
        stats_(stats) {}

  ValidationResult run() {
    check_initial_typing(typing0_, graph_, schema_, certain_.negated());

    ValidationFailure incompatible;
    incompatible.reason = ValidationFailure::Reason::IncompatibleInitialTyping;
    for (const auto& e : typing0_) {
      if (certain_.negated().count(e.shape) && certain_.holds(e.node, e.shape) != e.positive)
        incompatible.failed.push_back(e);
    }
    if (!incompatible.failed.empty()) {
      incompatible.leaves = incompatible.failed;
      return incompatible;
    }

    for (const auto& e : typing0_) {
      if (!e.positive) continue;
      Hypothesis h{e.node, e.shape};
      roots_.insert(h);
      add(h);
    }

    while (!queue_.empty()) {
      Hypothesis h = queue_.front();
      queue_.pop_front();
      queued_.erase(h);
      if (!hyp_.count(h) || lw_.count(h)) continue;
      if (certain_.decidable(h.second)) {
        if (certain_.holds(h.first, h.second)) {
          ++stats_.certain_skips;
          continue;
        }
        fail(h);
        continue;
      }
      search(h);
    }

    std::vector<TypingEntry> failed_roots;
    for (const auto& e : typing0_)
      if (e.positive && failed_.count({e.node, e.shape})) failed_roots.push_back(e);
    if (!failed_roots.empty()) {
      ValidationFailure f;
      f.reason = ValidationFailure::Reason::Unsatisfiable;
      f.failed = failed_roots;
      for (const auto& e : failed_roots) f.candidates[e] = examined_[{e.node, e.shape}];
      for (const auto& h : failed_)
        if (!blamed_.count(h)) f.leaves.push_back(pos(h.first, h.second));
      return f;
    }
    return close_witness(typing0_, lw_, certain_);
  }

 private:
  void add(const Hypothesis& h) {
    if (hyp_.count(h)) return;
    hyp_.insert(h);
    if (ever_.insert(h).second) ++stats_.hypotheses;
    enqueue(h);
  }

  void enqueue(const Hypothesis& h) {
    if (queued_.insert(h).second) queue_.push_back(h);
  }

  CandidateWitnesses& cursor(const Hypothesis& h) {
    auto it = cursors_.find(h);
    if (it == cursors_.end()) {
      const Schema* la = options_.lookahead ? &schema_ : nullptr;
      it = cursors_.emplace(h, CandidateWitnesses(graph_, h.first, schema_.shape(h.second), la)).first;
    }
    return it->second;
  }

  void search(const Hypothesis& h) {
    stats_.searched.insert(h);
    CandidateWitnesses& cur = cursor(h);
    for (; !cur.done(); cur.next()) {
      ++examined_[h];
      ++stats_.candidates_examined;
      if (accept(h, cur.current())) return;
    }
    fail(h);
  }

  bool accept(const Hypothesis& h, LocalWitness w) {
    const ShapeDefinition& def = schema_.shape(h.second);
    if (!check_local_witness(graph_, h.first, def, w, options_.match)) return false;
    if (!check_gtw_extra(graph_, schema_, h.second, w, certain_)) return false;
    Typing p = propagation(graph_, def, w);
    if (!agrees_with_certain(p, certain_)) return false;
    for (const auto& e : p) {
      if (e.positive && failed_.count({e.node, e.shape})) {
        blamed_.insert(h);
        return false;
      }
    }
    lw_[h] = std::move(w);
    for (const auto& e : p) {
      if (!e.positive) continue;
      Hypothesis b{e.node, e.shape};
      requires_[h].insert(b);
      required_by_[b].insert(h);
      add(b);
    }
    return true;
  }

  void drop_witness(const Hypothesis& h) {
    lw_.erase(h);
    for (const auto& b : requires_[h]) required_by_[b].erase(h);
    requires_.erase(h);
  }

  void fail(const Hypothesis& h) {
    failed_.insert(h);
    hyp_.erase(h);
    ++stats_.backtracks;

    RequiresRelation rel;
    for (const auto& [a, bs] : requires_)
      for (const auto& b : bs) rel.emplace(a, b);
    std::set<Hypothesis> removed = to_remove(h, rel, roots_);
    std::set<Hypothesis> direct = required_by_[h];
    direct.erase(h);

    for (const auto& a : removed) {
      drop_witness(a);
      if (direct.count(a)) {
        cursor(a).next();
        blamed_.insert(a);
        enqueue(a);
      } else {
        hyp_.erase(a);
      }
    }
    required_by_.erase(h);
  }

  const CertainTyping& certain_;
  const Graph& graph_;
  const Schema& schema_;
  const Typing& typing0_;
  EngineOptions options_;
  FloodingStats& stats_;

  std::set<Hypothesis> roots_;
  std::set<Hypothesis> hyp_;
  std::set<Hypothesis> ever_;
  std::map<Hypothesis, LocalWitness> lw_;
  std::map<Hypothesis, std::set<Hypothesis>> requires_;
  std::map<Hypothesis, std::set<Hypothesis>> required_by_;
  std::map<Hypothesis, CandidateWitnesses> cursors_;
  std::deque<Hypothesis> queue_;
  std::set<Hypothesis> queued_;
  std::set<Hypothesis> failed_;
  std::set<Hypothesis> blamed_;
  std::map<Hypothesis, std::uint64_t> examined_;
};

}  // namespace

ValidationResult flooding_validation(const CertainTyping& certain, const Typing& typing0,
                                     const EngineOptions& options, FloodingStats* stats) {
  FloodingStats local;
  return Flooding(certain, typing0, options, stats ? *stats : local).run();
}

ValidationResult flooding_validation(const Graph& graph, const Schema& schema, const Typing& typing0,
                                     const EngineOptions& options, FloodingStats* stats) {
  CertainTyping certain(graph, schema, options);
  return flooding_validation(certain, typing0, options, stats);
}

}  // namespace shexd
