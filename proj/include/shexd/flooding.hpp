#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "shexd/verify.hpp"

namespace shexd {

struct FloodingStats {
  std::uint64_t candidates_examined = 0;
  std::uint64_t certain_skips = 0;      // hypotheses answered by the certain typing
  std::uint64_t hypotheses = 0;         // distinct hypotheses ever enqueued
  std::uint64_t backtracks = 0;
  std::set<Hypothesis> searched;        // hypotheses whose candidates were enumerated
};

using RequiresRelation = std::set<std::pair<Hypothesis, Hypothesis>>;  // (a, b): a requires b

// The hypotheses invalidated when `failed` runs out of candidates: its
// direct requirers, then every hypothesis outside `protect` all of whose
// (one or more) requirers are already invalidated.
std::set<Hypothesis> to_remove(const Hypothesis& failed, const RequiresRelation& relation,
                               const std::set<Hypothesis>& protect = {});

// Builds a global typing witness containing typing0, or reports why none
// exists. Hypotheses are checked in FIFO order; candidate local witnesses
// are drawn lazily in lexicographic order and gated by the local check,
// gtw-extra and agreement with the certain typing. A hypothesis that runs
// out of candidates invalidates the witnesses of the hypotheses requiring
// it; those resume from their next candidate. Throws BagTooLarge and
// NotWellDefined; rejects malformed typing0 with Error.
ValidationResult flooding_validation(const Graph& graph, const Schema& schema, const Typing& typing0,
                                     const EngineOptions& options = {}, FloodingStats* stats = nullptr);

// Same, reusing a certain typing built for this graph and schema.
ValidationResult flooding_validation(const CertainTyping& certain, const Typing& typing0,
                                     const EngineOptions& options = {}, FloodingStats* stats = nullptr);

}  // namespace shexd
