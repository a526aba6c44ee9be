#pragma once

#include <cstddef>
#include <cstdint>

#include "shexd/verify.hpp"

namespace shexd {

struct ReferenceOptions {
  std::size_t max_nodes = 12;        // distinct nodes among the hypotheses
  std::size_t max_candidates = 256;  // per hypothesis
  std::uint64_t max_steps = 2'000'000;
  std::size_t bag_bound = kDefaultBagBound;
};

// Exhaustive oracle: depth-first search over every candidate local witness
// of every reachable hypothesis, with full chronological backtracking. Only
// the exhaustive bag matcher is used, and a complete assignment is accepted
// iff it passes witness verification. Throws SearchBudgetExceeded when a
// bound in `options` is hit.
ValidationResult reference_validate(const Graph& graph, const Schema& schema, const Typing& typing0,
                                    const ReferenceOptions& options = {});

}  // namespace shexd
