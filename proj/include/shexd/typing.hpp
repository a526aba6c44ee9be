#pragma once

#include <compare>
#include <set>
#include <string>

#include "shexd/graph.hpp"
#include "shexd/schema.hpp"

namespace shexd {

// (node, S) when positive, (node, ¬S) otherwise.
struct TypingEntry {
  NodeId node = 0;
  ShapeLabel shape;
  bool positive = true;

  TypingEntry negated() const { return {node, shape, !positive}; }
  auto operator<=>(const TypingEntry&) const = default;
  bool operator==(const TypingEntry&) const = default;
};

using Typing = std::set<TypingEntry>;

// Also handy for building typings in tests and the CLI.
inline TypingEntry pos(NodeId n, ShapeLabel s) { return {n, std::move(s), true}; }
inline TypingEntry neg(NodeId n, ShapeLabel s) { return {n, std::move(s), false}; }

// No (n, S) is present with both signs.
bool is_consistent(const Typing& typing);

// False iff some (n, T) is positive in one typing and negative in the other.
bool check_compatible(const Typing& a, const Typing& b);

std::string to_string(const TypingEntry& entry, const Graph& graph, const PrefixMap& prefixes = {});

}  // namespace shexd
