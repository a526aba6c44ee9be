#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "shexd/reference.hpp"

namespace shexd {

struct EditSet {
  std::set<Triple> deletions;   // present in the graph
  std::set<Triple> insertions;  // absent from the graph

  std::size_t size() const { return deletions.size() + insertions.size(); }
  auto operator<=>(const EditSet&) const = default;
  bool operator==(const EditSet&) const = default;
};

// The finite universe insertions are drawn from.
struct InsertionDomain {
  std::vector<Term> subjects;  // non-literal nodes plus fresh blanks
  std::vector<std::string> properties;
  std::vector<Term> objects;  // nodes, fresh blanks, value-set members, literal pool
  std::vector<Term> fresh;    // the fresh blanks, in order of use

  // subjects x properties x objects, without the triples of `graph`.
  std::vector<Triple> insertions(const Graph& graph) const;
};

// Nodes of the graph plus `fresh_blanks` new blank nodes; properties of the
// schema and the graph; literals of the graph, literal value-set members and
// one canonical literal per datatype the schema mentions.
InsertionDomain insertion_domain(const Graph& graph, const Schema& schema, std::size_t fresh_blanks = 1);

std::vector<Triple> apply_edits(const Graph& graph, const EditSet& edits);

// The edit set turning `from` into `to`.
EditSet difference(const Graph& from, const Graph& to);

// Applies the edits and runs the reference validator on typing0 (given over
// the nodes of `graph`). Edit sets that remove a node of typing0 fail.
bool is_valid_after(const Graph& graph, const EditSet& edits, const Schema& schema, const Typing& typing0,
                    const ReferenceOptions& options = {});

struct RepairOptions {
  std::size_t max_edits = 2;
  std::uint64_t max_checks = 5'000'000;  // edit sets validated before giving up
  ReferenceOptions reference;
};

struct RepairReport {
  bool found = false;  // false: NoRepairWithinBudget
  std::size_t min_size = 0;
  std::vector<EditSet> repairs;  // sorted
  std::uint64_t checked = 0;
};

// Every valid edit set of the smallest size that has one, up to max_edits,
// by breadth-first search over sizes. Fresh blanks are used in order, so
// edit sets differing only by a renaming of fresh blanks appear once.
// Throws SearchBudgetExceeded.
RepairReport enumerate_repairs(const Graph& graph, const Schema& schema, const Typing& typing0,
                               const RepairOptions& options = {});

// graph_prime is valid and no strictly smaller edit set of graph (within
// the insertion domain) is. Exponential by design.
bool is_repair(const Graph& graph, const Graph& graph_prime, const Schema& schema, const Typing& typing0,
               std::size_t budget, const ReferenceOptions& options = {});

// {"minSize": k, "repairs": [{"delete": [...], "insert": [...]}...]} with
// N-Triples strings; minSize is null and "error" is set when none was found.
std::string repairs_to_json(const RepairReport& report);

}  // namespace shexd
