#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "shexd/certain.hpp"

namespace shexd {

using Hypothesis = std::pair<NodeId, ShapeLabel>;

struct GlobalTypingWitness {
  Typing typing;
  std::map<Hypothesis, LocalWitness> lw;  // one entry per positive typing entry

  bool operator==(const GlobalTypingWitness&) const = default;
};

struct ValidationFailure {
  enum class Reason { IncompatibleInitialTyping, Unsatisfiable };

  Reason reason = Reason::Unsatisfiable;
  std::vector<TypingEntry> failed;  // typing0 entries that could not be established
  std::vector<TypingEntry> leaves;  // hypotheses that ran out of candidates on their own
  std::map<TypingEntry, std::uint64_t> candidates;  // per failed entry: candidates examined
};

class ValidationResult {
 public:
  ValidationResult(GlobalTypingWitness w) : value_(std::move(w)) {}
  ValidationResult(ValidationFailure f) : value_(std::move(f)) {}

  bool ok() const { return std::holds_alternative<GlobalTypingWitness>(value_); }
  const GlobalTypingWitness& witness() const { return std::get<GlobalTypingWitness>(value_); }
  const ValidationFailure& failure() const { return std::get<ValidationFailure>(value_); }

 private:
  std::variant<GlobalTypingWitness, ValidationFailure> value_;
};

// Checks typing0 against graph and schema: nodes exist, labels are defined,
// negative entries only for negated labels. Throws Error.
void check_initial_typing(const Typing& typing0, const Graph& graph, const Schema& schema,
                          const std::set<ShapeLabel>& negated);

// The first defect found, or nullopt for a valid global typing witness:
// consistency; lw exactly on the positive entries; every local witness
// valid; propagations contained in the typing; negative entries certain;
// EXTRA edges violate the constraints they skip; entries on decidable
// labels agree with the certain typing.
std::optional<std::string> witness_defect(const GlobalTypingWitness& gtw, const Graph& graph,
                                          const Schema& schema, const CertainTyping& certain,
                                          const MatchOptions& options = {});

bool verify_global_typing_witness(const GlobalTypingWitness& gtw, const Graph& graph, const Schema& schema,
                                  const CertainTyping& certain, const MatchOptions& options = {});

// The certain facts a witness relies on, with their proofs: starting from
// `roots`, follows propagation through `lw` and the certain typing.
GlobalTypingWitness close_witness(const Typing& roots, const std::map<Hypothesis, LocalWitness>& lw,
                                  const CertainTyping& certain);

}  // namespace shexd
