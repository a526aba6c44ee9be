#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "shexd/graph.hpp"
#include "shexd/rdf.hpp"

namespace shexd {

using ShapeLabel = std::string;

inline constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();

enum class NodeKind { Iri, BNode, Literal, NonLiteral };

const char* to_string(NodeKind kind);

struct ValueSet {
  enum class Kind { Values, Datatype, NodeKind };

  Kind kind = Kind::Values;
  std::vector<Value> values;  // Kind::Values
  std::string datatype;       // Kind::Datatype
  NodeKind node_kind = NodeKind::Iri;

  static ValueSet of_values(std::vector<Value> values);
  static ValueSet of_datatype(std::string iri);
  static ValueSet of_node_kind(NodeKind kind);

  bool operator==(const ValueSet&) const = default;
};

struct ShapeRef {
  ShapeLabel label;
  bool negated = false;

  bool operator==(const ShapeRef&) const = default;
};

using AtomicConstr = std::variant<ValueSet, ShapeRef>;

struct TripleConstraint {
  int id = 0;  // 1-based, unique per shape
  DirectedProperty prop;
  std::vector<AtomicConstr> value_class;  // conjunction

  bool all_value_sets() const;
  bool operator==(const TripleConstraint&) const = default;
};

enum class ExprKind { Empty, TC, SomeOf, Group, Repetition };

struct ShapeExpr {
  ExprKind kind = ExprKind::Empty;
  TripleConstraint tc;              // ExprKind::TC
  std::vector<ShapeExpr> children;  // SomeOf, Group: >= 1; Repetition: exactly 1
  std::uint32_t min = 1;            // Repetition
  std::uint32_t max = 1;            // Repetition; kUnbounded for *

  static ShapeExpr empty();
  static ShapeExpr triple(TripleConstraint tc);
  static ShapeExpr some_of(std::vector<ShapeExpr> children);
  static ShapeExpr group(std::vector<ShapeExpr> children);
  static ShapeExpr repeat(ShapeExpr child, std::uint32_t min, std::uint32_t max);

  const ShapeExpr& child() const { return children.front(); }

  friend bool operator==(const ShapeExpr& a, const ShapeExpr& b);
};

struct ShapeDefinition {
  bool closed_fwd = false;
  bool closed_inv = false;
  std::vector<DirectedProperty> extra;  // distinct, source order
  ShapeExpr expr;

  bool is_extra(const DirectedProperty& prop) const;
  // Triple constraints in id order: result[i].id == i + 1.
  std::vector<const TripleConstraint*> constraints() const;

  bool operator==(const ShapeDefinition&) const = default;
};

struct Schema {
  std::map<ShapeLabel, ShapeDefinition> shapes;
  PrefixMap prefixes;  // display only; ignored by ==

  const ShapeDefinition& shape(const ShapeLabel& label) const;
  bool has_shape(const ShapeLabel& label) const { return shapes.count(label) != 0; }

  friend bool operator==(const Schema& a, const Schema& b) { return a.shapes == b.shapes; }
};

// Calls `fn` for every triple constraint of `expr`, in source order.
void for_each_constraint(const ShapeExpr& expr, const std::function<void(const TripleConstraint&)>& fn);

// Checks structural invariants: ids 1..k unique per shape, min <= max,
// non-empty SomeOf/Group, one Repetition child, and that every referenced
// label is defined. Throws UndefinedShapeReference or Error.
void check_structure(const Schema& schema);

using DependencyGraph = std::map<ShapeLabel, std::set<ShapeLabel>>;

// Edge S -> T iff T occurs (negated or not) in a value class of expr(S).
// Every label of the schema is a key.
DependencyGraph dependency_graph(const Schema& schema);

// Labels under '!' in expr(S), plus the shape conjuncts of any triple
// constraint of S whose property is extra in S.
std::set<ShapeLabel> negated_shapes(const Schema& schema, const ShapeLabel& label);
// Union over all shapes.
std::set<ShapeLabel> negated_shapes(const Schema& schema);

struct WellDefinedness {
  bool ok = true;
  ShapeLabel label;                // negated label whose reachable part is cyclic
  std::vector<ShapeLabel> cycle;   // first label repeated at the end

  std::string message() const;
};

WellDefinedness check_well_defined(const Schema& schema);
// Throws NotWellDefined with the cycle in the message.
void require_well_defined(const Schema& schema);

// Labels reachable (including themselves) from `roots` in the dependency graph.
std::set<ShapeLabel> reachable_labels(const Schema& schema, const std::set<ShapeLabel>& roots);

struct Consumer {
  enum class Kind : std::uint8_t { ByConstraint, Extra, Open };

  Kind kind = Kind::Open;
  int tc = 0;             // ByConstraint
  DirectedProperty prop;  // Extra

  static Consumer by_constraint(int id) { return {Kind::ByConstraint, id, {}}; }
  static Consumer extra(DirectedProperty prop) { return {Kind::Extra, 0, std::move(prop)}; }
  static Consumer open() { return {}; }

  // "C3", "extra:<dirprop>", "open"
  std::string to_string() const;
  static Consumer from_string(std::string_view text);

  auto operator<=>(const Consumer&) const = default;
  bool operator==(const Consumer&) const = default;
};

// ByConstraint for each id, Extra for each extra property, then Open.
std::vector<Consumer> triple_consumers(const ShapeDefinition& def);

// Non-fatal schema warnings: EXTRA properties that no triple constraint
// mentions, and value classes that conjoin @<T> with !@<T>.
std::vector<std::string> lint(const Schema& schema);

}  // namespace shexd
