#include "shexd/schema.hpp"

#include <algorithm>

#include "shexd/error.hpp"

namespace shexd {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Iri: return "IRI";
    case NodeKind::BNode: return "BNode";
    case NodeKind::Literal: return "Literal";
    case NodeKind::NonLiteral: return "NonLiteral";
  }
  return "?";
}

ValueSet ValueSet::of_values(std::vector<Value> values) {
  ValueSet v;
  v.kind = Kind::Values;
  v.values = std::move(values);
  return v;
}

ValueSet ValueSet::of_datatype(std::string iri) {
  ValueSet v;
  v.kind = Kind::Datatype;
  v.datatype = std::move(iri);
  return v;
}

ValueSet ValueSet::of_node_kind(NodeKind kind) {
  ValueSet v;
  v.kind = Kind::NodeKind;
  v.node_kind = kind;
  return v;
}

bool TripleConstraint::all_value_sets() const {
  return std::all_of(value_class.begin(), value_class.end(),
                     [](const AtomicConstr& a) { return std::holds_alternative<ValueSet>(a); });
}

ShapeExpr ShapeExpr::empty() { return ShapeExpr{}; }

ShapeExpr ShapeExpr::triple(TripleConstraint tc) {
  ShapeExpr e;
  e.kind = ExprKind::TC;
  e.tc = std::move(tc);
  return e;
}

ShapeExpr ShapeExpr::some_of(std::vector<ShapeExpr> children) {
  ShapeExpr e;
  e.kind = ExprKind::SomeOf;
  e.children = std::move(children);
  return e;
}

ShapeExpr ShapeExpr::group(std::vector<ShapeExpr> children) {
  ShapeExpr e;
  e.kind = ExprKind::Group;
  e.children = std::move(children);
  return e;
}

ShapeExpr ShapeExpr::repeat(ShapeExpr child, std::uint32_t min, std::uint32_t max) {
  ShapeExpr e;
  e.kind = ExprKind::Repetition;
  e.children.push_back(std::move(child));
  e.min = min;
  e.max = max;
  return e;
}

bool operator==(const ShapeExpr& a, const ShapeExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Empty: return true;
    case ExprKind::TC: return a.tc == b.tc;
    case ExprKind::Repetition:
      if (a.min != b.min || a.max != b.max) return false;
      [[fallthrough]];
    case ExprKind::SomeOf:
    case ExprKind::Group: return a.children == b.children;
  }
  return false;
}

bool ShapeDefinition::is_extra(const DirectedProperty& prop) const {
  return std::find(extra.begin(), extra.end(), prop) != extra.end();
}

void for_each_constraint(const ShapeExpr& expr,
                         const std::function<void(const TripleConstraint&)>& fn) {
  if (expr.kind == ExprKind::TC) {
    fn(expr.tc);
    return;
  }
  for (const auto& c : expr.children) for_each_constraint(c, fn);
}

std::vector<const TripleConstraint*> ShapeDefinition::constraints() const {
  std::vector<const TripleConstraint*> out;
  for_each_constraint(expr, [&](const TripleConstraint& tc) { out.push_back(&tc); });
  std::sort(out.begin(), out.end(),
            [](const TripleConstraint* a, const TripleConstraint* b) { return a->id < b->id; });
  return out;
}

const ShapeDefinition& Schema::shape(const ShapeLabel& label) const {
  auto it = shapes.find(label);
  if (it == shapes.end()) throw UndefinedShapeReference(label);
  return it->second;
}

static void check_expr(const Schema& schema, const ShapeLabel& label, const ShapeExpr& e,
                       std::set<int>& ids) {
  auto fail = [&](const std::string& what) { throw Error("shape <" + label + ">: " + what); };
  switch (e.kind) {
    case ExprKind::Empty:
      if (!e.children.empty()) fail("empty expression with children");
      return;
    case ExprKind::TC:
      if (e.tc.id <= 0) fail("triple constraint id must be positive");
      if (!ids.insert(e.tc.id).second) fail("duplicate triple constraint id C" + std::to_string(e.tc.id));
      if (e.tc.prop.iri.empty()) fail("triple constraint without property");
      for (const auto& a : e.tc.value_class) {
        if (const auto* ref = std::get_if<ShapeRef>(&a)) {
          if (!schema.has_shape(ref->label)) throw UndefinedShapeReference(ref->label);
        }
      }
      return;
    case ExprKind::SomeOf:
    case ExprKind::Group:
      if (e.children.empty()) fail("empty some-of/group");
      break;
    case ExprKind::Repetition:
      if (e.children.size() != 1) fail("repetition needs exactly one sub-expression");
      if (e.min > e.max) fail("repetition with min > max");
      break;
  }
  for (const auto& c : e.children) check_expr(schema, label, c, ids);
}

void check_structure(const Schema& schema) {
  for (const auto& [label, def] : schema.shapes) {
    std::set<int> ids;
    check_expr(schema, label, def.expr, ids);
    if (!ids.empty() && (*ids.begin() != 1 || *ids.rbegin() != static_cast<int>(ids.size())))
      throw Error("shape <" + label + ">: triple constraint ids must be C1..C" +
                  std::to_string(ids.size()));
    std::set<DirectedProperty> seen;
    for (const auto& p : def.extra) {
      if (!seen.insert(p).second)
        throw Error("shape <" + label + ">: duplicate EXTRA property " + p.to_string());
    }
  }
}

DependencyGraph dependency_graph(const Schema& schema) {
  DependencyGraph g;
  for (const auto& [label, def] : schema.shapes) {
    auto& out = g[label];
    for_each_constraint(def.expr, [&](const TripleConstraint& tc) {
      for (const auto& a : tc.value_class)
        if (const auto* ref = std::get_if<ShapeRef>(&a)) out.insert(ref->label);
    });
  }
  return g;
}

std::set<ShapeLabel> negated_shapes(const Schema& schema, const ShapeLabel& label) {
  const ShapeDefinition& def = schema.shape(label);
  std::set<ShapeLabel> out;
  for_each_constraint(def.expr, [&](const TripleConstraint& tc) {
    bool extra = def.is_extra(tc.prop);
    for (const auto& a : tc.value_class) {
      if (const auto* ref = std::get_if<ShapeRef>(&a)) {
        if (ref->negated || extra) out.insert(ref->label);
      }
    }
  });
  return out;
}

std::set<ShapeLabel> negated_shapes(const Schema& schema) {
  std::set<ShapeLabel> out;
  for (const auto& entry : schema.shapes) out.merge(negated_shapes(schema, entry.first));
  return out;
}

std::set<ShapeLabel> reachable_labels(const Schema& schema, const std::set<ShapeLabel>& roots) {
  DependencyGraph g = dependency_graph(schema);
  std::set<ShapeLabel> seen;
  std::vector<ShapeLabel> stack(roots.begin(), roots.end());
  while (!stack.empty()) {
    ShapeLabel l = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(l).second) continue;
    for (const auto& t : g[l]) stack.push_back(t);
  }
  return seen;
}

namespace {

struct CycleFinder {
  const DependencyGraph& g;
  std::map<ShapeLabel, int> color;  // 0 white, 1 on stack, 2 done
  std::vector<ShapeLabel> path;
  std::vector<ShapeLabel> cycle;

  bool visit(const ShapeLabel& l) {
    color[l] = 1;
    path.push_back(l);
    auto it = g.find(l);
    if (it != g.end()) {
      for (const auto& t : it->second) {
        int c = color[t];
        if (c == 1) {
          auto start = std::find(path.begin(), path.end(), t);
          cycle.assign(start, path.end());
          cycle.push_back(t);
          return true;
        }
        if (c == 0 && visit(t)) return true;
      }
    }
    path.pop_back();
    color[l] = 2;
    return false;
  }
};

}  // namespace

std::string WellDefinedness::message() const {
  if (ok) return "well-defined";
  std::string out = "negated shape <" + label + "> reaches a cycle: ";
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (i) out += " -> ";
    out += "<" + cycle[i] + ">";
  }
  return out;
}

WellDefinedness check_well_defined(const Schema& schema) {
  DependencyGraph g = dependency_graph(schema);
  for (const auto& t : negated_shapes(schema)) {
    CycleFinder finder{g, {}, {}, {}};
    if (finder.visit(t)) return WellDefinedness{false, t, finder.cycle};
  }
  return {};
}

void require_well_defined(const Schema& schema) {
  WellDefinedness w = check_well_defined(schema);
  if (!w.ok) throw NotWellDefined(w.message());
}

std::string Consumer::to_string() const {
  switch (kind) {
    case Kind::ByConstraint: return "C" + std::to_string(tc);
    case Kind::Extra: return "extra:" + prop.to_string();
    case Kind::Open: return "open";
  }
  return {};
}

Consumer Consumer::from_string(std::string_view text) {
  if (text == "open") return open();
  if (text.substr(0, 6) == "extra:" && text.size() > 6)
    return extra(DirectedProperty::from_string(text.substr(6)));
  if (text.size() > 1 && text[0] == 'C') {
    int id = 0;
    for (char c : text.substr(1)) {
      if (c < '0' || c > '9') throw Error("bad triple consumer '" + std::string(text) + "'");
      id = id * 10 + (c - '0');
    }
    if (id > 0) return by_constraint(id);
  }
  throw Error("bad triple consumer '" + std::string(text) + "'");
}

std::vector<Consumer> triple_consumers(const ShapeDefinition& def) {
  std::vector<Consumer> out;
  for (const auto* tc : def.constraints()) out.push_back(Consumer::by_constraint(tc->id));
  for (const auto& p : def.extra) out.push_back(Consumer::extra(p));
  std::sort(out.begin(), out.end());
  out.push_back(Consumer::open());
  return out;
}

std::vector<std::string> lint(const Schema& schema) {
  std::vector<std::string> out;
  for (const auto& [label, def] : schema.shapes) {
    std::set<DirectedProperty> mentioned;
    for_each_constraint(def.expr, [&](const TripleConstraint& tc) {
      mentioned.insert(tc.prop);
      std::set<ShapeLabel> pos, neg;
      for (const auto& a : tc.value_class) {
        if (const auto* ref = std::get_if<ShapeRef>(&a)) (ref->negated ? neg : pos).insert(ref->label);
      }
      for (const auto& l : pos) {
        if (neg.count(l))
          out.push_back("shape <" + label + ">: C" + std::to_string(tc.id) + " conjoins @<" + l +
                        "> and !@<" + l + ">, so it can never be satisfied");
      }
    });
    for (const auto& p : def.extra) {
      if (!mentioned.count(p))
        out.push_back("shape <" + label + ">: EXTRA " + p.to_string() +
                      " is not mentioned by any triple constraint");
    }
  }
  return out;
}

}  // namespace shexd
