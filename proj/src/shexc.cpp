#include "shexd/shexc.hpp"

#include <cctype>
#include <set>

#include "lexing.hpp"
#include "shexd/error.hpp"

namespace shexd {

namespace {

class SchemaParser {
 public:
  explicit SchemaParser(std::string_view text) : cur_(text) {}

  Schema parse() {
    skip();
    while (directive()) skip();
    if (cur_.at_end()) cur_.fail("schema defines no shapes");
    while (!cur_.at_end()) {
      shape();
      skip();
    }
    for (const auto& [label, pos] : references_) {
      if (!out_.has_shape(label)) throw UndefinedShapeReference(label);
    }
    return std::move(out_);
  }

 private:
  void skip() { cur_.skip_space_and_comments(); }

  bool directive() {
    if (cur_.peek() == '@') {
      std::size_t line = cur_.line(), column = cur_.column();
      cur_.get();
      if (!cur_.consume_word("prefix")) throw SyntaxError("unsupported directive", line, column);
      prefix_body();
      skip();
      cur_.expect('.');
      return true;
    }
    if (cur_.consume_word_ci("PREFIX")) {
      prefix_body();
      return true;
    }
    return false;
  }

  void prefix_body() {
    skip();
    auto [prefix, local] = cur_.read_pname();
    if (!local.empty()) cur_.fail("expected a namespace prefix ending in ':'");
    skip();
    if (cur_.peek() != '<') cur_.fail("expected an IRI after the prefix name");
    out_.prefixes[prefix] = cur_.read_iriref();
  }

  void shape() {
    if (cur_.peek() != '<') cur_.fail("expected a shape label such as <Name>");
    ShapeLabel label = cur_.read_iriref();
    if (out_.has_shape(label)) throw DuplicateShapeLabel(label);
    ShapeDefinition def;
    next_id_ = 1;
    skip();
    while (true) {
      if (cur_.consume_word("CLOSED")) {
        def.closed_fwd = true;
      } else if (cur_.peek() == '^' && cur_.peek(1) == 'C' && (cur_.get(), cur_.consume_word("CLOSED"))) {
        def.closed_inv = true;
      } else if (cur_.consume_word("EXTRA")) {
        skip();
        if (!at_dirprop()) cur_.fail("EXTRA needs at least one property");
        while (at_dirprop()) {
          DirectedProperty p = dirprop();
          if (!def.is_extra(p)) def.extra.push_back(std::move(p));
          skip();
        }
        continue;
      } else {
        break;
      }
      skip();
    }
    cur_.expect('{');
    skip();
    if (cur_.peek() == '}') {
      def.expr = ShapeExpr::empty();
    } else {
      def.expr = some_of();
      skip();
    }
    cur_.expect('}');
    out_.shapes.emplace(std::move(label), std::move(def));
  }

  bool at_dirprop() const {
    std::size_t off = cur_.peek() == '^' ? 1 : 0;
    char c = cur_.peek(off);
    if (c == '<') return true;
    if (c == ':') return true;
    if (!detail::is_name_start(c)) return false;
    std::size_t i = off;
    while (detail::is_name_char(cur_.peek(i))) ++i;
    return cur_.peek(i) == ':';
  }

  DirectedProperty dirprop() {
    bool inverse = cur_.consume('^');
    return DirectedProperty{iri(), inverse};
  }

  std::string iri() {
    if (cur_.peek() == '<') return cur_.read_iriref();
    if (cur_.at_pname_start()) {
      std::size_t line = cur_.line(), column = cur_.column();
      auto [prefix, local] = cur_.read_pname();
      return cur_.expand(out_.prefixes, prefix, local, line, column);
    }
    if (cur_.at_end()) cur_.fail("unexpected end of input, expected an IRI");
    cur_.fail(std::string("expected an IRI but found '") + cur_.peek() + "'");
  }

  ShapeExpr some_of() {
    std::vector<ShapeExpr> parts;
    parts.push_back(group());
    skip();
    while (cur_.consume('|')) {
      skip();
      parts.push_back(group());
      skip();
    }
    if (parts.size() == 1) return std::move(parts.front());
    return ShapeExpr::some_of(std::move(parts));
  }

  ShapeExpr group() {
    std::vector<ShapeExpr> parts;
    parts.push_back(unary());
    skip();
    while (cur_.consume(',')) {
      skip();
      parts.push_back(unary());
      skip();
    }
    if (parts.size() == 1) return std::move(parts.front());
    return ShapeExpr::group(std::move(parts));
  }

  ShapeExpr unary() {
    ShapeExpr e = primary();
    skip();
    std::uint32_t min = 0, max = 0;
    if (cardinality(min, max)) return ShapeExpr::repeat(std::move(e), min, max);
    return e;
  }

  bool cardinality(std::uint32_t& min, std::uint32_t& max) {
    switch (cur_.peek()) {
      case '*': cur_.get(); min = 0; max = kUnbounded; return true;
      case '+': cur_.get(); min = 1; max = kUnbounded; return true;
      case '?': cur_.get(); min = 0; max = 1; return true;
      case '[': {
        cur_.get();
        skip();
        min = number();
        skip();
        cur_.expect(';');
        skip();
        if (cur_.consume('*')) max = kUnbounded;
        else max = number();
        skip();
        cur_.expect(']');
        break;
      }
      case '{': {
        cur_.get();
        skip();
        min = number();
        skip();
        max = min;
        if (cur_.consume(',')) {
          skip();
          if (cur_.consume('*') || cur_.peek() == '}') max = kUnbounded;
          else max = number();
          skip();
        }
        cur_.expect('}');
        break;
      }
      default: return false;
    }
    if (min > max) cur_.fail("cardinality minimum exceeds maximum");
    return true;
  }

  std::uint32_t number() {
    if (!std::isdigit(static_cast<unsigned char>(cur_.peek()))) cur_.fail("expected a number");
    unsigned long long n = 0;
    while (std::isdigit(static_cast<unsigned char>(cur_.peek()))) {
      n = n * 10 + static_cast<unsigned>(cur_.get() - '0');
      if (n >= kUnbounded) cur_.fail("cardinality too large");
    }
    return static_cast<std::uint32_t>(n);
  }

  ShapeExpr primary() {
    if (cur_.consume('(')) {
      skip();
      ShapeExpr e = some_of();
      skip();
      cur_.expect(')');
      return e;
    }
    if (cur_.consume_word("EMPTY") || cur_.consume_word("EmptyShape")) return ShapeExpr::empty();
    if (!at_dirprop()) {
      if (cur_.at_end()) cur_.fail("unexpected end of input in shape expression");
      cur_.fail(std::string("expected a triple constraint but found '") + cur_.peek() + "'");
    }
    TripleConstraint tc;
    tc.id = next_id_++;
    tc.prop = dirprop();
    skip();
    if (cur_.consume('.')) return ShapeExpr::triple(std::move(tc));  // any value
    tc.value_class.push_back(atomic());
    skip();
    while (cur_.consume_word("AND")) {
      skip();
      tc.value_class.push_back(atomic());
      skip();
    }
    return ShapeExpr::triple(std::move(tc));
  }

  AtomicConstr atomic() {
    bool negated = false;
    if (cur_.consume('!')) {
      negated = true;
      skip();
      if (cur_.peek() != '@') cur_.fail("expected '@<Label>' after '!'");
    }
    if (cur_.consume('@')) {
      std::size_t line = cur_.line(), column = cur_.column();
      if (cur_.peek() != '<') cur_.fail("expected '<Label>' after '@'");
      ShapeLabel label = cur_.read_iriref();
      references_.emplace(label, std::make_pair(line, column));
      return ShapeRef{std::move(label), negated};
    }
    if (cur_.consume_word("IRI")) return ValueSet::of_node_kind(NodeKind::Iri);
    if (cur_.consume_word("BNode")) return ValueSet::of_node_kind(NodeKind::BNode);
    if (cur_.consume_word("Literal")) return ValueSet::of_node_kind(NodeKind::Literal);
    if (cur_.consume_word("NonLiteral")) return ValueSet::of_node_kind(NodeKind::NonLiteral);
    if (cur_.consume('(')) {
      std::vector<Value> values;
      skip();
      while (!cur_.consume(')')) {
        if (cur_.at_end()) cur_.fail("unterminated value set");
        values.push_back(value());
        skip();
      }
      return ValueSet::of_values(std::move(values));
    }
    if (cur_.peek() == '<' || cur_.at_pname_start()) return ValueSet::of_datatype(iri());
    if (cur_.at_end()) cur_.fail("unexpected end of input, expected a value class");
    cur_.fail(std::string("expected a value class but found '") + cur_.peek() + "'");
  }

  Value value() {
    char c = cur_.peek();
    if (c == '_' && cur_.peek(1) == ':') {
      cur_.read_blank_label();
      return Value::blank();
    }
    if (c == '"') {
      std::string lexical = cur_.read_string();
      if (cur_.peek() == '@') return Value::literal(lexical, {}, cur_.read_langtag());
      if (cur_.peek() == '^' && cur_.peek(1) == '^') {
        cur_.get();
        cur_.get();
        return Value::literal(lexical, iri());
      }
      return Value::literal(lexical);
    }
    if (cur_.at_integer_start()) return Value::literal(cur_.read_integer(), std::string(vocab::xsd_integer));
    return Value::iri(iri());
  }

  detail::Cursor cur_;
  Schema out_;
  int next_id_ = 1;
  std::map<ShapeLabel, std::pair<std::size_t, std::size_t>> references_;
};

std::string term_iri(const std::string& iri, const PrefixMap& prefixes) {
  return compact_iri(iri, prefixes);
}

std::string dirprop_text(const DirectedProperty& p, const PrefixMap& prefixes) {
  return (p.inverse ? "^" : "") + term_iri(p.iri, prefixes);
}

std::string value_text(const Value& v, const PrefixMap& prefixes) {
  switch (v.kind) {
    case TermKind::Iri: return term_iri(v.text, prefixes);
    case TermKind::Blank: return "_:b";
    case TermKind::Literal: {
      std::string out = "\"" + escape_string(v.text) + "\"";
      if (!v.lang.empty()) return out + "@" + v.lang;
      if (v.datatype == vocab::xsd_string) return out;
      return out + "^^" + term_iri(v.datatype, prefixes);
    }
  }
  return {};
}

std::string atomic_text(const AtomicConstr& a, const PrefixMap& prefixes) {
  if (const auto* ref = std::get_if<ShapeRef>(&a))
    return std::string(ref->negated ? "!" : "") + "@<" + ref->label + ">";
  const auto& vs = std::get<ValueSet>(a);
  switch (vs.kind) {
    case ValueSet::Kind::NodeKind: return to_string(vs.node_kind);
    case ValueSet::Kind::Datatype: return term_iri(vs.datatype, prefixes);
    case ValueSet::Kind::Values: {
      std::string out = "(";
      for (std::size_t i = 0; i < vs.values.size(); ++i) {
        if (i) out += " ";
        out += value_text(vs.values[i], prefixes);
      }
      return out + ")";
    }
  }
  return {};
}

std::string card_text(std::uint32_t min, std::uint32_t max) {
  if (min == 0 && max == kUnbounded) return "*";
  if (min == 1 && max == kUnbounded) return "+";
  if (min == 0 && max == 1) return "?";
  return "[" + std::to_string(min) + ";" + (max == kUnbounded ? "*" : std::to_string(max)) + "]";
}

enum class Ctx { Top, Group, Unary };

std::string expr_text(const ShapeExpr& e, Ctx ctx, const PrefixMap& prefixes) {
  switch (e.kind) {
    case ExprKind::Empty: return "EMPTY";
    case ExprKind::TC: {
      std::string out = dirprop_text(e.tc.prop, prefixes);
      if (e.tc.value_class.empty()) out += " .";
      for (std::size_t i = 0; i < e.tc.value_class.size(); ++i)
        out += (i ? " AND " : " ") + atomic_text(e.tc.value_class[i], prefixes);
      return out;
    }
    case ExprKind::SomeOf:
    case ExprKind::Group: {
      bool some = e.kind == ExprKind::SomeOf;
      std::string out;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += some ? " | " : ", ";
        out += expr_text(e.children[i], some ? Ctx::Group : Ctx::Unary, prefixes);
      }
      bool wrap = (some && ctx != Ctx::Top) || (!some && ctx == Ctx::Unary);
      if (e.children.size() == 1) wrap = false;
      return wrap ? "(" + out + ")" : out;
    }
    case ExprKind::Repetition: {
      std::string inner = expr_text(e.child(), Ctx::Unary, prefixes);
      if (e.child().kind == ExprKind::Repetition) inner = "(" + inner + ")";
      return inner + " " + card_text(e.min, e.max);
    }
  }
  return {};
}

}  // namespace

Schema parse_schema(std::string_view text) { return SchemaParser(text).parse(); }

std::string expr_to_shexc(const ShapeExpr& expr, const PrefixMap& prefixes) {
  return expr_text(expr, Ctx::Top, prefixes);
}

std::string to_shexc(const Schema& schema) {
  std::string out;
  for (const auto& [prefix, ns] : schema.prefixes) out += "PREFIX " + prefix + ": <" + ns + ">\n";
  if (!schema.prefixes.empty()) out += "\n";
  for (const auto& [label, def] : schema.shapes) {
    out += "<" + label + ">";
    if (def.closed_fwd) out += " CLOSED";
    if (def.closed_inv) out += " ^CLOSED";
    if (!def.extra.empty()) {
      out += " EXTRA";
      for (const auto& p : def.extra) out += " " + dirprop_text(p, schema.prefixes);
    }
    if (def.expr.kind == ExprKind::Empty) {
      out += " { }\n";
      continue;
    }
    out += " {\n  " + expr_text(def.expr, Ctx::Top, schema.prefixes) + "\n}\n";
  }
  return out;
}

}  // namespace shexd
