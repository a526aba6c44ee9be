#include "shexd/schema_json.hpp"

#include <json.hpp>

#include "shexd/error.hpp"

namespace shexd {

using nlohmann::json;

namespace {

json value_json(const Value& v) {
  switch (v.kind) {
    case TermKind::Iri: return {{"iri", v.text}};
    case TermKind::Blank: return {{"blank", true}};
    case TermKind::Literal: {
      json j = {{"literal", v.text}, {"datatype", v.datatype}};
      if (!v.lang.empty()) j["lang"] = v.lang;
      return j;
    }
  }
  return {};
}

json atomic_json(const AtomicConstr& a) {
  if (const auto* ref = std::get_if<ShapeRef>(&a))
    return {{"kind", "shape"}, {"label", ref->label}, {"negated", ref->negated}};
  const auto& vs = std::get<ValueSet>(a);
  switch (vs.kind) {
    case ValueSet::Kind::Datatype: return {{"kind", "datatype"}, {"datatype", vs.datatype}};
    case ValueSet::Kind::NodeKind: return {{"kind", "nodeKind"}, {"nodeKind", to_string(vs.node_kind)}};
    case ValueSet::Kind::Values: {
      json values = json::array();
      for (const auto& v : vs.values) values.push_back(value_json(v));
      return {{"kind", "values"}, {"values", values}};
    }
  }
  return {};
}

json expr_json(const ShapeExpr& e) {
  switch (e.kind) {
    case ExprKind::Empty: return {{"kind", "empty"}};
    case ExprKind::TC: {
      json vc = json::array();
      for (const auto& a : e.tc.value_class) vc.push_back(atomic_json(a));
      return {{"kind", "tc"},
              {"id", e.tc.id},
              {"inverse", e.tc.prop.inverse},
              {"property", e.tc.prop.iri},
              {"valueClass", vc}};
    }
    case ExprKind::SomeOf:
    case ExprKind::Group: {
      json exprs = json::array();
      for (const auto& c : e.children) exprs.push_back(expr_json(c));
      return {{"kind", e.kind == ExprKind::SomeOf ? "someOf" : "group"}, {"exprs", exprs}};
    }
    case ExprKind::Repetition: {
      json max = e.max == kUnbounded ? json("*") : json(e.max);
      return {{"kind", "repeat"}, {"min", e.min}, {"max", max}, {"expr", expr_json(e.child())}};
    }
  }
  return {};
}

class Reader {
 public:
  [[noreturn]] static void fail(const std::string& path, const std::string& msg) {
    throw SchemaJsonError(path, msg);
  }

  static const json& field(const json& obj, const std::string& path, const char* key) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, std::string("missing \"") + key + "\"");
    return *it;
  }

  static std::string str(const json& obj, const std::string& path, const char* key) {
    const json& j = field(obj, path, key);
    if (!j.is_string()) fail(path + "/" + key, "expected a string");
    return j.get<std::string>();
  }

  static bool boolean(const json& obj, const std::string& path, const char* key, bool fallback) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_boolean()) fail(path + "/" + key, "expected a boolean");
    return it->get<bool>();
  }

  static std::uint32_t natural(const json& j, const std::string& path) {
    if (!j.is_number_unsigned() || j.get<unsigned long long>() >= kUnbounded)
      fail(path, "expected a natural number");
    return j.get<std::uint32_t>();
  }

  static Value value(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected a value object");
    if (j.contains("iri")) return Value::iri(str(j, path, "iri"));
    if (j.contains("blank")) return Value::blank();
    if (j.contains("literal")) {
      std::string lang = j.contains("lang") ? str(j, path, "lang") : std::string();
      std::string dt = j.contains("datatype") ? str(j, path, "datatype") : std::string(vocab::xsd_string);
      return Value::literal(str(j, path, "literal"), dt, lang);
    }
    fail(path, "expected one of \"iri\", \"blank\", \"literal\"");
  }

  static AtomicConstr atomic(const json& j, const std::string& path) {
    std::string kind = str(j, path, "kind");
    if (kind == "shape") return ShapeRef{str(j, path, "label"), boolean(j, path, "negated", false)};
    if (kind == "datatype") return ValueSet::of_datatype(str(j, path, "datatype"));
    if (kind == "nodeKind") {
      std::string k = str(j, path, "nodeKind");
      for (NodeKind nk : {NodeKind::Iri, NodeKind::BNode, NodeKind::Literal, NodeKind::NonLiteral})
        if (k == to_string(nk)) return ValueSet::of_node_kind(nk);
      fail(path + "/nodeKind", "unknown node kind \"" + k + "\"");
    }
    if (kind == "values") {
      const json& arr = field(j, path, "values");
      if (!arr.is_array()) fail(path + "/values", "expected an array");
      std::vector<Value> values;
      for (std::size_t i = 0; i < arr.size(); ++i)
        values.push_back(value(arr[i], path + "/values/" + std::to_string(i)));
      return ValueSet::of_values(std::move(values));
    }
    fail(path + "/kind", "unknown atomic kind \"" + kind + "\"");
  }

  static ShapeExpr expr(const json& j, const std::string& path) {
    std::string kind = str(j, path, "kind");
    if (kind == "empty") return ShapeExpr::empty();
    if (kind == "tc") {
      TripleConstraint tc;
      const json& id = field(j, path, "id");
      if (!id.is_number_unsigned() || id.get<unsigned long long>() == 0 ||
          id.get<unsigned long long>() > 1000000)
        fail(path + "/id", "expected a positive integer");
      tc.id = id.get<int>();
      tc.prop = DirectedProperty{str(j, path, "property"), boolean(j, path, "inverse", false)};
      const json& vc = field(j, path, "valueClass");
      if (!vc.is_array() || vc.empty()) fail(path + "/valueClass", "expected a non-empty array");
      for (std::size_t i = 0; i < vc.size(); ++i)
        tc.value_class.push_back(atomic(vc[i], path + "/valueClass/" + std::to_string(i)));
      return ShapeExpr::triple(std::move(tc));
    }
    if (kind == "someOf" || kind == "group") {
      const json& arr = field(j, path, "exprs");
      if (!arr.is_array() || arr.empty()) fail(path + "/exprs", "expected a non-empty array");
      std::vector<ShapeExpr> children;
      for (std::size_t i = 0; i < arr.size(); ++i)
        children.push_back(expr(arr[i], path + "/exprs/" + std::to_string(i)));
      return kind == "someOf" ? ShapeExpr::some_of(std::move(children))
                              : ShapeExpr::group(std::move(children));
    }
    if (kind == "repeat") {
      std::uint32_t min = natural(field(j, path, "min"), path + "/min");
      const json& mj = field(j, path, "max");
      std::uint32_t max = 0;
      if (mj.is_string() && mj.get<std::string>() == "*") max = kUnbounded;
      else max = natural(mj, path + "/max");
      if (min > max) fail(path, "min exceeds max");
      return ShapeExpr::repeat(expr(field(j, path, "expr"), path + "/expr"), min, max);
    }
    fail(path + "/kind", "unknown expression kind \"" + kind + "\"");
  }
};

}  // namespace

std::string schema_to_json(const Schema& schema) {
  json shapes = json::object();
  for (const auto& [label, def] : schema.shapes) {
    json extra = json::array();
    for (const auto& p : def.extra) extra.push_back(p.to_string());
    shapes[label] = {{"closed", def.closed_fwd},
                     {"closedInv", def.closed_inv},
                     {"extra", extra},
                     {"expr", expr_json(def.expr)}};
  }
  json root = {{"shapes", shapes}};
  if (!schema.prefixes.empty()) {
    json prefixes = json::object();
    for (const auto& [p, ns] : schema.prefixes) prefixes[p] = ns;
    root["prefixes"] = prefixes;
  }
  return root.dump(2) + "\n";
}

Schema json_to_schema(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaJsonError("", e.what());
  }
  Schema schema;
  const json& shapes = Reader::field(root, "", "shapes");
  if (!shapes.is_object()) Reader::fail("/shapes", "expected an object");
  for (const auto& [label, j] : shapes.items()) {
    std::string path = "/shapes/" + label;
    ShapeDefinition def;
    def.closed_fwd = Reader::boolean(j, path, "closed", false);
    def.closed_inv = Reader::boolean(j, path, "closedInv", false);
    if (j.contains("extra")) {
      const json& extra = j["extra"];
      if (!extra.is_array()) Reader::fail(path + "/extra", "expected an array");
      for (std::size_t i = 0; i < extra.size(); ++i) {
        if (!extra[i].is_string() || extra[i].get<std::string>().empty() ||
            extra[i].get<std::string>() == "^")
          Reader::fail(path + "/extra/" + std::to_string(i), "expected a directed property");
        def.extra.push_back(DirectedProperty::from_string(extra[i].get<std::string>()));
      }
    }
    def.expr = Reader::expr(Reader::field(j, path, "expr"), path + "/expr");
    schema.shapes.emplace(label, std::move(def));
  }
  if (root.contains("prefixes")) {
    const json& prefixes = root["prefixes"];
    if (!prefixes.is_object()) Reader::fail("/prefixes", "expected an object");
    for (const auto& [p, ns] : prefixes.items()) {
      if (!ns.is_string()) Reader::fail("/prefixes/" + p, "expected a string");
      schema.prefixes[p] = ns.get<std::string>();
    }
  }
  try {
    check_structure(schema);
  } catch (const UndefinedShapeReference& e) {
    throw SchemaJsonError("/shapes", e.what());
  } catch (const Error& e) {
    throw SchemaJsonError("/shapes", e.what());
  }
  return schema;
}

}  // namespace shexd
