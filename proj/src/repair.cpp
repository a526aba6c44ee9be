#include "shexd/repair.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include <json.hpp>

#include "shexd/error.hpp"

namespace shexd {

namespace {

std::string canonical_lexical(std::string_view datatype) {
  static const std::map<std::string, std::string, std::less<>> known = {
      {std::string(vocab::xsd_integer), "0"},
      {std::string(vocab::xsd) + "decimal", "0.0"},
      {std::string(vocab::xsd) + "double", "0.0E0"},
      {std::string(vocab::xsd) + "boolean", "false"},
      {std::string(vocab::xsd_date), "2000-01-01"},
  };
  auto it = known.find(datatype);
  return it == known.end() ? "" : it->second;
}

template <typename T>
void push_unique(std::vector<T>& v, const T& x) {
  if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
}

// Typing entries as terms, so they survive rebuilding the graph.
struct TermEntry {
  Term node;
  ShapeLabel shape;
  bool positive;
};

std::vector<TermEntry> as_terms(const Graph& graph, const Typing& typing0) {
  std::vector<TermEntry> out;
  for (const auto& e : typing0) out.push_back({graph.node(e.node).term, e.shape, e.positive});
  return out;
}

bool valid_graph(const std::vector<Triple>& triples, const Schema& schema, const std::vector<TermEntry>& typing0,
                 const ReferenceOptions& options) {
  Graph g(triples);
  Typing t;
  for (const auto& e : typing0) {
    auto n = g.find(e.node);
    if (!n) return false;
    t.insert({*n, e.shape, e.positive});
  }
  return reference_validate(g, schema, t, options).ok();
}

}  // namespace

std::vector<Triple> InsertionDomain::insertions(const Graph& graph) const {
  std::set<Triple> present;
  for (auto& t : graph.triples()) present.insert(t);
  std::vector<Triple> out;
  for (const auto& s : subjects)
    for (const auto& p : properties)
      for (const auto& o : objects) {
        Triple t{s, p, o};
        if (!present.count(t)) out.push_back(std::move(t));
      }
  std::sort(out.begin(), out.end());
  return out;
}

InsertionDomain insertion_domain(const Graph& graph, const Schema& schema, std::size_t fresh_blanks) {
  InsertionDomain d;
  std::set<std::string> labels;
  for (NodeId n = 0; n < graph.node_count(); ++n) {
    const Term& t = graph.node(n).term;
    if (t.kind == TermKind::Blank) labels.insert(t.text);
    if (t.kind != TermKind::Literal) d.subjects.push_back(t);
    d.objects.push_back(t);
  }
  for (std::size_t i = 1, k = 0; k < fresh_blanks; ++i) {
    std::string label = "fresh" + std::to_string(i);
    if (labels.count(label)) continue;
    d.fresh.push_back(Term::blank(label));
    ++k;
  }

  std::set<std::string> props;
  for (const auto& t : graph.triples()) props.insert(t.predicate);
  std::set<std::string> datatypes;
  for (const auto& [label, def] : schema.shapes) {
    for (const auto& q : def.extra) props.insert(q.iri);
    for_each_constraint(def.expr, [&](const TripleConstraint& tc) {
      props.insert(tc.prop.iri);
      for (const auto& a : tc.value_class) {
        const auto* vs = std::get_if<ValueSet>(&a);
        if (!vs) continue;
        if (vs->kind == ValueSet::Kind::Datatype) datatypes.insert(vs->datatype);
        if (vs->kind != ValueSet::Kind::Values) continue;
        for (const auto& v : vs->values) {
          if (v.is_iri()) push_unique(d.objects, Term::iri(v.text));
          else if (v.is_literal()) push_unique(d.objects, Term::literal(v.text, v.datatype, v.lang));
        }
      }
    });
  }
  for (const auto& dt : datatypes) push_unique(d.objects, Term::literal(canonical_lexical(dt), dt));
  d.properties.assign(props.begin(), props.end());
  for (const auto& f : d.fresh) {
    d.subjects.push_back(f);
    d.objects.push_back(f);
  }
  return d;
}

std::vector<Triple> apply_edits(const Graph& graph, const EditSet& edits) {
  std::set<Triple> out;
  for (auto& t : graph.triples())
    if (!edits.deletions.count(t)) out.insert(t);
  out.insert(edits.insertions.begin(), edits.insertions.end());
  return {out.begin(), out.end()};
}

EditSet difference(const Graph& from, const Graph& to) {
  auto a = from.triples();
  auto b = to.triples();
  std::set<Triple> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  EditSet e;
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(e.deletions, e.deletions.end()));
  std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(), std::inserter(e.insertions, e.insertions.end()));
  return e;
}

bool is_valid_after(const Graph& graph, const EditSet& edits, const Schema& schema, const Typing& typing0,
                    const ReferenceOptions& options) {
  return valid_graph(apply_edits(graph, edits), schema, as_terms(graph, typing0), options);
}

RepairReport enumerate_repairs(const Graph& graph, const Schema& schema, const Typing& typing0,
                               const RepairOptions& options) {
  InsertionDomain domain = insertion_domain(graph, schema, std::max<std::size_t>(options.max_edits, 1));
  auto terms = as_terms(graph, typing0);

  struct Edit {
    Triple triple;
    bool insert;
    std::uint32_t fresh_mask;  // fresh blanks the triple mentions
  };
  std::vector<Edit> edits;
  for (auto& t : graph.triples()) edits.push_back({t, false, 0});
  for (auto& t : domain.insertions(graph)) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < domain.fresh.size(); ++i)
      if (t.subject == domain.fresh[i] || t.object == domain.fresh[i]) mask |= 1u << i;
    edits.push_back({std::move(t), true, mask});
  }

  const std::vector<Triple> base = graph.triples();
  RepairReport report;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t, std::uint32_t)> choose = [&](std::size_t from, std::size_t left,
                                                                           std::uint32_t fresh) {
    if (left == 0) {
      // fresh blanks used must be a prefix fresh1..freshk
      if (fresh & (fresh + 1)) return;
      if (++report.checked > options.max_checks)
        throw SearchBudgetExceeded("repair search exceeded " + std::to_string(options.max_checks) + " edit sets");
      EditSet e;
      for (auto i : chosen) (edits[i].insert ? e.insertions : e.deletions).insert(edits[i].triple);
      std::set<Triple> current;
      for (const auto& t : base)
        if (!e.deletions.count(t)) current.insert(t);
      current.insert(e.insertions.begin(), e.insertions.end());
      if (valid_graph({current.begin(), current.end()}, schema, terms, options.reference))
        report.repairs.push_back(std::move(e));
      return;
    }
    for (std::size_t i = from; i + left <= edits.size(); ++i) {
      chosen.push_back(i);
      choose(i + 1, left - 1, fresh | edits[i].fresh_mask);
      chosen.pop_back();
    }
  };

  for (std::size_t k = 0; k <= options.max_edits; ++k) {
    choose(0, k, 0);
    if (!report.repairs.empty()) {
      report.found = true;
      report.min_size = k;
      std::sort(report.repairs.begin(), report.repairs.end());
      break;
    }
  }
  return report;
}

bool is_repair(const Graph& graph, const Graph& graph_prime, const Schema& schema, const Typing& typing0,
               std::size_t budget, const ReferenceOptions& options) {
  EditSet diff = difference(graph, graph_prime);
  if (diff.size() > budget)
    throw SearchBudgetExceeded("graphs differ by " + std::to_string(diff.size()) + " triples, above the budget of " +
                               std::to_string(budget));
  if (!is_valid_after(graph, diff, schema, typing0, options)) return false;
  if (diff.size() == 0) return true;
  RepairOptions ro;
  ro.max_edits = diff.size() - 1;
  ro.reference = options;
  return !enumerate_repairs(graph, schema, typing0, ro).found;
}

std::string repairs_to_json(const RepairReport& report) {
  using nlohmann::json;
  json out;
  out["minSize"] = report.found ? json(report.min_size) : json(nullptr);
  json repairs = json::array();
  for (const auto& e : report.repairs) {
    json del = json::array(), ins = json::array();
    for (const auto& t : e.deletions) del.push_back(t.to_ntriples());
    for (const auto& t : e.insertions) ins.push_back(t.to_ntriples());
    repairs.push_back({{"delete", std::move(del)}, {"insert", std::move(ins)}});
  }
  out["repairs"] = std::move(repairs);
  if (!report.found) out["error"] = "NoRepairWithinBudget";
  return out.dump(2) + "\n";
}

}  // namespace shexd
