// One line per acceptance criterion. Exits 0 iff the failing criteria are
// exactly those named by --expect-fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "generators.hpp"
#include "shexd/flooding.hpp"
#include "shexd/reference.hpp"
#include "shexd/repair.hpp"
#include "support.hpp"

using namespace shexd;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

Typing running_typing0(const test::Instance& inst) {
  return {inst.pos("ex:issue1", "IssueShape"), inst.pos("ex:issue2", "IssueShape")};
}

Outcome running_example() {
  auto inst = test::running_example();
  ValidationResult r = flooding_validation(inst.graph, inst.schema, running_typing0(inst));
  if (!r.ok()) return {false, "validation failed"};
  // the 9 pairs annotated in the data, plus (ren, UserShape) forced by
  // issue2's ^is:affectedBy
  Typing annotated = {
      inst.pos("ex:issue1", "IssueShape"),       inst.pos("ex:issue2", "IssueShape"),
      inst.pos("ex:ren", "TesterShape"),         inst.pos("ex:noa", "ProgrammerShape"),
      inst.pos("ex:shristi", "ProgrammerShape"), inst.pos("ex:fatima", "UserShape"),
      inst.pos("ex:fatima", "ClientShape"),      inst.pos("ex:emin", "UserShape"),
      inst.pos("ex:emin", "ClientShape"),
  };
  CertainTyping cert(inst.graph, inst.schema);
  Typing positives;
  for (const auto& e : r.witness().typing)
    if (e.positive) positives.insert(e);
  for (const auto& e : annotated)
    if (!positives.count(e)) return {false, "missing " + to_string(e, inst.graph, inst.prefixes)};
  for (const auto& e : positives) {
    if (annotated.count(e)) continue;
    bool certain = cert.decidable(e.shape) && cert.holds(e.node, e.shape);
    bool forced = e == inst.pos("ex:ren", "UserShape");
    if (!certain && !forced) return {false, "unexpected " + to_string(e, inst.graph, inst.prefixes)};
  }
  const LocalWitness& w = r.witness().lw.at({inst.node("ex:issue1"), "IssueShape"});
  if (w.at(inst.edge("ex:issue1", "is:dueDate", "\"15/12/2015\"^^xsd:date")) != Consumer::open())
    return {false, "edge 5 not open"};
  if (w.at(inst.edge("ex:issue1", "is:reproducedBy", "ex:emin")) !=
      Consumer::extra({"http://issues.example/ns#reproducedBy", false}))
    return {false, "edge 4 not extra"};
  if (!verify_global_typing_witness(r.witness(), inst.graph, inst.schema, cert)) return {false, "witness rejected"};
  return {true, std::to_string(positives.size()) + " positive pairs"};
}

Outcome candidate_count() {
  auto inst = test::running_example();
  std::size_t n =
      candidate_witnesses(inst.graph, inst.node("ex:issue1"), inst.schema.shapes.at("IssueShape")).size();
  return {n == 27, std::to_string(n) + " candidates"};
}

Outcome repeated_properties() {
  auto inst = test::load("issues.shex", "issues_shristi_role.ttl");
  ValidationResult r = flooding_validation(inst.graph, inst.schema, {inst.pos("ex:issue2", "IssueShape")});
  if (!r.ok()) return {false, "validation failed"};
  const LocalWitness& w = r.witness().lw.at({inst.node("ex:issue2"), "IssueShape"});
  bool shristi = w.at(inst.edge("ex:issue2", "is:reproducedBy", "ex:shristi")) == Consumer::by_constraint(3);
  bool ren = w.at(inst.edge("ex:issue2", "is:reproducedBy", "ex:ren")) == Consumer::by_constraint(2);
  return {shristi && ren, std::string("shristi ") + (shristi ? "C3" : "not C3") + ", ren " + (ren ? "C2" : "not C2")};
}

Outcome extra_semantics() {
  auto with = test::running_example();
  auto without = test::load("issues_no_extra.shex", "issues.ttl");
  bool a = flooding_validation(with.graph, with.schema, {with.pos("ex:issue1", "IssueShape")}).ok();
  bool b = flooding_validation(without.graph, without.schema, {without.pos("ex:issue1", "IssueShape")}).ok();
  return {a && !b, std::string("with EXTRA ") + (a ? "valid" : "invalid") + ", without " + (b ? "valid" : "invalid")};
}

Outcome negative_certain() {
  auto inst = test::running_example();
  ValidationResult r = flooding_validation(inst.graph, inst.schema, {inst.pos("ex:emin", "ProgrammerShape")});
  bool rejected = !r.ok() && r.failure().reason == ValidationFailure::Reason::IncompatibleInitialTyping;
  CertainTyping cert(inst.graph, inst.schema);
  bool recorded = cert.typing().count(inst.neg("ex:emin", "ProgrammerShape")) != 0;
  return {rejected && recorded, std::string(rejected ? "rejected" : "accepted") +
                                    (recorded ? ", certain typing has the negative pair" : ", pair not recorded")};
}

Outcome well_definedness() {
  bool running = check_well_defined(test::running_example().schema).ok;
  WellDefinedness self = check_well_defined(parse_schema(test::slurp(test::corpus_path("negated_self.shex"))));
  WellDefinedness cycle = check_well_defined(parse_schema(test::slurp(test::corpus_path("negated_cycle.shex"))));
  bool pass = running && !self.ok && !self.cycle.empty() && !cycle.ok && !cycle.cycle.empty();
  return {pass, "self: " + self.message() + "; cycle: " + cycle.message()};
}

Outcome interval_oracle() {
  test::Rng rng(20151215);
  int checked = 0;
  for (int round = 0; checked < 2000 && round < 20000; ++round) {
    int alphabet = static_cast<int>(test::pick(rng, 1, 6));
    ShapeExpr e = unfold_repetitions(test::ExprGenerator(rng, alphabet, 4)());
    if (!is_single_occurrence(e)) continue;
    ConsumerBag bag = test::random_bag(rng, alphabet, 10);
    if (interval(e, bag).contains(1) != brute_match(e, bag))
      return {false, "disagreement on " + expr_to_shexc(e)};
    ++checked;
  }
  return {checked >= 1000, std::to_string(checked) + " expressions agree"};
}

Outcome flooding_oracle() {
  int compared = 0, accepted = 0, skipped = 0;
  auto compare = [&](const Graph& g, const Schema& s, const Typing& t0) -> std::string {
    std::optional<ValidationResult> maybe;
    try {
      maybe = reference_validate(g, s, t0);
    } catch (const SearchBudgetExceeded&) {
      ++skipped;
      return {};
    }
    const ValidationResult& ref = *maybe;
    ValidationResult fl = flooding_validation(g, s, t0);
    if (fl.ok() != ref.ok()) return "verdicts differ";
    if (fl.ok()) {
      CertainTyping cert(g, s);
      if (!verify_global_typing_witness(fl.witness(), g, s, cert)) return "witness rejected";
      ++accepted;
    }
    ++compared;
    return {};
  };

  // corpus: every node against every label of each corpus instance
  std::vector<test::Instance> corpus = {test::running_example(), test::load("issues.shex", "issues_shristi_role.ttl"),
                                        test::load("issues_no_extra.shex", "issues.ttl"),
                                        test::load("issues.shex", "repairing.ttl"),
                                        test::load("boolean.shex", "boolean.ttl")};
  for (const auto& inst : corpus) {
    for (NodeId n = 0; n < inst.graph.node_count(); ++n) {
      if (inst.graph.node(n).term.kind == TermKind::Literal) continue;
      for (const auto& [label, def] : inst.schema.shapes) {
        std::string err = compare(inst.graph, inst.schema, {pos(n, label)});
        if (!err.empty()) return {false, err + " on corpus pair " + label};
      }
    }
  }
  int corpus_pairs = compared;

  test::Rng rng(20160315);
  int random = 0;
  for (int round = 0; random < 500 && round < 10000; ++round) {
    test::RandomInstance ri = test::random_instance(rng);
    if (!check_well_defined(ri.schema).ok) continue;
    Graph g(ri.triples);
    Typing t0;
    for (const auto& [term, label, positive] : ri.typing0) t0.insert({*g.find(term), label, positive});
    int before = skipped;
    std::string err = compare(g, ri.schema, t0);
    if (!err.empty()) return {false, err + " on random round " + std::to_string(round)};
    if (skipped == before) ++random;
  }
  std::ostringstream os;
  os << corpus_pairs << " corpus pairs + " << random << " random instances agree, " << accepted << " accepted, "
     << skipped << " over the reference budget";
  return {random >= 200, os.str()};
}

std::string edits_brief(const EditSet& e) {
  std::string out;
  for (const auto& t : e.deletions) out += " -" + t.to_ntriples();
  for (const auto& t : e.insertions) out += " +" + t.to_ntriples();
  return out;
}

Outcome repairs() {
  auto boolean = test::load("boolean.shex", "boolean.ttl");
  RepairReport b = enumerate_repairs(boolean.graph, boolean.schema, {boolean.pos("ex:term", "Term")});
  std::size_t valuations = 0;
  for (const auto& e : b.repairs) {
    bool valuation = e.insertions.empty() && e.deletions.size() == 2;
    std::set<std::string> vars;
    for (const auto& t : e.deletions) vars.insert(t.predicate.substr(0, t.predicate.size() - 2));
    if (valuation && vars.size() == 2) ++valuations;
  }
  bool boolean_ok = b.found && b.min_size == 2 && b.repairs.size() == 4 && valuations == 4;

  auto repairing = test::load("issues.shex", "repairing.ttl");
  RepairReport r = enumerate_repairs(repairing.graph, repairing.schema, {repairing.pos("ex:issue", "IssueShape")});
  bool emma = r.found && r.min_size == 1;
  for (const auto& e : r.repairs) {
    bool ok = e.deletions.empty() && e.insertions.size() == 1 &&
              e.insertions.begin()->subject == Term::iri("http://example.org/emma") &&
              e.insertions.begin()->predicate == "http://issues.example/ns#clientNumber";
    emma = emma && ok;
  }

  std::ostringstream os;
  os << "boolean: minSize " << (b.found ? std::to_string(b.min_size) : "none") << ", " << b.repairs.size()
     << " repairs (" << valuations << " valuations";
  if (b.repairs.size() != valuations) os << ", " << b.repairs.size() - valuations << " re-point ex:has-vars";
  os << "); repairing: minSize " << (r.found ? std::to_string(r.min_size) : "none") << ",";
  for (const auto& e : r.repairs) os << edits_brief(e);
  return {boolean_ok && emma, os.str()};
}

Outcome determinism() {
  auto run = [] {
    auto inst = test::running_example();
    ValidationResult r = flooding_validation(inst.graph, inst.schema, running_typing0(inst));
    return r.ok() ? witness_to_json(r.witness(), inst.graph) : std::string();
  };
  std::string a = run(), b = run();
  return {!a.empty() && a == b, std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> expect_fail;
  app.add_option("--expect-fail", expect_fail, "criteria known to fail");
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria = {
      {1, "running example conformance", 1, running_example},
      {2, "candidate count", 0, candidate_count},
      {3, "repeated properties", 0, repeated_properties},
      {4, "EXTRA semantics", 0, extra_semantics},
      {5, "negative certain typing", 0, negative_certain},
      {6, "well-definedness", 0, well_definedness},
      {7, "interval/oracle equivalence", 30, interval_oracle},
      {8, "flooding/oracle equivalence", 60, flooding_oracle},
      {9, "repairs", 30, repairs},
      {10, "determinism", 0, determinism},
  };

  std::set<int> failed;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += " (over the time limit)";
    }
    if (!o.pass) failed.insert(c.id);
    std::printf("%s %2d %-30s %8.3fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), seconds,
                o.detail.c_str());
  }
  std::set<int> expected(expect_fail.begin(), expect_fail.end());
  std::printf("%zu/%zu passed\n", criteria.size() - failed.size(), criteria.size());
  if (failed != expected) {
    std::printf("failing criteria differ from --expect-fail\n");
    return 1;
  }
  return 0;
}
