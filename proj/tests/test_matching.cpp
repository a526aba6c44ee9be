#include <gtest/gtest.h>

#include "shexd/matching.hpp"
#include "support.hpp"

using namespace shexd;

namespace {

const std::string kIs = "http://issues.example/ns#";

struct IssueFixture : ::testing::Test {
  test::Instance inst = test::running_example();
  const ShapeDefinition& issue = inst.schema.shape("IssueShape");
  NodeId issue1 = inst.node("ex:issue1");

  EdgeId e1 = inst.edge("ex:issue1", "is:reportedBy", "ex:fatima");
  EdgeId e2 = inst.edge("ex:issue1", "is:reproducedBy", "ex:ren");
  EdgeId e3 = inst.edge("ex:issue1", "is:reproducedBy", "ex:noa");
  EdgeId e4 = inst.edge("ex:issue1", "is:reproducedBy", "ex:emin");
  EdgeId e5 = inst.edge("ex:issue1", "is:dueDate", "\"15/12/2015\"^^xsd:date");
  EdgeId e6 = inst.edge("ex:issue1", "^is:affectedBy", "ex:emin");

  // Example 1's mapping
  LocalWitness example1() const {
    return {{e1, Consumer::by_constraint(1)}, {e2, Consumer::by_constraint(2)}, {e3, Consumer::by_constraint(3)},
            {e4, Consumer::by_constraint(3)}, {e5, Consumer::open()},            {e6, Consumer::by_constraint(4)}};
  }
};

Consumer extra_reproduced() { return Consumer::extra({kIs + "reproducedBy", false}); }

}  // namespace

TEST_F(IssueFixture, MatchingConsumers) {
  EXPECT_EQ(matching_consumers(inst.graph, e5, issue), std::vector<Consumer>{Consumer::open()});
  EXPECT_EQ(matching_consumers(inst.graph, e4, issue),
            (std::vector<Consumer>{Consumer::by_constraint(2), Consumer::by_constraint(3), extra_reproduced()}));
  EXPECT_EQ(matching_consumers(inst.graph, e6, issue), std::vector<Consumer>{Consumer::by_constraint(4)});
  EXPECT_EQ(matching_consumers(inst.graph, e1, issue), std::vector<Consumer>{Consumer::by_constraint(1)});
}

TEST_F(IssueFixture, TwentySevenCandidates) {
  CandidateWitnesses c(inst.graph, issue1, issue);
  EXPECT_EQ(c.count(), 27u);
  EXPECT_EQ(candidate_witnesses(inst.graph, issue1, issue).size(), 27u);
}

TEST_F(IssueFixture, CandidatesAreDistinctAndInLexicographicOrder) {
  auto all = candidate_witnesses(inst.graph, issue1, issue);
  std::set<LocalWitness> distinct(all.begin(), all.end());
  EXPECT_EQ(distinct.size(), all.size());
  CandidateWitnesses c(inst.graph, issue1, issue);
  EXPECT_EQ(c.edges().size(), 6u);
  // the last edge varies fastest
  LocalWitness first = c.current();
  c.next();
  LocalWitness second = c.current();
  std::size_t differing = 0;
  EdgeId last_changed = 0;
  for (const auto& [e, k] : first)
    if (second.at(e) != k) {
      ++differing;
      last_changed = e;
    }
  EXPECT_EQ(differing, 1u);
  std::vector<EdgeId> multi;
  for (std::size_t i = 0; i < c.edges().size(); ++i)
    if (c.lists()[i].size() > 1) multi.push_back(c.edges()[i]);
  EXPECT_EQ(last_changed, multi.back());
}

TEST_F(IssueFixture, LookaheadPrunesToFour) {
  EXPECT_EQ(lookahead_prune(matching_consumers(inst.graph, e4, issue), inst.graph, e4, issue, inst.schema),
            (std::vector<Consumer>{extra_reproduced()}));
  CandidateWitnesses c(inst.graph, issue1, issue, &inst.schema);
  EXPECT_EQ(c.count(), 4u);
  // pruning only drops candidates
  auto pruned = candidate_witnesses(inst.graph, issue1, issue, &inst.schema);
  auto all = candidate_witnesses(inst.graph, issue1, issue);
  for (const auto& w : pruned) EXPECT_NE(std::find(all.begin(), all.end(), w), all.end());
}

TEST_F(IssueFixture, RequiredProperties) {
  auto req = required_properties(inst.schema.shape("ProgrammerShape").expr);
  EXPECT_EQ(req.size(), 2u);
  EXPECT_TRUE(req.count({kIs + "experience", false}));
  auto user = required_properties(inst.schema.shape("UserShape").expr);
  EXPECT_TRUE(user.empty());
}

TEST_F(IssueFixture, ClientShapeOnFatimaHasOneCandidate) {
  const ShapeDefinition& client = inst.schema.shape("ClientShape");
  NodeId fatima = inst.node("ex:fatima");
  auto all = candidate_witnesses(inst.graph, fatima, client);
  ASSERT_EQ(all.size(), 1u);
  std::size_t open = 0, by_c1 = 0;
  for (const auto& [e, c] : all[0]) {
    if (c == Consumer::open()) ++open;
    if (c == Consumer::by_constraint(1)) ++by_c1;
  }
  EXPECT_EQ(open, 3u);
  EXPECT_EQ(by_c1, 1u);
}

TEST_F(IssueFixture, LocalWitnessExamples) {
  LocalWitness w = example1();
  EXPECT_TRUE(check_local_witness(inst.graph, issue1, issue, w));
  w[e4] = extra_reproduced();
  EXPECT_TRUE(check_local_witness(inst.graph, issue1, issue, w));
  LocalWitness bad = example1();
  bad[e5] = extra_reproduced();
  EXPECT_FALSE(check_local_witness(inst.graph, issue1, issue, bad));
  // both reproducedBy edges to C2 breaks the single-tester bound
  LocalWitness two_testers = example1();
  two_testers[e3] = Consumer::by_constraint(2);
  two_testers[e4] = extra_reproduced();
  EXPECT_FALSE(check_local_witness(inst.graph, issue1, issue, two_testers));
  EXPECT_FALSE(check_local_witness(inst.graph, issue1, issue, two_testers, {16, true}));
}

TEST_F(IssueFixture, WitnessMustBeTotal) {
  LocalWitness w = example1();
  w.erase(e5);
  EXPECT_FALSE(check_local_witness(inst.graph, issue1, issue, w));
}

TEST_F(IssueFixture, OpenOnlyForUnmentionedProperties) {
  LocalWitness w = example1();
  w[e3] = Consumer::open();
  w[e4] = Consumer::by_constraint(3);
  EXPECT_FALSE(check_local_witness(inst.graph, issue1, issue, w));
}

TEST_F(IssueFixture, Propagation) {
  Typing p = propagation(inst.graph, issue, example1());
  Typing expected = {inst.pos("ex:fatima", "UserShape"),      inst.pos("ex:fatima", "ClientShape"),
                     inst.pos("ex:ren", "TesterShape"),       inst.pos("ex:noa", "ProgrammerShape"),
                     inst.pos("ex:emin", "ProgrammerShape"),  inst.pos("ex:emin", "UserShape")};
  EXPECT_EQ(p, expected);
  LocalWitness none;
  for (const auto& [e, c] : example1()) none[e] = e == e5 ? Consumer::open() : extra_reproduced();
  EXPECT_TRUE(propagation(inst.graph, issue, none).empty());
}

TEST_F(IssueFixture, NegatedConjunctsPropagateNegatively) {
  const ShapeDefinition& low = inst.schema.shape("LowImpactIssueShape");
  LocalWitness w;
  for (EdgeId e : inst.graph.neighbourhood(issue1)) w[e] = matching_consumers(inst.graph, e, low).front();
  Typing p = propagation(inst.graph, low, w);
  EXPECT_TRUE(p.count(inst.neg("ex:fatima", "ClientShape")));
  EXPECT_TRUE(p.count(inst.neg("ex:emin", "ClientShape")));
}

TEST(Matching, ClosedShapesRejectOpenEdges) {
  Schema s = parse_schema("PREFIX ex: <http://e/> <S> CLOSED { ex:p IRI } <T> ^CLOSED { ex:p IRI }");
  Graph g = build_graph(parse_data("<http://e/a> <http://e/p> <http://e/b> . <http://e/a> <http://e/q> <http://e/c> .\n"
                                   "<http://e/z> <http://e/p> <http://e/a> .",
                                   DataFormat::NTriples));
  NodeId a = *g.find(Term::iri("http://e/a"));
  auto count_valid = [&](const ShapeLabel& l) {
    int n = 0;
    for (const auto& w : candidate_witnesses(g, a, s.shape(l))) n += check_local_witness(g, a, s.shape(l), w);
    return n;
  };
  EXPECT_EQ(count_valid("S"), 0);  // ex:q is forward and unmentioned
  EXPECT_EQ(count_valid("T"), 0);  // ^ex:p is inverse and unmentioned
}

TEST(Matching, EmptyNeighbourhoodHasOneCandidate) {
  Schema s = parse_schema("<S> { }");
  Graph g = build_graph(parse_data("<http://e/a> <http://e/p> <http://e/b> .", DataFormat::NTriples));
  NodeId a = *g.find(Term::iri("http://e/a"));
  EXPECT_EQ(CandidateWitnesses(g, a, s.shape("S")).count(), 1u);
  Schema t = parse_schema("PREFIX ex: <http://e/> <S> { ex:p IRI }");
  NodeId b = *g.find(Term::iri("http://e/b"));
  EXPECT_EQ(CandidateWitnesses(g, b, t.shape("S")).count(), 1u);
  EXPECT_FALSE(check_local_witness(g, b, t.shape("S"), CandidateWitnesses(g, b, t.shape("S")).current()));
}

TEST(Matching, ExtraForbiddenWhereValueSetConstraintMatches) {
  Schema s = parse_schema("PREFIX ex: <http://e/> <S> EXTRA ex:p { ex:p (ex:b) ? }");
  Graph g = build_graph(parse_data("<http://e/a> <http://e/p> <http://e/b> .", DataFormat::NTriples));
  NodeId a = *g.find(Term::iri("http://e/a"));
  EdgeId e = g.neighbourhood(a)[0];
  const ShapeDefinition& def = s.shape("S");
  EXPECT_TRUE(check_local_witness(g, a, def, {{e, Consumer::by_constraint(1)}}));
  EXPECT_FALSE(check_local_witness(g, a, def, {{e, Consumer::extra({"http://e/p", false})}}));
}
