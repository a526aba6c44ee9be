#include <gtest/gtest.h>

#include <optional>

#include "generators.hpp"
#include "shexd/flooding.hpp"
#include "shexd/reference.hpp"
#include "shexd/shexc.hpp"
#include "support.hpp"

using namespace shexd;

namespace {

struct Built {
  Graph graph;
  Typing typing0;
};

Built build(const test::RandomInstance& ri) {
  Built b{Graph(ri.triples), {}};
  for (const auto& [term, label, positive] : ri.typing0) b.typing0.insert({*b.graph.find(term), label, positive});
  return b;
}

}  // namespace

// Flooding and the exhaustive reference give the same verdict, and every
// accepted witness passes the verifier.
TEST(Property, FloodingAgreesWithReference) {
  test::Rng rng(20160315);
  int compared = 0, accepted = 0, rejected = 0, skipped = 0;
  for (int round = 0; round < 10000 && compared < 1000; ++round) {
    test::RandomInstance ri = test::random_instance(rng);
    if (!check_well_defined(ri.schema).ok) continue;
    Built b = build(ri);
    // sometimes add a negative entry on a label the certain typing decides
    CertainTyping cert(b.graph, ri.schema);
    if (!cert.negated().empty() && test::coin(rng, 0.3) && !ri.focus.empty()) {
      auto it = cert.negated().begin();
      std::advance(it, test::pick(rng, 0, static_cast<std::uint32_t>(cert.negated().size() - 1)));
      NodeId n = *b.graph.find(ri.focus[test::pick(rng, 0, static_cast<std::uint32_t>(ri.focus.size() - 1))]);
      if (!b.typing0.count({n, *it, true})) b.typing0.insert({n, *it, false});
    }
    std::optional<ValidationResult> maybe;
    try {
      maybe = reference_validate(b.graph, ri.schema, b.typing0);
    } catch (const SearchBudgetExceeded&) {
      ++skipped;
      continue;
    }
    const ValidationResult& ref = *maybe;
    ValidationResult fl = flooding_validation(cert, b.typing0);
    ASSERT_EQ(fl.ok(), ref.ok()) << "round " << round << "\n"
                                 << to_shexc(ri.schema) << to_ntriples(ri.triples);
    if (fl.ok()) {
      ++accepted;
      for (const auto& e : b.typing0) EXPECT_TRUE(fl.witness().typing.count(e)) << "round " << round;
      EXPECT_EQ(witness_defect(fl.witness(), b.graph, ri.schema, cert), std::nullopt) << "round " << round;
      EXPECT_EQ(witness_defect(ref.witness(), b.graph, ri.schema, cert), std::nullopt) << "round " << round;
    } else {
      ++rejected;
    }
    ++compared;
  }
  EXPECT_GE(compared, 200);
  EXPECT_GT(accepted, 20);
  EXPECT_GT(rejected, 20);
  RecordProperty("accepted", accepted);
  RecordProperty("rejected", rejected);
  RecordProperty("skipped", skipped);
}

TEST(Property, LookaheadAgrees) {
  test::Rng rng(7);
  EngineOptions la;
  la.lookahead = true;
  int compared = 0;
  for (int round = 0; round < 2000 && compared < 300; ++round) {
    test::RandomInstance ri = test::random_instance(rng);
    if (!check_well_defined(ri.schema).ok) continue;
    Built b = build(ri);
    EXPECT_EQ(flooding_validation(b.graph, ri.schema, b.typing0).ok(),
              flooding_validation(b.graph, ri.schema, b.typing0, la).ok())
        << "round " << round;
    ++compared;
  }
  EXPECT_GE(compared, 200);
}

TEST(Property, ShexcRoundTrip) {
  test::Rng rng(99);
  for (int round = 0; round < 300; ++round) {
    test::RandomInstance ri = test::random_instance(rng);
    std::string text = to_shexc(ri.schema);
    Schema back = parse_schema(text);
    EXPECT_EQ(to_shexc(back), text) << text;
  }
}
