#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shexd/error.hpp"
#include "shexd/flooding.hpp"
#include "shexd/repair.hpp"
#include "shexd/schema_json.hpp"
#include "shexd/shexc.hpp"
#include "shexd/witness_json.hpp"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kNotWellDefined = 2, kInputError = 3, kResourceBound = 4 };

struct RunConfig {
  std::string schema_path;
  std::vector<std::string> data_paths;
  std::string format;
  std::vector<std::string> nodes;
  std::vector<std::string> shapes;
  bool negate = false;
  std::string typing_file;
  std::string witness_out;
  bool json = false;
  bool lookahead = false;
  std::size_t bag_bound = shexd::kDefaultBagBound;
  std::size_t max_edits = 2;
  bool verbose = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw shexd::Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw shexd::Error("cannot write " + path);
}

shexd::Schema load_schema(const std::string& path) {
  std::string text = read_file(path);
  if (path.ends_with(".json")) return shexd::json_to_schema(text);
  return shexd::parse_schema(text);
}

shexd::TripleSet load_data(const RunConfig& cfg) {
  shexd::TripleSet all;
  std::set<shexd::Triple> seen;
  for (const auto& path : cfg.data_paths) {
    std::string fmt = cfg.format;
    if (fmt.empty()) fmt = path.ends_with(".nt") ? "nt" : "ttl-lite";
    shexd::TripleSet ts = shexd::parse_data(read_file(path), shexd::parse_data_format(fmt));
    for (auto& t : ts.triples)
      if (seen.insert(t).second) all.triples.push_back(std::move(t));
    all.prefixes.insert(ts.prefixes.begin(), ts.prefixes.end());
  }
  return all;
}

shexd::Typing load_typing(const RunConfig& cfg, const shexd::Graph& graph, const shexd::PrefixMap& prefixes) {
  if (cfg.nodes.size() != cfg.shapes.size()) throw shexd::Error("--node and --shape must be given in pairs");
  shexd::Typing typing0;
  for (std::size_t i = 0; i < cfg.nodes.size(); ++i)
    typing0.insert({shexd::resolve_node(graph, cfg.nodes[i], prefixes), shexd::resolve_shape(cfg.shapes[i]),
                    !cfg.negate});
  if (!cfg.typing_file.empty()) {
    shexd::Typing more = shexd::parse_typing_json(read_file(cfg.typing_file), graph, prefixes);
    typing0.insert(more.begin(), more.end());
  }
  if (typing0.empty()) throw shexd::Error("nothing to validate: give --node/--shape or --typing-file");
  return typing0;
}

shexd::PrefixMap merged_prefixes(const shexd::Schema& schema, const shexd::TripleSet& data) {
  shexd::PrefixMap p = schema.prefixes;
  p.insert(data.prefixes.begin(), data.prefixes.end());
  return p;
}

int cmd_check_schema(const RunConfig& cfg) {
  shexd::Schema schema = load_schema(cfg.schema_path);
  for (const auto& w : shexd::lint(schema)) std::cerr << "warning: " << w << "\n";
  shexd::WellDefinedness wd = shexd::check_well_defined(schema);
  if (!wd.ok) {
    std::cout << "not well-defined: " << wd.message() << "\n";
    return kNotWellDefined;
  }
  std::cout << "ok: " << schema.shapes.size() << " shapes\n";
  if (cfg.verbose) {
    for (const auto& [label, def] : schema.shapes) {
      std::cout << "  <" << label << "> negated:";
      for (const auto& n : shexd::negated_shapes(schema, label)) std::cout << " <" << n << ">";
      std::cout << "\n";
    }
  }
  return kOk;
}

int cmd_validate(const RunConfig& cfg) {
  shexd::Schema schema = load_schema(cfg.schema_path);
  shexd::TripleSet data = load_data(cfg);
  shexd::Graph graph = shexd::build_graph(data);
  shexd::PrefixMap prefixes = merged_prefixes(schema, data);
  shexd::Typing typing0 = load_typing(cfg, graph, prefixes);

  shexd::EngineOptions options;
  options.match.bag_bound = cfg.bag_bound;
  options.lookahead = cfg.lookahead;
  shexd::CertainTyping certain(graph, schema, options);
  shexd::FloodingStats stats;
  shexd::ValidationResult result = shexd::flooding_validation(certain, typing0, options, &stats);
  if (cfg.verbose)
    std::cerr << "hypotheses " << stats.hypotheses << ", candidates " << stats.candidates_examined
              << ", certain skips " << stats.certain_skips << ", backtracks " << stats.backtracks << "\n";

  if (!result.ok()) {
    std::cout << (cfg.json ? shexd::failure_to_json(result.failure(), graph)
                           : shexd::failure_report(result.failure(), graph, prefixes));
    return kInvalid;
  }
  const shexd::GlobalTypingWitness& gtw = result.witness();
  if (auto defect = shexd::witness_defect(gtw, graph, schema, certain, options.match))
    throw shexd::Error("internal error: produced witness rejected: " + *defect);
  std::string json = shexd::witness_to_json(gtw, graph);
  if (!cfg.witness_out.empty()) write_file(cfg.witness_out, json);
  if (cfg.json) {
    std::cout << json;
  } else {
    std::cout << "valid:";
    for (const auto& e : typing0) std::cout << " " << shexd::to_string(e, graph, prefixes);
    std::cout << "\n" << shexd::witness_table(gtw, graph, prefixes);
  }
  return kOk;
}

int cmd_repair(const RunConfig& cfg) {
  shexd::Schema schema = load_schema(cfg.schema_path);
  shexd::TripleSet data = load_data(cfg);
  shexd::Graph graph = shexd::build_graph(data);
  shexd::PrefixMap prefixes = merged_prefixes(schema, data);
  shexd::Typing typing0 = load_typing(cfg, graph, prefixes);
  shexd::require_well_defined(schema);

  shexd::RepairOptions options;
  options.max_edits = cfg.max_edits;
  options.reference.bag_bound = cfg.bag_bound;
  shexd::RepairReport report = shexd::enumerate_repairs(graph, schema, typing0, options);
  if (cfg.verbose) std::cerr << "edit sets checked " << report.checked << "\n";
  std::cout << shexd::repairs_to_json(report);
  return report.found ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ShEx validation with global typing witnesses"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--schema", cfg.schema_path, "ShExC schema, or its JSON form (*.json)")->required();
    sub->add_option("--data", cfg.data_paths, "RDF data file (repeatable)")->required();
    sub->add_option("--format", cfg.format, "nt or ttl-lite (default: by extension)")
        ->check(CLI::IsMember({"nt", "ttl-lite", "ttl"}));
    sub->add_option("--node", cfg.nodes, "focus node (repeatable, paired with --shape)");
    sub->add_option("--shape", cfg.shapes, "shape label (repeatable, paired with --node)");
    sub->add_flag("--negate", cfg.negate, "assert the --node/--shape pairs negatively");
    sub->add_option("--typing-file", cfg.typing_file, "JSON initial typing");
    sub->add_option("--bag-bound", cfg.bag_bound, "largest bag for the exhaustive matcher")
        ->check(CLI::Range(std::size_t{1}, shexd::kMaxBagBound));
    sub->add_flag("--verbose", cfg.verbose, "print search statistics");
  };

  CLI::App* check = app.add_subcommand("check-schema", "parse a schema and check it is well-defined");
  check->add_option("--schema", cfg.schema_path, "ShExC schema, or its JSON form (*.json)")->required();
  check->add_flag("--verbose", cfg.verbose, "list the negated shapes of each label");

  CLI::App* validate = app.add_subcommand("validate", "build a global typing witness for the initial typing");
  add_input(validate);
  validate->add_option("--witness-out", cfg.witness_out, "write the witness JSON here");
  validate->add_flag("--json", cfg.json, "print JSON instead of a table");
  validate->add_flag("--lookahead", cfg.lookahead, "prune candidates by one-step look-ahead");

  CLI::App* repair = app.add_subcommand("repair", "search for minimal edit sets that make the typing valid");
  add_input(repair);
  repair->add_option("--max-edits", cfg.max_edits, "largest edit set tried")->check(CLI::Range(0, 4));
  repair->add_flag("--json", cfg.json, "accepted for symmetry; output is always JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check_schema(cfg);
    if (*validate) return cmd_validate(cfg);
    return cmd_repair(cfg);
  } catch (const shexd::NotWellDefined& e) {
    std::cerr << "not well-defined: " << e.what() << "\n";
    return kNotWellDefined;
  } catch (const shexd::BagTooLarge& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kResourceBound;
  } catch (const shexd::SearchBudgetExceeded& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kResourceBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
