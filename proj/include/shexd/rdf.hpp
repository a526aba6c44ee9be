#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace shexd {

namespace vocab {
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view xsd_date = "http://www.w3.org/2001/XMLSchema#date";
inline constexpr std::string_view rdf_lang_string =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
}  // namespace vocab

enum class TermKind { Iri, Blank, Literal };

// What val() returns for a node: an IRI, a literal, or the blank constant _b.
// Blank values carry no label; two blank values are always equal.
struct Value {
  TermKind kind = TermKind::Iri;
  std::string text;  // IRI or lexical form; empty for blanks
  std::string datatype;
  std::string lang;

  static Value iri(std::string iri);
  static Value blank();
  static Value literal(std::string lexical, std::string datatype = std::string(vocab::xsd_string),
                       std::string lang = {});

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_blank() const { return kind == TermKind::Blank; }
  bool is_literal() const { return kind == TermKind::Literal; }

  // N-Triples rendering; blanks render as "_b".
  std::string to_string() const;

  auto operator<=>(const Value&) const = default;
  bool operator==(const Value&) const = default;
};

// A term as it appears in a triple. Blank nodes keep their document label.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string text;  // IRI, blank label (without "_:"), or lexical form
  std::string datatype;
  std::string lang;

  static Term iri(std::string iri);
  static Term blank(std::string label);
  static Term literal(std::string lexical, std::string datatype = std::string(vocab::xsd_string),
                      std::string lang = {});

  Value value() const;
  std::string to_ntriples() const;

  auto operator<=>(const Term&) const = default;
  bool operator==(const Term&) const = default;
};

struct Triple {
  Term subject;
  std::string predicate;
  Term object;

  std::string to_ntriples() const;

  auto operator<=>(const Triple&) const = default;
  bool operator==(const Triple&) const = default;
};

using PrefixMap = std::map<std::string, std::string, std::less<>>;

// Ordered, duplicate-free triples plus the prefixes declared by the source.
struct TripleSet {
  std::vector<Triple> triples;
  PrefixMap prefixes;

  std::size_t size() const { return triples.size(); }
  bool empty() const { return triples.empty(); }
};

enum class DataFormat { NTriples, TurtleLite };

DataFormat parse_data_format(std::string_view name);

// Parses N-Triples ("nt") or the Turtle subset ("ttl-lite"): @prefix/PREFIX,
// prefixed names, ';' and ',' lists, strings with @lang or ^^datatype, and
// integers. Throws SyntaxError / UnknownPrefix.
TripleSet parse_data(std::string_view text, DataFormat format);

// One line per triple, in the given order.
std::string to_ntriples(const std::vector<Triple>& triples);

// Escapes a lexical form for use inside N-Triples double quotes.
std::string escape_string(std::string_view text);

// Shortens an IRI with the longest matching namespace; falls back to <iri>.
std::string compact_iri(std::string_view iri, const PrefixMap& prefixes);

}  // namespace shexd
