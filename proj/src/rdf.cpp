#include "shexd/rdf.hpp"

#include <set>

#include "lexing.hpp"

namespace shexd {

Value Value::iri(std::string iri) { return Value{TermKind::Iri, std::move(iri), {}, {}}; }

Value Value::blank() { return Value{TermKind::Blank, {}, {}, {}}; }

Value Value::literal(std::string lexical, std::string datatype, std::string lang) {
  if (!lang.empty()) datatype = std::string(vocab::rdf_lang_string);
  return Value{TermKind::Literal, std::move(lexical), std::move(datatype), std::move(lang)};
}

std::string escape_string(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

static std::string literal_ntriples(const std::string& lexical, const std::string& datatype,
                                    const std::string& lang) {
  std::string out = "\"" + escape_string(lexical) + "\"";
  if (!lang.empty()) return out + "@" + lang;
  if (datatype == vocab::xsd_string) return out;
  return out + "^^<" + datatype + ">";
}

std::string Value::to_string() const {
  switch (kind) {
    case TermKind::Iri: return "<" + text + ">";
    case TermKind::Blank: return "_b";
    case TermKind::Literal: return literal_ntriples(text, datatype, lang);
  }
  return {};
}

Term Term::iri(std::string iri) { return Term{TermKind::Iri, std::move(iri), {}, {}}; }

Term Term::blank(std::string label) { return Term{TermKind::Blank, std::move(label), {}, {}}; }

Term Term::literal(std::string lexical, std::string datatype, std::string lang) {
  if (!lang.empty()) datatype = std::string(vocab::rdf_lang_string);
  return Term{TermKind::Literal, std::move(lexical), std::move(datatype), std::move(lang)};
}

Value Term::value() const {
  switch (kind) {
    case TermKind::Iri: return Value::iri(text);
    case TermKind::Blank: return Value::blank();
    case TermKind::Literal: return Value::literal(text, datatype, lang);
  }
  return {};
}

std::string Term::to_ntriples() const {
  switch (kind) {
    case TermKind::Iri: return "<" + text + ">";
    case TermKind::Blank: return "_:" + text;
    case TermKind::Literal: return literal_ntriples(text, datatype, lang);
  }
  return {};
}

std::string Triple::to_ntriples() const {
  return subject.to_ntriples() + " <" + predicate + "> " + object.to_ntriples() + " .";
}

std::string to_ntriples(const std::vector<Triple>& triples) {
  std::string out;
  for (const auto& t : triples) out += t.to_ntriples() + "\n";
  return out;
}

DataFormat parse_data_format(std::string_view name) {
  if (name == "nt") return DataFormat::NTriples;
  if (name == "ttl-lite" || name == "ttl") return DataFormat::TurtleLite;
  throw Error("unknown data format '" + std::string(name) + "' (expected nt or ttl-lite)");
}

std::string compact_iri(std::string_view iri, const PrefixMap& prefixes) {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& entry : prefixes) {
    const auto& ns = entry.second;
    if (ns.empty() || iri.size() <= ns.size() || iri.substr(0, ns.size()) != ns) continue;
    if (!best || ns.size() > best->second.size()) best = &entry;
  }
  if (best) {
    std::string_view local = iri.substr(best->second.size());
    bool ok = true;
    for (char c : local) ok = ok && (detail::is_name_char(c) || c == ':');
    if (ok && local.back() != '.') return best->first + ":" + std::string(local);
  }
  return "<" + std::string(iri) + ">";
}

namespace {

class DataParser {
 public:
  DataParser(std::string_view text, DataFormat format) : cur_(text), format_(format) {}

  TripleSet parse() {
    cur_.skip_space_and_comments();
    while (!cur_.at_end()) {
      if (turtle() && directive()) {
        cur_.skip_space_and_comments();
        continue;
      }
      statement();
      cur_.skip_space_and_comments();
    }
    return std::move(out_);
  }

 private:
  bool turtle() const { return format_ == DataFormat::TurtleLite; }

  bool directive() {
    if (cur_.peek() == '@') {
      std::size_t line = cur_.line(), column = cur_.column();
      cur_.get();
      if (!cur_.consume_word("prefix")) throw SyntaxError("unsupported directive", line, column);
      prefix_body();
      cur_.skip_space_and_comments();
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
    cur_.skip_space_and_comments();
    auto [prefix, local] = cur_.read_pname();
    if (!local.empty()) cur_.fail("expected a namespace prefix ending in ':'");
    cur_.skip_space_and_comments();
    if (cur_.peek() != '<') cur_.fail("expected an IRI after the prefix name");
    out_.prefixes[prefix] = cur_.read_iriref();
  }

  void statement() {
    Term subject = subject_term();
    cur_.skip_space_and_comments();
    while (true) {
      std::string predicate = iri();
      cur_.skip_space_and_comments();
      while (true) {
        add(Triple{subject, predicate, object_term()});
        cur_.skip_space_and_comments();
        if (turtle() && cur_.consume(',')) {
          cur_.skip_space_and_comments();
          continue;
        }
        break;
      }
      if (turtle() && cur_.consume(';')) {
        cur_.skip_space_and_comments();
        while (cur_.consume(';')) cur_.skip_space_and_comments();
        if (cur_.peek() == '.') break;
        continue;
      }
      break;
    }
    cur_.expect('.');
  }

  void add(Triple t) {
    if (seen_.insert(t).second) out_.triples.push_back(std::move(t));
  }

  std::string iri() {
    if (cur_.peek() == '<') return cur_.read_iriref();
    if (turtle() && cur_.at_pname_start()) {
      std::size_t line = cur_.line(), column = cur_.column();
      auto [prefix, local] = cur_.read_pname();
      return cur_.expand(out_.prefixes, prefix, local, line, column);
    }
    if (cur_.at_end()) cur_.fail("unexpected end of input, expected an IRI");
    cur_.fail(std::string("expected an IRI but found '") + cur_.peek() + "'");
  }

  Term subject_term() {
    if (cur_.peek() == '_' && cur_.peek(1) == ':') return Term::blank(cur_.read_blank_label());
    return Term::iri(iri());
  }

  Term object_term() {
    char c = cur_.peek();
    if (c == '_' && cur_.peek(1) == ':') return Term::blank(cur_.read_blank_label());
    if (c == '"') {
      std::string lexical = cur_.read_string();
      if (cur_.peek() == '@') return Term::literal(lexical, {}, cur_.read_langtag());
      if (cur_.peek() == '^' && cur_.peek(1) == '^') {
        cur_.get();
        cur_.get();
        return Term::literal(lexical, iri());
      }
      return Term::literal(lexical);
    }
    if (turtle() && cur_.at_integer_start())
      return Term::literal(cur_.read_integer(), std::string(vocab::xsd_integer));
    return Term::iri(iri());
  }

  detail::Cursor cur_;
  DataFormat format_;
  TripleSet out_;
  std::set<Triple> seen_;
};

}  // namespace

TripleSet parse_data(std::string_view text, DataFormat format) {
  return DataParser(text, format).parse();
}

}  // namespace shexd
