#include "lexing.hpp"

#include <cctype>

namespace shexd::detail {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80;
}

bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '_' ||
         c == '-' || c == '.';
}

char Cursor::get() {
  if (at_end()) fail("unexpected end of input");
  char c = text_[pos_++];
  if (c == '\n') {
    ++line_;
    column_ = 1;
  } else {
    ++column_;
  }
  return c;
}

bool Cursor::consume(char c) {
  if (peek() != c) return false;
  get();
  return true;
}

static bool is_delimiter(char c) {
  return c == '\0' || !(is_name_char(c) || c == ':');
}

bool Cursor::consume_word(std::string_view word) {
  if (text_.substr(pos_, word.size()) != word) return false;
  if (!is_delimiter(peek(word.size()))) return false;
  for (std::size_t i = 0; i < word.size(); ++i) get();
  return true;
}

bool Cursor::consume_word_ci(std::string_view word) {
  if (pos_ + word.size() > text_.size()) return false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (std::toupper(static_cast<unsigned char>(text_[pos_ + i])) !=
        std::toupper(static_cast<unsigned char>(word[i])))
      return false;
  }
  if (!is_delimiter(peek(word.size()))) return false;
  for (std::size_t i = 0; i < word.size(); ++i) get();
  return true;
}

void Cursor::expect(char c) {
  if (!consume(c)) {
    if (at_end()) fail(std::string("expected '") + c + "' before end of input");
    fail(std::string("expected '") + c + "' but found '" + peek() + "'");
  }
}

void Cursor::skip_space_and_comments() {
  while (!at_end()) {
    char c = peek();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      get();
    } else if (c == '#') {
      while (!at_end() && peek() != '\n') get();
    } else {
      break;
    }
  }
}

static void append_utf8(std::string& out, unsigned long code) {
  if (code < 0x80) {
    out += static_cast<char>(code);
  } else if (code < 0x800) {
    out += static_cast<char>(0xC0 | (code >> 6));
    out += static_cast<char>(0x80 | (code & 0x3F));
  } else if (code < 0x10000) {
    out += static_cast<char>(0xE0 | (code >> 12));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (code >> 18));
    out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (code & 0x3F));
  }
}

static unsigned long read_hex(Cursor& cur, int digits) {
  unsigned long code = 0;
  for (int i = 0; i < digits; ++i) {
    char c = cur.get();
    code <<= 4;
    if (c >= '0' && c <= '9') code |= c - '0';
    else if (c >= 'a' && c <= 'f') code |= c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') code |= c - 'A' + 10;
    else cur.fail("invalid hex digit in escape");
  }
  return code;
}

std::string Cursor::read_iriref() {
  expect('<');
  std::string iri;
  while (true) {
    if (at_end()) fail("unterminated IRI");
    char c = get();
    if (c == '>') break;
    if (c == '\\') {
      char e = get();
      if (e == 'u') append_utf8(iri, read_hex(*this, 4));
      else if (e == 'U') append_utf8(iri, read_hex(*this, 8));
      else fail("invalid escape in IRI");
    } else if (c == ' ' || c == '\n' || c == '"' || c == '{' || c == '}' || c == '|' ||
               c == '^' || c == '`') {
      fail(std::string("invalid character '") + c + "' in IRI");
    } else {
      iri += c;
    }
  }
  return iri;
}

std::string Cursor::read_string() {
  expect('"');
  std::string out;
  while (true) {
    if (at_end()) fail("unterminated string");
    char c = get();
    if (c == '"') break;
    if (c == '\n') fail("newline in string literal");
    if (c != '\\') {
      out += c;
      continue;
    }
    char e = get();
    switch (e) {
      case 't': out += '\t'; break;
      case 'b': out += '\b'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case 'f': out += '\f'; break;
      case '"': out += '"'; break;
      case '\'': out += '\''; break;
      case '\\': out += '\\'; break;
      case 'u': append_utf8(out, read_hex(*this, 4)); break;
      case 'U': append_utf8(out, read_hex(*this, 8)); break;
      default: fail(std::string("invalid escape '\\") + e + "'");
    }
  }
  return out;
}

std::string Cursor::read_blank_label() {
  expect('_');
  expect(':');
  std::string label;
  while (is_name_char(peek()) || std::isdigit(static_cast<unsigned char>(peek()))) label += get();
  while (!label.empty() && label.back() == '.') {
    // a trailing '.' terminates the statement; it cannot end a label
    label.pop_back();
    --pos_;
    --column_;
  }
  if (label.empty()) fail("empty blank node label");
  return label;
}

bool Cursor::at_pname_start() const {
  if (peek() == ':') return true;
  if (!is_name_start(peek())) return false;
  std::size_t i = 0;
  while (is_name_char(peek(i))) ++i;
  return peek(i) == ':';
}

std::pair<std::string, std::string> Cursor::read_pname() {
  std::string prefix;
  while (peek() != ':') {
    if (!is_name_char(peek())) fail("expected prefixed name");
    prefix += get();
  }
  get();  // ':'
  std::string local;
  while (is_name_char(peek()) || peek() == ':') local += get();
  while (!local.empty() && local.back() == '.') {
    local.pop_back();
    --pos_;
    --column_;
  }
  return {prefix, local};
}

bool Cursor::at_integer_start() const {
  char c = peek();
  if (c == '+' || c == '-') return std::isdigit(static_cast<unsigned char>(peek(1)));
  return std::isdigit(static_cast<unsigned char>(c));
}

std::string Cursor::read_integer() {
  std::string out;
  if (peek() == '+' || peek() == '-') out += get();
  while (std::isdigit(static_cast<unsigned char>(peek()))) out += get();
  if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))
    fail("decimal literals are not supported");
  if (is_name_start(peek())) fail("malformed number");
  return out;
}

std::string Cursor::read_langtag() {
  expect('@');
  std::string tag;
  while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-') tag += get();
  if (tag.empty()) fail("empty language tag");
  return tag;
}

std::string Cursor::expand(const PrefixMap& prefixes, const std::string& prefix,
                           const std::string& local, std::size_t line,
                           std::size_t column) const {
  auto it = prefixes.find(prefix);
  if (it == prefixes.end()) throw UnknownPrefix(prefix, line, column);
  return it->second + local;
}

}  // namespace shexd::detail
