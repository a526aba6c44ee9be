#pragma once

// Character-level scanning shared by the Turtle-lite and ShExC parsers.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

#include "shexd/error.hpp"
#include "shexd/rdf.hpp"

namespace shexd::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  char get();
  bool consume(char c);
  bool consume_word(std::string_view word);  // case-sensitive keyword followed by a delimiter
  bool consume_word_ci(std::string_view word);
  void expect(char c);

  void skip_space_and_comments();

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError(message, line_, column_);
  }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

  // At '<': reads an IRIREF and returns its content.
  std::string read_iriref();
  // At '"': reads a short string literal with ECHAR/UCHAR escapes.
  std::string read_string();
  // At "_:": reads a blank node label.
  std::string read_blank_label();
  // Reads PN_PREFIX? ':' PN_LOCAL?; returns {prefix, local}.
  std::pair<std::string, std::string> read_pname();
  // At [+-]?digit: reads an integer.
  std::string read_integer();
  // At a letter or '@': reads a language tag after '@'.
  std::string read_langtag();

  bool at_pname_start() const;
  bool at_integer_start() const;

  std::string expand(const PrefixMap& prefixes, const std::string& prefix,
                     const std::string& local, std::size_t line, std::size_t column) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool is_name_start(char c);
bool is_name_char(char c);

}  // namespace shexd::detail
