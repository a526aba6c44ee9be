#pragma once

#include <string>
#include <string_view>

#include "shexd/schema.hpp"

namespace shexd {

// Parses the ShExC subset:
//
//   schema     := (PREFIX pname IRIREF | @prefix pname IRIREF '.')* shape+
//   shape      := '<' label '>' modifier* '{' expr? '}'
//   modifier   := CLOSED | ^CLOSED | EXTRA dirprop+
//   expr       := group ('|' group)*
//   group      := unary (',' unary)*
//   unary      := primary card?
//   primary    := '(' expr ')' | EMPTY | dirprop valueclass
//   valueclass := '.' | atomic (AND atomic)*
//   atomic     := '@' '<' label '>' | '!' '@' '<' label '>' | IRI | BNode | Literal
//               | NonLiteral | '(' value* ')' | datatype-iri
//   card       := '*' | '+' | '?' | '[' n ';' (n | '*') ']'
//
// Triple constraints are numbered C1, C2, ... per shape in source order.
// Throws SyntaxError, UnknownPrefix, DuplicateShapeLabel,
// UndefinedShapeReference.
Schema parse_schema(std::string_view text);

// Renders a schema back to ShExC; re-parsing yields an equal schema.
std::string to_shexc(const Schema& schema);

std::string expr_to_shexc(const ShapeExpr& expr, const PrefixMap& prefixes = {});

}  // namespace shexd
