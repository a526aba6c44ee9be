#pragma once

#include <string>
#include <string_view>

#include "shexd/schema.hpp"

namespace shexd {

// Project JSON form:
//   {"shapes": {label: {"closed": bool, "closedInv": bool,
//                       "extra": ["<iri>" | "^<iri>", ...], "expr": node}},
//    "prefixes": {prefix: namespace}}            ("prefixes" is optional)
// node := {"kind": "empty"}
//       | {"kind": "tc", "id": n, "inverse": bool, "property": iri, "valueClass": [atomic...]}
//       | {"kind": "someOf" | "group", "exprs": [node...]}
//       | {"kind": "repeat", "min": n, "max": n | "*", "expr": node}
// atomic := {"kind": "values", "values": [value...]} | {"kind": "datatype", "datatype": iri}
//         | {"kind": "nodeKind", "nodeKind": "IRI" | "BNode" | "Literal" | "NonLiteral"}
//         | {"kind": "shape", "label": label, "negated": bool}
// value := {"iri": iri} | {"blank": true} | {"literal": lex, "datatype": iri, "lang": tag?}
std::string schema_to_json(const Schema& schema);

// Throws SchemaJsonError naming the JSON path of the offending element.
Schema json_to_schema(std::string_view text);

}  // namespace shexd
