#pragma once

#include "dgkernel/dsl/ast.hpp"

namespace dgk {
namespace dsl {

/// Lexes and parses UTF-8 DSL text; throws ParseError with line/column on
/// lexical and syntactic problems, and on resolution problems (duplicate or
/// unresolved names, incomplete multiplication tables).
SpecFile parse_spec(const std::string& text);

/// Canonical pretty-printer; parse(print(parse(t))) == parse(t).
std::string print_spec(const SpecFile& spec);

} // namespace dsl
} // namespace dgk
