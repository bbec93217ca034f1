#pragma once

#include <string>
#include <string_view>

#include "grasspi/freealg.hpp"
#include "grasspi/grassmann.hpp"

namespace grasspi {

/// Parses
///   expr   := term (('+'|'-') term)*        (a leading sign is allowed)
///   term   := factor ('*' factor)*
///   factor := base ['^' int]
///   base   := 'x' int | int | 't' | '(' expr ')' | '[' expr (',' expr)+ ']'
/// Brackets are left-normed commutators; 't' is the adjoined root of an
/// extension field. Throws ParseError with the offending position.
FreePoly parse_poly(std::string_view text, const FieldPtr& field);

/// Terms by descending length-lex order, e.g. "x1^2*x2 + 2*x2*x1^2 + 1".
/// parse_poly(format_poly(f)) == f.
std::string format_poly(const FreePoly& f);

}  // namespace grasspi
