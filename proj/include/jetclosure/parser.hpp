#pragma once

#include <string_view>

#include "jetclosure/polynomial.hpp"

namespace jetclosure {

/// Largest exponent literal accepted by the parser, and the largest total
/// degree a parsed power may reach.
inline constexpr std::uint32_t kMaxParsedDegree = 10000;

/// Parses a polynomial expression over `ring`.
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*     -- '/' only by a nonzero constant
///   factor  := primary ['^' integer]
///   primary := integer | variable | '(' expr ')'
///
/// Variable names may carry a jet suffix (`x@3`). Juxtaposition is not
/// multiplication. Throws ParseError with the offending byte offset.
Polynomial parse_polynomial(std::string_view text, const Ring& ring,
                            const MonomialOrder& order = MonomialOrder::degrevlex());

}  // namespace jetclosure
