#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "jk/lie/algebra.hpp"

namespace jk::lie {

// Nested bracket notation of a basis element, e.g. "[[a1,b1],b1]".
std::string basis_string(const LieContext& ctx, BasisKey k);

// Renders terms in ascending basis order the way the reference Sage session
// prints them: "a1+(-1/2)*[a1,b1]+(1/12)*[[a1,b1],b1]"; the lowest term gets
// a bare bracket only when its coefficient is 1, otherwise "0+(c)*...".
std::string display(const LieElement& x);

// {"genus":g,"max_degree":N,"terms":[{"word":[1,4],"bracket":"[a1,b1]","num":"-1","den":"2"},...]}
// Letters in "word" are 1-based with b_i = g + i.
nlohmann::json to_json(const LieElement& x);

// Parses a rational combination of bracket expressions, e.g.
// "-[a1,b1] + 1/2*[[a1,b1],a2] - [[a1,b1],(b2+b3)]". Whitespace is ignored.
LieElement parse_lie(const LieContext& ctx, std::string_view text);

}  // namespace jk::lie
