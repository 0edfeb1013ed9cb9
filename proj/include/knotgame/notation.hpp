#pragma once

#include <string>
#include <string_view>

#include "knotgame/tangle.hpp"

namespace knotgame {

// Text grammar:
//   diagram := "[" region ("," region)* "]" | "[]"
//   region  := int | "(" uint ")" | int "(" uint ")"
//   sum     := diagram ("#" diagram)*
// Whitespace is insignificant. All parse failures throw Error{ParseError}.

RationalPseudodiagram parse_diagram(std::string_view text);
SumPosition parse_position(std::string_view text);

std::string to_string(const TwistRegion& region);
std::string to_string(const RationalPseudodiagram& diagram);
std::string to_string(const SumPosition& position);
std::string to_string(const MoveDescriptor& move);

}  // namespace knotgame
