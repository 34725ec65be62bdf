#pragma once

#include <string>
#include <string_view>

#include "lpa/multivector.hpp"

namespace lpa {

// Grammar (whitespace-insensitive):
//   multivector := ['+'|'-'] term (('+'|'-') term)* | '0'
//   term        := real ['*' blade] | blade
//   blade       := 'e' index+          indices strictly ascending
// Indices 0-9 are written as digits, 10-15 as a-f.
Multivector parse_multivector(std::string_view text, const Algebra& alg);

// Compact canonical text: terms ordered by grade then index mask, unit
// coefficients written as the bare blade, numbers in shortest round-trip
// form. parse_multivector(format_multivector(x)) == x exactly.
std::string format_multivector(const Multivector& mv);

std::string blade_token(Blade blade);

}  // namespace lpa
