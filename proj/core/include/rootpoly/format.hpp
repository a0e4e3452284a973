#pragma once

#include <string>

#include "rootpoly/poly.hpp"

namespace rootpoly {

// Comma-separated ascending coefficients: "0,0,3,0,0,11" is 3X^2 + 11X^5.
// Accepts surrounding whitespace, signed values (reduced mod p), and the
// JSON-array spelling "[0,0,3]". Throws ParseError on anything else.
DensePoly parse_poly_text(const std::string& text, u64 p);

// Inverse of parse_poly_text; zero polynomial prints as "0".
std::string poly_to_text(const DensePoly& f);

// Resolves "@path" arguments to file contents (for long coefficient lists),
// returns other strings unchanged. Throws ParseError if the file is unreadable.
std::string resolve_arg(const std::string& arg);

} // namespace rootpoly
