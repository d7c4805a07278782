#pragma once

#include <map>
#include <string>
#include <vector>

#include "linarr/scalar.hpp"

namespace linarr {

/// Parse a scalar expression: integers, fractions p/q, primitive roots
/// of unity z(n), sums, differences, products, powers and parentheses.
/// Throws ParseError with a character position on malformed input.
Scalar parse_scalar(const std::string& expr);

enum class InputKind { points, lines, catalog };

/// Parsed form of the .pts/.arr text format: a header line
/// ("points:" | "lines:" | "catalog: <name> <key=value>..."), one
/// bracketed coordinate triple per entry line, '#' comments.
struct InputDocument {
    InputKind kind = InputKind::points;
    std::vector<std::array<Scalar, 3>> entries;
    std::string catalog_name;
    std::map<std::string, std::string> catalog_params;
    std::string label;
};

InputDocument parse_document(const std::string& text);

/// Split "a,b,c" at commas that are not nested in parentheses.
std::vector<std::string> split_top_level(const std::string& s, char sep);

} // namespace linarr
